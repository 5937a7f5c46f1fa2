// sst: batch front end for semantic spacetime graph files.
//
// Exit codes are a stable contract:
//   0 clean, 1 type violations, 2 parse errors, 3 I/O failure,
//   4 unknown export format.

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sst/analysis.hpp"
#include "sst/export.hpp"
#include "sst/inference.hpp"
#include "sst/json_io.hpp"
#include "sst/matrix.hpp"
#include "sst/notation.hpp"
#include "sst/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace sst;

constexpr int kExitClean = 0;
constexpr int kExitTypeViolations = 1;
constexpr int kExitParseErrors = 2;
constexpr int kExitIo = 3;
constexpr int kExitBadFormat = 4;

struct LoadedGraph {
    Graph graph;
    std::vector<notation::BuildDiagnostic> build_diagnostics;
    std::vector<notation::ParseError> parse_errors;
    std::size_t statement_count = 0;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buf.str();
}

bool write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(out_path, std::ios::binary);
    out << payload;
    return static_cast<bool>(out);
}

// Alias sources, weakest first: built-ins, ./.sst-aliases, $SST_ALIASES,
// --aliases. Only alias declarations are taken from these files.
std::optional<AliasTable> assemble_aliases(const std::string& flag_path, int& exit_code) {
    AliasTable table = AliasTable::defaults();
    std::vector<std::string> sources;
    if (std::ifstream probe(".sst-aliases"); probe.good()) sources.push_back(".sst-aliases");
    if (const char* env = std::getenv("SST_ALIASES"); env && *env) sources.push_back(env);
    if (!flag_path.empty()) sources.push_back(flag_path);

    for (const std::string& path : sources) {
        auto text = read_file(path);
        if (!text) {
            std::cerr << "sst: cannot read alias file " << path << "\n";
            exit_code = kExitIo;
            return std::nullopt;
        }
        auto parsed = notation::parse(*text, path);
        if (!parsed.ok()) {
            for (const auto& err : parsed.errors) {
                std::cerr << path << ":" << err.line << ":" << err.column << ": " << err.message
                          << "\n";
            }
            exit_code = kExitParseErrors;
            return std::nullopt;
        }
        AliasTable local;
        for (const auto& stmt : parsed.document.statements) {
            if (const auto* decl = std::get_if<notation::AliasDecl>(&stmt.value)) {
                local.add(decl->label, decl->typ);
            }
        }
        table = table.overlaid_with(local);
    }
    return table;
}

bool ends_with(const std::string& text, std::string_view suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loads either .sst notation or a canonical JSON graph document.
std::optional<LoadedGraph> load_graph(const std::string& path, const AliasTable& base,
                                      int& exit_code) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "sst: cannot read " << path << "\n";
        exit_code = kExitIo;
        return std::nullopt;
    }
    LoadedGraph loaded;
    if (ends_with(path, ".json")) {
        try {
            loaded.graph = json_io::graph_from_json_text(*text);
        } catch (const std::exception& e) {
            std::cerr << path << ": " << e.what() << "\n";
            exit_code = kExitParseErrors;
            return std::nullopt;
        }
        return loaded;
    }
    auto parsed = notation::parse(*text, path);
    loaded.parse_errors = parsed.errors;
    loaded.statement_count = parsed.document.statements.size();
    if (!parsed.ok()) return loaded;
    auto built = notation::build(parsed.document, base);
    loaded.graph = std::move(built.graph);
    loaded.build_diagnostics = std::move(built.diagnostics);
    return loaded;
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

ordered_json node_ref(const Graph& g, NodeId id) {
    const Node& n = g.node(id);
    return ordered_json{{"name", n.proper_name}, {"meta", std::string(to_string(n.meta))}};
}

ordered_json link_ref(const Graph& g, const Link& l) {
    ordered_json out;
    out["src"] = node_ref(g, l.src);
    out["type"] = l.typ.token();
    out["label"] = l.label;
    out["dst"] = node_ref(g, l.dst);
    out["weight"] = l.weight;
    return out;
}

class ReportBuilder {
public:
    ReportBuilder(std::string input) {
        report_["tool"] = "sst";
        report_["tool_version"] = std::string(sst::version);
        report_["generated_at"] = timestamp_utc();
        report_["input"] = std::move(input);
        report_["diagnostics"] = ordered_json::array();
        report_["sections"] = ordered_json::object();
    }

    void add_diagnostics(const LoadedGraph& loaded) {
        for (const auto& err : loaded.parse_errors) {
            report_["diagnostics"].push_back(ordered_json{{"kind", "parse-error"},
                                                          {"line", err.line},
                                                          {"column", err.column},
                                                          {"message", err.message},
                                                          {"offending_text", err.offending_text}});
        }
        for (const auto& diag : loaded.build_diagnostics) {
            report_["diagnostics"].push_back(
                ordered_json{{"kind", std::string(notation::to_string(diag.kind))},
                             {"line", diag.line},
                             {"message", diag.message}});
        }
    }

    ordered_json& section(const std::string& name) { return report_["sections"][name]; }

    std::string text() const { return report_.dump(2) + "\n"; }

private:
    ordered_json report_;
};

void print_diagnostics_brief(const std::string& path, const LoadedGraph& loaded) {
    for (const auto& err : loaded.parse_errors) {
        std::cerr << path << ":" << err.line << ":" << err.column << ": parse error: "
                  << err.message << "\n";
    }
    for (const auto& diag : loaded.build_diagnostics) {
        std::cerr << path << ":" << diag.line << ": " << notation::to_string(diag.kind) << ": "
                  << diag.message << "\n";
    }
}

int exit_for(const LoadedGraph& loaded) {
    if (!loaded.parse_errors.empty()) return kExitParseErrors;
    if (!loaded.build_diagnostics.empty()) return kExitTypeViolations;
    return kExitClean;
}

std::vector<LinkFamily> families_for(const std::string& flag) {
    if (flag == "all") return {LinkFamily::N, LinkFamily::L, LinkFamily::C, LinkFamily::E};
    return {*parse_family(flag)};
}

// ---- subcommand payloads ---------------------------------------------------

void fill_validate(ordered_json& section, const LoadedGraph& loaded) {
    section["statements"] = loaded.statement_count;
    section["nodes"] = loaded.graph.node_count();
    section["links"] = loaded.graph.link_count();
    section["clean"] =
        loaded.parse_errors.empty() && loaded.build_diagnostics.empty();
}

void fill_lint(ordered_json& section, const Graph& g) {
    auto warnings = ordered_json::array();

    // would-be upward generalizations: members express P, the container does not
    std::set<std::pair<NodeId, NodeId>> proposals;
    for (const Link& stored : g.links()) {
        if (stored.typ.family() != LinkFamily::C) continue;
        Link contain = canonical(stored);
        for (const Link& expr_stored : g.links()) {
            if (expr_stored.typ.family() != LinkFamily::E) continue;
            Link expr = canonical(expr_stored);
            if (expr.src == contain.dst) proposals.emplace(contain.src, expr.dst);
        }
    }
    for (auto [container, property] : proposals) {
        auto flagged = inference::flag_invalid_generalization(g, container, property);
        if (!flagged) continue;
        warnings.push_back(ordered_json{
            {"kind", "upward-generalization"},
            {"container", node_ref(g, container)},
            {"property", node_ref(g, property)},
            {"message", "generalizing \"" + g.node(property).proper_name + "\" from members up to \"" +
                            g.node(container).proper_name + "\" would be invalid: " + flagged->note}});
    }

    for (const Link& l : g.links()) {
        if (l.typ.is_symmetric() && g.node(l.src).meta == MetaType::Thing &&
            g.node(l.dst).meta == MetaType::Thing && l.src != l.dst) {
            warnings.push_back(ordered_json{
                {"kind", "thing-similarity"},
                {"subjects", ordered_json::array({node_ref(g, l.src), node_ref(g, l.dst)})},
                {"message",
                 "two things linked as similar; if the likeness is representational, express the "
                 "compared aspect as a concept on each thing instead"}});
        }
        if (l.src == l.dst) {
            warnings.push_back(
                ordered_json{{"kind", "self-loop"},
                             {"subjects", ordered_json::array({node_ref(g, l.src)})},
                             {"message", "self-referential (pumping) loop on \"" +
                                             g.node(l.src).proper_name + "\""}});
        }
    }
    section["warnings"] = std::move(warnings);
}

void fill_rank(ordered_json& section, const Graph& g, const std::string& family_flag,
               std::optional<double> damping, double tol, int max_iter) {
    section["family"] = family_flag;
    section["damping"] = damping ? ordered_json(*damping) : ordered_json(nullptr);
    section["tol"] = tol;
    section["max_iter"] = max_iter;
    auto warnings = ordered_json::array();

    std::optional<LinkFamily> filter;
    if (family_flag != "all") filter = *parse_family(family_flag);
    matrix::AdjacencyView a = matrix::adjacency(g, filter);

    bool all_zero = true;
    for (double x : a.entries) {
        if (x != 0.0) all_zero = false;
    }
    if (a.n == 0 || all_zero) {
        warnings.push_back("graph has no links of the selected family; ranking skipped");
        section["warnings"] = std::move(warnings);
        section["ranking"] = ordered_json::array();
        return;
    }

    matrix::SpectralResult result = matrix::principal_eigenvector(a, damping, tol, max_iter);
    section["eigenvalue"] = result.eigenvalue;
    section["iterations"] = result.iterations;
    // a collapsed iterate has no meaningful residual
    section["residual"] = std::isfinite(result.residual) ? ordered_json(result.residual)
                                                         : ordered_json(nullptr);
    section["damped"] = result.damped;
    switch (result.status) {
        case matrix::SpectralStatus::Converged:
            section["status"] = "converged";
            break;
        case matrix::SpectralStatus::NonConvergence:
            section["status"] = "non-convergence";
            warnings.push_back("power iteration did not reach the tolerance; best iterate shown");
            break;
        case matrix::SpectralStatus::DegenerateZero:
            section["status"] = "degenerate-zero";
            warnings.push_back(
                "absorbing nodes detected: undamped iteration drained to zero; pass --damping "
                "(e.g. 0.85) to pump the flow");
            break;
    }
    auto report = matrix::singularity_report(a);
    if (!report.zero_rows.empty() && !damping) {
        warnings.push_back("adjacency has zero rows (sinks); undamped ranking is unreliable");
    }

    std::vector<std::size_t> idx(a.n);
    for (std::size_t i = 0; i < a.n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        if (result.vector.values[x] != result.vector.values[y]) {
            return result.vector.values[x] > result.vector.values[y];
        }
        return x < y;
    });
    auto ranking = ordered_json::array();
    for (std::size_t i : idx) {
        ordered_json row = node_ref(g, a.node_order[i]);
        row["value"] = result.vector.values[i];
        ranking.push_back(std::move(row));
    }
    section["ranking"] = std::move(ranking);
    section["warnings"] = std::move(warnings);
}

void fill_entropy(ordered_json& section, const Graph& g, const std::string& family_flag) {
    auto families = ordered_json::object();
    for (LinkFamily family : families_for(family_flag)) {
        auto rows = ordered_json::array();
        for (NodeId id : g.canonical_order()) {
            bool incident = false;
            for (const Link& l : g.links()) {
                if (l.typ.family() == family && (l.src == id || l.dst == id)) incident = true;
            }
            if (!incident) continue;
            ordered_json row = node_ref(g, id);
            row["delta"] = matrix::node_entropy_delta(g, id, family);
            rows.push_back(std::move(row));
        }
        families[std::string(to_string(family))] = std::move(rows);
    }
    section["families"] = std::move(families);
}

void fill_analyze(ordered_json& section, const Graph& g, const std::string& family_flag) {
    auto families = ordered_json::object();
    for (LinkFamily family : families_for(family_flag)) {
        ordered_json entry;

        auto roles = ordered_json::array();
        for (const auto& record : analysis::classify_roles(g, family)) {
            ordered_json row = node_ref(g, record.node);
            auto names = ordered_json::array();
            for (analysis::Role r : record.roles) names.push_back(std::string(to_string(r)));
            row["roles"] = std::move(names);
            roles.push_back(std::move(row));
        }
        entry["roles"] = std::move(roles);

        auto regions = ordered_json::array();
        for (const auto& region : analysis::absorbing_regions(g, family)) {
            auto nodes = ordered_json::array();
            for (NodeId id : region.nodes) nodes.push_back(node_ref(g, id));
            regions.push_back(ordered_json{{"nodes", std::move(nodes)}});
        }
        entry["absorbing_regions"] = std::move(regions);

        auto groups = ordered_json::array();
        for (const auto& group : analysis::supernodes(g, family)) {
            auto members = ordered_json::array();
            for (NodeId id : group.members) members.push_back(node_ref(g, id));
            auto differing = ordered_json::array();
            for (LinkFamily f : group.differing_families) {
                differing.push_back(std::string(to_string(f)));
            }
            groups.push_back(ordered_json{{"members", std::move(members)},
                                          {"partial", group.partial},
                                          {"differing_families", std::move(differing)},
                                          {"signature", group.signature}});
        }
        entry["supernodes"] = std::move(groups);
        families[std::string(to_string(family))] = std::move(entry);
    }
    section["families"] = std::move(families);
}

void fill_infer(ordered_json& section, const Graph& g) {
    auto rows = ordered_json::array();
    for (const auto& h : inference::infer_all(g)) {
        ordered_json row;
        row["kind"] = std::string(inference::to_string(h.kind));
        row["tier"] = std::string(inference::to_string(h.tier));
        auto subjects = ordered_json::array();
        for (NodeId id : h.subjects) subjects.push_back(node_ref(g, id));
        row["subjects"] = std::move(subjects);
        row["scope"] = h.scope ? node_ref(g, *h.scope) : ordered_json(nullptr);
        row["note"] = h.note;
        auto basis = ordered_json::array();
        for (const Link& l : h.basis) basis.push_back(link_ref(g, l));
        row["basis"] = std::move(basis);
        rows.push_back(std::move(row));
    }
    section["hypotheses"] = std::move(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic spacetime graph tool"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sst::version));

    std::string input, out_path, aliases_path;
    std::string format = "dot";
    std::string family_flag = "all";
    std::optional<double> damping;
    double tol = 1e-9;
    int max_iter = 10000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", input, "input .sst file (or canonical .json graph)")->required();
        cmd->add_option("--aliases", aliases_path, "extra alias declarations (.sst)");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and type-check a graph file");
    add_common(validate);

    CLI::App* lint = app.add_subcommand(
        "lint", "validate plus modelling advisories (upward generalizations, thing-thing "
                "similarity, self-loops)");
    add_common(lint);

    CLI::App* export_cmd = app.add_subcommand("export", "export the graph");
    add_common(export_cmd);
    export_cmd->add_option("--format", format, "dot | json | csv-adjacency");
    export_cmd->add_option("--family", family_flag, "L | C | E | N | all (dot and csv only)");

    CLI::App* rank = app.add_subcommand(
        "rank", "principal-eigenvector importance ranking (defaults: tol 1e-9, max-iter 10000, "
                "undamped unless --damping is given; singularity threshold 1e-12)");
    add_common(rank);
    rank->add_option("--family", family_flag, "L | C | E | N | all");
    rank->add_option("--damping", damping,
                     "damping factor in (0,1): iterate d*A^T + (1-d)/n * ones");
    rank->add_option("--tol", tol, "residual tolerance (default 1e-9)");
    rank->add_option("--max-iter", max_iter, "iteration cap (default 10000)");

    CLI::App* entropy = app.add_subcommand(
        "entropy", "per-node entropy change between incoming and outgoing flow");
    add_common(entropy);
    entropy->add_option("--family", family_flag, "L | C | E | N | all");

    CLI::App* analyze =
        app.add_subcommand("analyze", "roles, absorbing regions and supernodes per family");
    add_common(analyze);
    analyze->add_option("--family", family_flag, "L | C | E | N | all");

    CLI::App* infer = app.add_subcommand("infer", "possibility hypotheses (\"might\" relations)");
    add_common(infer);

    CLI11_PARSE(app, argc, argv);

    if (family_flag != "all" && !parse_family(family_flag)) {
        std::cerr << "sst: unknown family \"" << family_flag << "\" (use L, C, E, N or all)\n";
        return kExitBadFormat;
    }

    int exit_code = kExitClean;
    auto aliases = assemble_aliases(aliases_path, exit_code);
    if (!aliases) return exit_code;
    auto loaded = load_graph(input, *aliases, exit_code);
    if (!loaded) return exit_code;
    print_diagnostics_brief(input, *loaded);

    if (export_cmd->parsed()) {
        if (exit_for(*loaded) != kExitClean) return exit_for(*loaded);
        std::optional<LinkFamily> filter;
        if (family_flag != "all") filter = *parse_family(family_flag);
        std::string payload;
        if (format == "dot") {
            if (filter) {
                Graph sub(loaded->graph.aliases());
                std::map<std::uint32_t, NodeId> remap;
                for (const Node& n : loaded->graph.nodes()) {
                    remap[n.id.value] = sub.add_node(n.proper_name, n.meta, n.attributes);
                }
                for (const Link& l : loaded->graph.links()) {
                    if (l.typ.family() == *filter) {
                        sub.add_link(remap.at(l.src.value), l.typ, remap.at(l.dst.value),
                                     l.weight, l.label);
                    }
                }
                payload = exports::to_dot(sub);
            } else {
                payload = exports::to_dot(loaded->graph);
            }
        } else if (format == "json") {
            payload = json_io::to_json_text(loaded->graph);
        } else if (format == "csv-adjacency") {
            payload = exports::to_csv_adjacency(loaded->graph, filter);
        } else {
            std::cerr << "sst: unknown export format \"" << format
                      << "\" (use dot, json or csv-adjacency)\n";
            return kExitBadFormat;
        }
        if (!write_output(out_path, payload)) {
            std::cerr << "sst: cannot write output\n";
            return kExitIo;
        }
        return kExitClean;
    }

    ReportBuilder report(input);
    report.add_diagnostics(*loaded);

    if (validate->parsed()) {
        fill_validate(report.section("validate"), *loaded);
    } else if (lint->parsed()) {
        fill_validate(report.section("validate"), *loaded);
        fill_lint(report.section("lint"), loaded->graph);
    } else if (exit_for(*loaded) != kExitClean) {
        // analysis commands require a valid file
        if (!write_output(out_path, report.text())) return kExitIo;
        return exit_for(*loaded);
    } else if (rank->parsed()) {
        fill_rank(report.section("rank"), loaded->graph, family_flag, damping, tol, max_iter);
    } else if (entropy->parsed()) {
        fill_entropy(report.section("entropy"), loaded->graph, family_flag);
    } else if (analyze->parsed()) {
        fill_analyze(report.section("analyze"), loaded->graph, family_flag);
    } else if (infer->parsed()) {
        fill_infer(report.section("infer"), loaded->graph);
    }

    if (!write_output(out_path, report.text())) {
        std::cerr << "sst: cannot write output\n";
        return kExitIo;
    }
    return exit_for(*loaded);
}
