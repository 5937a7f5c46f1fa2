#include "sst/export.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace sst::exports {
namespace {

std::string fmt_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string dot_escape(std::string_view text) {
    std::string out;
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string_view meta_shape(MetaType m) {
    switch (m) {
        case MetaType::Event: return "ellipse";
        case MetaType::Thing: return "box";
        case MetaType::Concept: return "diamond";
    }
    return "ellipse";
}

std::string_view family_style(LinkFamily f) {
    switch (f) {
        case LinkFamily::L: return "color=black";
        case LinkFamily::C: return "color=blue style=bold";
        case LinkFamily::E: return "color=gray40 style=dashed";
        case LinkFamily::N: return "color=forestgreen style=dotted dir=none";
    }
    return "";
}

std::string csv_quote(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::string out = "digraph sst {\n  rankdir=LR;\n";
    std::vector<NodeId> order = g.canonical_order();
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i].value] = i;

    for (std::size_t i = 0; i < order.size(); ++i) {
        const Node& n = g.node(order[i]);
        out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(n.proper_name) +
               "\" shape=" + std::string(meta_shape(n.meta)) + "];\n";
    }

    auto node_key = [&](NodeId id) {
        const Node& n = g.node(id);
        return std::make_pair(n.meta, n.proper_name);
    };
    std::vector<Link> links;
    for (const Link& stored : g.links()) links.push_back(canonical(stored));
    std::stable_sort(links.begin(), links.end(), [&](const Link& a, const Link& b) {
        auto ka = std::make_tuple(node_key(a.src), a.typ.family(), node_key(a.dst), a.label);
        auto kb = std::make_tuple(node_key(b.src), b.typ.family(), node_key(b.dst), b.label);
        return ka < kb;
    });

    for (const Link& l : links) {
        out += "  n" + std::to_string(index[l.src.value]) + " -> n" +
               std::to_string(index[l.dst.value]) + " [label=\"" + dot_escape(l.label) + "\" " +
               std::string(family_style(l.typ.family()));
        if (l.weight != 1.0) out += " weight=" + fmt_real(l.weight);
        out += "];\n";
    }
    out += "}\n";
    return out;
}

std::string to_csv_adjacency(const Graph& g, std::optional<LinkFamily> family) {
    matrix::AdjacencyView a = matrix::adjacency(g, family);
    std::string out;
    for (std::size_t j = 0; j < a.n; ++j) {
        if (j) out += ',';
        out += csv_quote(g.node(a.node_order[j]).proper_name);
    }
    out += '\n';
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < a.n; ++j) {
            if (j) out += ',';
            out += fmt_real(a.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace sst::exports
