#include "sst/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace sst::json_io {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string sign_of(SignedLinkType typ) {
    switch (typ.orientation()) {
        case Orientation::Forward: return "+";
        case Orientation::Reverse: return "-";
        case Orientation::Symmetric: return "0";
    }
    return "?";
}

SignedLinkType type_from(const std::string& family, const std::string& sign) {
    auto fam = parse_family(family);
    if (!fam) throw std::runtime_error("unknown link family \"" + family + "\"");
    if (*fam == LinkFamily::N) {
        if (sign != "0") throw std::runtime_error("N links must carry sign \"0\"");
        return SignedLinkType::near();
    }
    if (sign == "+") return SignedLinkType::forward(*fam);
    if (sign == "-") return SignedLinkType::reverse(*fam);
    throw std::runtime_error("unknown link sign \"" + sign + "\"");
}

}  // namespace

std::string to_json_text(const Graph& g) {
    ordered_json doc;
    std::vector<NodeId> order = g.canonical_order();
    std::vector<std::size_t> index(g.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i].value] = i;

    doc["nodes"] = ordered_json::array();
    for (NodeId id : order) {
        const Node& n = g.node(id);
        ordered_json jn;
        jn["name"] = n.proper_name;
        jn["meta"] = std::string(to_string(n.meta));
        jn["attrs"] = ordered_json::object();
        for (const auto& [k, v] : n.attributes) jn["attrs"][k] = v;
        doc["nodes"].push_back(std::move(jn));
    }

    auto node_key = [&](NodeId id) {
        const Node& n = g.node(id);
        return std::make_pair(n.meta, n.proper_name);
    };
    std::vector<Link> links(g.links().begin(), g.links().end());
    std::stable_sort(links.begin(), links.end(), [&](const Link& a, const Link& b) {
        auto ka = std::make_tuple(node_key(a.src), a.typ.family(), node_key(a.dst), a.label,
                                  a.typ.orientation());
        auto kb = std::make_tuple(node_key(b.src), b.typ.family(), node_key(b.dst), b.label,
                                  b.typ.orientation());
        return ka < kb;
    });

    doc["links"] = ordered_json::array();
    for (const Link& l : links) {
        ordered_json jl;
        jl["src"] = index[l.src.value];
        jl["dst"] = index[l.dst.value];
        jl["family"] = std::string(to_string(l.typ.family()));
        jl["sign"] = sign_of(l.typ);
        jl["label"] = l.label;
        jl["weight"] = l.weight;
        doc["links"].push_back(std::move(jl));
    }

    doc["aliases"] = ordered_json::object();
    for (const auto& [label, typ] : g.aliases().entries()) {
        doc["aliases"][label] = typ.token();
    }
    return doc.dump(2) + "\n";
}

Graph graph_from_json_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }

    AliasTable aliases;
    if (doc.contains("aliases")) {
        for (const auto& [label, token] : doc.at("aliases").items()) {
            auto typ = SignedLinkType::parse(token.get<std::string>());
            if (!typ) throw std::runtime_error("unknown alias type token for \"" + label + "\"");
            aliases.add(label, *typ);
        }
    }

    Graph g(aliases);
    std::vector<NodeId> order;
    for (const auto& jn : doc.at("nodes")) {
        auto meta = parse_meta(jn.at("meta").get<std::string>());
        if (!meta) throw std::runtime_error("unknown meta-type in node record");
        AttrMap attrs;
        if (jn.contains("attrs")) {
            for (const auto& [k, v] : jn.at("attrs").items()) attrs[k] = v.get<std::string>();
        }
        order.push_back(g.add_node(jn.at("name").get<std::string>(), *meta, std::move(attrs)));
    }

    if (doc.contains("links")) {
        for (const auto& jl : doc.at("links")) {
            std::size_t src = jl.at("src").get<std::size_t>();
            std::size_t dst = jl.at("dst").get<std::size_t>();
            if (src >= order.size() || dst >= order.size()) {
                throw std::runtime_error("link endpoint index out of range");
            }
            SignedLinkType typ = type_from(jl.at("family").get<std::string>(),
                                           jl.at("sign").get<std::string>());
            LinkResult added =
                g.add_link(order[src], typ, order[dst], jl.value("weight", 1.0),
                           jl.value("label", std::string{}));
            if (!ok(added)) {
                throw std::runtime_error("rejected link record: " +
                                         std::get<LinkError>(added).message);
            }
        }
    }
    return g;
}

}  // namespace sst::json_io
