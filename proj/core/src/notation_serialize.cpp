#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "sst/notation.hpp"

namespace sst::notation {
namespace {

std::string fmt_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string quoted(std::string_view text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

std::string endpoint_text(const Endpoint& ep) {
    std::string out = quoted(ep.name);
    if (ep.meta) {
        out += ':';
        out += to_string(*ep.meta);
    }
    return out;
}

}  // namespace

std::string serialize(const Document& doc) {
    std::string out;
    for (const auto& stmt : doc.statements) {
        if (const auto* comment = std::get_if<Comment>(&stmt.value)) {
            out += "#" + comment->text;
        } else if (const auto* alias = std::get_if<AliasDecl>(&stmt.value)) {
            out += "alias " + quoted(alias->label) + " = " + alias->typ.token();
        } else if (const auto* node = std::get_if<NodeDecl>(&stmt.value)) {
            out += "node " + quoted(node->name) + " : " + std::string(to_string(node->meta));
            for (const auto& [k, v] : node->attrs) out += " " + k + "=" + quoted(v);
        } else if (const auto* link = std::get_if<LinkDecl>(&stmt.value)) {
            out += endpoint_text(link->src) + " (" + link->label + ") " +
                   endpoint_text(link->dst);
            if (link->weight) out += " weight " + fmt_real(*link->weight);
        }
        out += '\n';
    }
    return out;
}

std::string serialize(const Graph& g) {
    std::string out = "# semantic spacetime graph: " + std::to_string(g.node_count()) +
                      " nodes, " + std::to_string(g.link_count()) + " links\n";

    // Labels that need an alias declaration to survive a round trip. A label
    // used with two distinct types cannot be declared, and labels the grammar
    // cannot carry are dropped; such links fall back to the bare type token.
    auto representable = [](std::string_view label) {
        return label.find_first_of("()\r\n") == std::string_view::npos &&
               !AliasTable::normalize(label).empty();
    };
    std::map<std::string, std::set<SignedLinkType>> label_types;
    for (const Link& l : g.links()) {
        if (auto tok = SignedLinkType::parse(l.label); tok && *tok == l.typ) continue;
        if (!representable(l.label)) continue;
        label_types[AliasTable::normalize(l.label)].insert(l.typ);
    }
    for (const auto& [label, types] : label_types) {
        if (types.size() == 1) {
            out += "alias " + quoted(label) + " = " + types.begin()->token() + "\n";
        }
    }

    auto node_key = [&](NodeId id) {
        const Node& n = g.node(id);
        return std::make_pair(n.meta, n.proper_name);
    };

    for (NodeId id : g.canonical_order()) {
        const Node& n = g.node(id);
        out += "node " + quoted(n.proper_name) + " : " + std::string(to_string(n.meta));
        for (const auto& [k, v] : n.attributes) out += " " + k + "=" + quoted(v);
        out += '\n';
    }

    std::vector<Link> links(g.links().begin(), g.links().end());
    std::stable_sort(links.begin(), links.end(), [&](const Link& a, const Link& b) {
        auto ka = std::make_tuple(node_key(a.src), a.typ.family(), node_key(a.dst), a.label);
        auto kb = std::make_tuple(node_key(b.src), b.typ.family(), node_key(b.dst), b.label);
        return ka < kb;
    });
    for (const Link& l : links) {
        const Node& src = g.node(l.src);
        const Node& dst = g.node(l.dst);
        std::string label = l.label;
        auto it = label_types.find(AliasTable::normalize(label));
        bool declared = it != label_types.end() && it->second.size() == 1;
        if (auto tok = SignedLinkType::parse(label); (!tok || *tok != l.typ) && !declared) {
            label = l.typ.token();
        }
        out += quoted(src.proper_name) + ":" + std::string(to_string(src.meta)) + " (" + label +
               ") " + quoted(dst.proper_name) + ":" + std::string(to_string(dst.meta));
        if (l.weight != 1.0) out += " weight " + fmt_real(l.weight);
        out += '\n';
    }
    return out;
}

}  // namespace sst::notation
