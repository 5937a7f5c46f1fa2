#include "sst/inference.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sst::inference {
namespace {

struct ContainsIndex {
    // canonical container -> (member -> containment links)
    std::map<NodeId, std::map<NodeId, std::vector<Link>>> members_of;
};

ContainsIndex contains_index(const Graph& g) {
    ContainsIndex index;
    for (const Link& stored : g.links()) {
        if (stored.typ.family() != LinkFamily::C) continue;
        Link l = canonical(stored);
        if (l.src == l.dst) continue;  // a pumping self-loop is not membership
        index.members_of[l.src][l.dst].push_back(l);
    }
    return index;
}

bool near_linked(const Graph& g, NodeId a, NodeId b) {
    for (const Link& l : g.links()) {
        if (!l.typ.is_symmetric()) continue;
        if ((l.src == a && l.dst == b) || (l.src == b && l.dst == a)) return true;
    }
    return false;
}

std::vector<std::pair<NodeId, Link>> expressed_properties(const Graph& g, NodeId subject) {
    std::vector<std::pair<NodeId, Link>> out;
    for (const Link& stored : g.links()) {
        if (stored.typ.family() != LinkFamily::E) continue;
        Link l = canonical(stored);
        if (l.src == subject) out.emplace_back(l.dst, l);
    }
    return out;
}

void stable_order(const Graph& g, std::vector<Hypothesis>& hs) {
    auto node_key = [&](NodeId id) {
        const Node& n = g.node(id);
        return std::make_pair(n.meta, n.proper_name);
    };
    std::sort(hs.begin(), hs.end(), [&](const Hypothesis& a, const Hypothesis& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        std::vector<std::pair<MetaType, std::string>> ka, kb;
        for (NodeId id : a.subjects) ka.push_back(node_key(id));
        for (NodeId id : b.subjects) kb.push_back(node_key(id));
        if (ka != kb) return ka < kb;
        auto sa = a.scope ? std::optional(node_key(*a.scope)) : std::nullopt;
        auto sb = b.scope ? std::optional(node_key(*b.scope)) : std::nullopt;
        return sa < sb;
    });
}

std::vector<NodeId> ordered_pair(const Graph& g, NodeId a, NodeId b) {
    const Node& na = g.node(a);
    const Node& nb = g.node(b);
    if (std::make_pair(na.meta, na.proper_name) <= std::make_pair(nb.meta, nb.proper_name)) {
        return {a, b};
    }
    return {b, a};
}

}  // namespace

std::string_view to_string(HypothesisKind k) {
    switch (k) {
        case HypothesisKind::MightBeNear: return "might-be-near";
        case HypothesisKind::EventCopresence: return "event-copresence";
        case HypothesisKind::MightHaveProperty: return "might-have-property";
        case HypothesisKind::FunctionalEquivalence: return "functional-equivalence";
        case HypothesisKind::InvalidGeneralization: return "invalid-generalization";
    }
    return "?";
}

std::string_view to_string(Tier t) {
    return t == Tier::Possible ? "possible" : "invalid";
}

std::vector<Hypothesis> infer_proximity(const Graph& g) {
    std::vector<Hypothesis> out;
    ContainsIndex index = contains_index(g);
    for (const auto& [container, members] : index.members_of) {
        if (members.size() < 2) continue;
        std::vector<NodeId> ids;
        for (const auto& [id, links] : members) ids.push_back(id);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                if (near_linked(g, ids[i], ids[j])) continue;
                Hypothesis h;
                h.kind = HypothesisKind::MightBeNear;
                h.subjects = ordered_pair(g, ids[i], ids[j]);
                h.basis.push_back(members.at(ids[i]).front());
                h.basis.push_back(members.at(ids[j]).front());
                h.scope = container;
                h.note = "on the scale of \"" + g.node(container).proper_name + "\"";
                out.push_back(std::move(h));
            }
        }
    }
    stable_order(g, out);
    return out;
}

std::vector<Hypothesis> infer_event_copresence(const Graph& g) {
    std::vector<Hypothesis> out;
    ContainsIndex index = contains_index(g);
    for (const auto& [container, members] : index.members_of) {
        if (g.node(container).meta != MetaType::Event) continue;
        std::vector<NodeId> things;
        for (const auto& [id, links] : members) {
            if (g.node(id).meta == MetaType::Thing) things.push_back(id);
        }
        if (things.size() < 2) continue;
        for (std::size_t i = 0; i < things.size(); ++i) {
            for (std::size_t j = i + 1; j < things.size(); ++j) {
                Hypothesis h;
                h.kind = HypothesisKind::EventCopresence;
                h.subjects = ordered_pair(g, things[i], things[j]);
                h.basis.push_back(members.at(things[i]).front());
                h.basis.push_back(members.at(things[j]).front());
                h.scope = container;
                h.note =
                    "near one another on the occasion of \"" + g.node(container).proper_name + "\"";
                out.push_back(std::move(h));
            }
        }
    }
    stable_order(g, out);
    return out;
}

std::vector<Hypothesis> infer_property_inheritance(const Graph& g) {
    std::vector<Hypothesis> out;
    ContainsIndex index = contains_index(g);

    // container expresses P  =>  members might have P
    for (const auto& [container, members] : index.members_of) {
        auto properties = expressed_properties(g, container);
        if (properties.empty()) continue;
        for (const auto& [member, links] : members) {
            for (const auto& [property, expr_link] : properties) {
                Hypothesis h;
                h.kind = HypothesisKind::MightHaveProperty;
                h.subjects = {member, property};
                h.basis = {expr_link, links.front()};
                h.scope = container;
                h.note = "inherited downward from \"" + g.node(container).proper_name + "\"";
                out.push_back(std::move(h));
            }
        }
    }

    // X expresses P and X near Y  =>  Y might have P (single hop)
    for (const Link& near : g.links()) {
        if (!near.typ.is_symmetric()) continue;
        for (auto [x, y] : {std::pair{near.src, near.dst}, std::pair{near.dst, near.src}}) {
            if (x == y) continue;
            for (const auto& [property, expr_link] : expressed_properties(g, x)) {
                Hypothesis h;
                h.kind = HypothesisKind::MightHaveProperty;
                h.subjects = {y, property};
                h.basis = {expr_link, near};
                h.note = "shared with its near neighbour \"" + g.node(x).proper_name + "\"";
                out.push_back(std::move(h));
            }
        }
    }
    stable_order(g, out);
    return out;
}

std::optional<Hypothesis> flag_invalid_generalization(const Graph& g, NodeId container,
                                                      NodeId property) {
    // an explicit independent basis makes the link a statement, not an
    // upward inference
    for (const Link& stored : g.links()) {
        if (stored.typ.family() != LinkFamily::E) continue;
        Link l = canonical(stored);
        if (l.src == container && l.dst == property) return std::nullopt;
    }

    ContainsIndex index = contains_index(g);
    auto it = index.members_of.find(container);
    if (it == index.members_of.end() || it->second.empty()) return std::nullopt;

    Hypothesis h;
    h.kind = HypothesisKind::InvalidGeneralization;
    h.tier = Tier::Invalid;
    h.subjects = {container, property};
    h.scope = container;

    std::size_t holders = 0;
    for (const auto& [member, links] : it->second) {
        bool has = false;
        for (const auto& [p, expr_link] : expressed_properties(g, member)) {
            if (p == property) {
                has = true;
                h.basis.push_back(expr_link);
            }
        }
        if (has) {
            ++holders;
            h.basis.push_back(links.front());
        }
    }
    if (holders == 0) return std::nullopt;  // nothing supports the proposal at all

    h.note = "a member's property does not generalize upward to its container";
    if (holders == it->second.size()) {
        h.note += " (unanimous members: induction, not deduction)";
    }
    return h;
}

std::vector<Hypothesis> infer_equivalence(const Graph& g) {
    std::vector<Hypothesis> out;
    for (LinkFamily family : all_families) {
        for (const auto& group : analysis::supernodes(g, family)) {
            Hypothesis h;
            h.kind = HypothesisKind::FunctionalEquivalence;
            h.subjects = group.members;
            for (const Link& stored : g.links()) {
                if (stored.typ.family() != family) continue;
                Link l = canonical(stored);
                bool touches = std::find(group.members.begin(), group.members.end(), l.src) !=
                                   group.members.end() ||
                               std::find(group.members.begin(), group.members.end(), l.dst) !=
                                   group.members.end();
                if (touches) h.basis.push_back(l);
            }
            h.note = "interchangeable for " + std::string(to_string(family)) + " flows";
            if (group.partial) {
                h.note += "; partial but not complete equivalence (differs on";
                for (LinkFamily f : group.differing_families) {
                    h.note += " " + std::string(to_string(f));
                }
                h.note += ")";
            }
            out.push_back(std::move(h));
        }
    }
    stable_order(g, out);
    return out;
}

std::vector<Hypothesis> infer_all(const Graph& g) {
    std::vector<Hypothesis> out;
    for (auto& h : infer_proximity(g)) out.push_back(std::move(h));
    for (auto& h : infer_event_copresence(g)) out.push_back(std::move(h));
    for (auto& h : infer_property_inheritance(g)) out.push_back(std::move(h));
    for (auto& h : infer_equivalence(g)) out.push_back(std::move(h));
    stable_order(g, out);
    return out;
}

}  // namespace sst::inference
