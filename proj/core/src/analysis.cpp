#include "sst/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sst::analysis {
namespace {

// Family subgraph in canonical orientation. N links are incident in both
// roles at both endpoints.
struct FamilyView {
    std::vector<NodeId> participants;  // canonical order
    std::map<NodeId, std::vector<NodeId>> out, in;     // with multiplicity
    std::map<NodeId, std::map<NodeId, double>> out_w, in_w;
};

FamilyView family_view(const Graph& g, LinkFamily family) {
    FamilyView view;
    std::set<NodeId> seen;
    auto touch = [&](NodeId id) { seen.insert(id); };

    for (const Link& stored : g.links()) {
        if (stored.typ.family() != family) continue;
        Link l = canonical(stored);
        touch(l.src);
        touch(l.dst);
        view.out[l.src].push_back(l.dst);
        view.in[l.dst].push_back(l.src);
        view.out_w[l.src][l.dst] += l.weight;
        view.in_w[l.dst][l.src] += l.weight;
        if (l.typ.is_symmetric()) {
            view.out[l.dst].push_back(l.src);
            view.in[l.src].push_back(l.dst);
            view.out_w[l.dst][l.src] += l.weight;
            view.in_w[l.src][l.dst] += l.weight;
        }
    }
    for (NodeId id : g.canonical_order()) {
        if (seen.count(id)) view.participants.push_back(id);
    }
    return view;
}

std::vector<NodeId> sorted_unique(std::vector<NodeId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

// Iterative Tarjan over a neighbour map restricted to `nodes`.
std::vector<std::vector<NodeId>> strongly_connected_components(
    const std::vector<NodeId>& nodes, const std::map<NodeId, std::vector<NodeId>>& succ) {
    std::map<NodeId, int> index, low;
    std::map<NodeId, bool> on_stack;
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> components;
    int counter = 0;

    struct Frame {
        NodeId node;
        std::size_t next_child = 0;
    };

    for (NodeId root : nodes) {
        if (index.count(root)) continue;
        std::vector<Frame> frames{{root}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& frame = frames.back();
            auto it = succ.find(frame.node);
            const std::vector<NodeId> empty;
            const std::vector<NodeId>& children = it == succ.end() ? empty : it->second;
            if (frame.next_child < children.size()) {
                NodeId child = children[frame.next_child++];
                if (!index.count(child)) {
                    index[child] = low[child] = counter++;
                    stack.push_back(child);
                    on_stack[child] = true;
                    frames.push_back(Frame{child});
                } else if (on_stack[child]) {
                    low[frame.node] = std::min(low[frame.node], index[child]);
                }
            } else {
                NodeId done = frame.node;
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().node] = std::min(low[frames.back().node], low[done]);
                }
                if (low[done] == index[done]) {
                    std::vector<NodeId> component;
                    while (true) {
                        NodeId member = stack.back();
                        stack.pop_back();
                        on_stack[member] = false;
                        component.push_back(member);
                        if (member == done) break;
                    }
                    components.push_back(sorted_unique(std::move(component)));
                }
            }
        }
    }
    return components;
}

}  // namespace

std::string_view to_string(Role r) {
    switch (r) {
        case Role::Source: return "source";
        case Role::Sink: return "sink";
        case Role::Appointed: return "appointed";
        case Role::Appointing: return "appointing";
        case Role::Hub: return "hub";
        case Role::Authority: return "authority";
        case Role::Central: return "central";
    }
    return "?";
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::TerminatedAtSink: return "terminated-at-sink";
        case Termination::CycleDetected: return "cycle-detected";
        case Termination::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::vector<NodeRole> classify_roles(const Graph& g, LinkFamily family) {
    FamilyView view = family_view(g, family);

    auto in_links = [&](NodeId id) {
        auto it = view.in.find(id);
        return it == view.in.end() ? std::size_t{0} : it->second.size();
    };

    std::vector<NodeRole> out;
    for (NodeId id : view.participants) {
        std::size_t in_deg = in_links(id);
        std::size_t out_deg = view.out.count(id) ? view.out.at(id).size() : 0;

        NodeRole record{id, family, {}};
        if (in_deg == 0 && out_deg > 0) record.roles.insert(Role::Source);
        if (out_deg == 0 && in_deg > 0) record.roles.insert(Role::Sink);
        if (in_deg >= 2) {
            record.roles.insert(Role::Appointed);
            record.roles.insert(Role::Hub);
        }
        if (out_deg >= 2) {
            record.roles.insert(Role::Appointing);
            record.roles.insert(Role::Authority);
        }
        if (in_deg >= 2) {
            auto appointers = sorted_unique(view.in.at(id));
            std::size_t appointed_count = 0;
            for (NodeId up : appointers) {
                if (in_links(up) >= 2) ++appointed_count;
            }
            if (!appointers.empty() && 2 * appointed_count >= appointers.size()) {
                record.roles.insert(Role::Central);
            }
        }
        out.push_back(std::move(record));
    }
    return out;
}

std::vector<AbsorbingRegion> absorbing_regions(const Graph& g, LinkFamily family,
                                               Direction direction) {
    FamilyView view = family_view(g, family);
    const auto& succ = direction == Direction::Forward ? view.out : view.in;

    auto components = strongly_connected_components(view.participants, succ);
    std::map<NodeId, std::size_t> component_of;
    for (std::size_t k = 0; k < components.size(); ++k) {
        for (NodeId id : components[k]) component_of[id] = k;
    }

    std::vector<AbsorbingRegion> regions;
    for (std::size_t k = 0; k < components.size(); ++k) {
        bool terminal = true;
        for (NodeId id : components[k]) {
            auto it = succ.find(id);
            if (it == succ.end()) continue;
            for (NodeId next : it->second) {
                if (component_of.at(next) != k) {
                    terminal = false;
                    break;
                }
            }
            if (!terminal) break;
        }
        if (terminal) {
            regions.push_back(
                AbsorbingRegion{{components[k].begin(), components[k].end()}, family});
        }
    }
    std::sort(regions.begin(), regions.end(), [](const AbsorbingRegion& a, const AbsorbingRegion& b) {
        return *a.nodes.begin() < *b.nodes.begin();
    });
    return regions;
}

std::vector<SupernodeGroup> supernodes(const Graph& g, LinkFamily family) {
    FamilyView view = family_view(g, family);

    auto signature_of = [](const FamilyView& v, NodeId id) {
        auto neighbours = [&](const std::map<NodeId, std::vector<NodeId>>& side) {
            auto it = side.find(id);
            return it == side.end() ? std::vector<NodeId>{} : sorted_unique(it->second);
        };
        return std::make_pair(neighbours(v.in), neighbours(v.out));
    };

    std::map<std::pair<std::vector<NodeId>, std::vector<NodeId>>, std::vector<NodeId>> buckets;
    for (NodeId id : view.participants) buckets[signature_of(view, id)].push_back(id);

    std::map<LinkFamily, FamilyView> others;
    for (LinkFamily f : all_families) {
        if (f != family) others.emplace(f, family_view(g, f));
    }

    std::vector<SupernodeGroup> groups;
    for (auto& [sig, members] : buckets) {
        if (members.size() < 2) continue;
        SupernodeGroup group;
        group.members = members;
        group.family = family;

        std::string text = "in{";
        for (std::size_t i = 0; i < sig.first.size(); ++i) {
            text += (i ? "," : "") + std::to_string(sig.first[i].value);
        }
        text += "}|out{";
        for (std::size_t i = 0; i < sig.second.size(); ++i) {
            text += (i ? "," : "") + std::to_string(sig.second[i].value);
        }
        text += "}";
        group.signature = std::move(text);

        // weights of the grouped family must agree as well
        auto weight_profile = [&](NodeId id) {
            auto pick = [&](const std::map<NodeId, std::map<NodeId, double>>& side) {
                auto it = side.find(id);
                return it == side.end() ? std::map<NodeId, double>{} : it->second;
            };
            return std::make_pair(pick(view.in_w), pick(view.out_w));
        };
        bool weights_equal = true;
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (weight_profile(members[i]) != weight_profile(members[0])) weights_equal = false;
        }
        if (!weights_equal) group.differing_families.push_back(family);

        for (auto& [f, fv] : others) {
            bool equal = true;
            for (std::size_t i = 1; i < members.size(); ++i) {
                if (signature_of(fv, members[i]) != signature_of(fv, members[0])) equal = false;
            }
            if (!equal) group.differing_families.push_back(f);
        }
        std::sort(group.differing_families.begin(), group.differing_families.end());
        group.partial = !group.differing_families.empty();
        groups.push_back(std::move(group));
    }
    std::sort(groups.begin(), groups.end(), [](const SupernodeGroup& a, const SupernodeGroup& b) {
        return a.members < b.members;
    });
    return groups;
}

Graph contract(const Graph& g, const SupernodeGroup& group) {
    if (group.members.size() < 2) throw std::invalid_argument("nothing to contract");
    std::set<NodeId> members(group.members.begin(), group.members.end());
    MetaType meta = g.node(group.members.front()).meta;
    std::string merged_name;
    AttrMap merged_attrs;
    for (NodeId id : group.members) {
        const Node& n = g.node(id);
        if (n.meta != meta) {
            throw std::invalid_argument("cannot contract nodes of different meta-types");
        }
        if (!merged_name.empty()) merged_name += "+";
        merged_name += n.proper_name;
        for (const auto& [k, v] : n.attributes) merged_attrs.emplace(k, v);
    }

    Graph out(g.aliases());
    std::map<NodeId, NodeId> remap;
    for (const Node& n : g.nodes()) {
        if (members.count(n.id)) continue;
        remap[n.id] = out.add_node(n.proper_name, n.meta, n.attributes);
    }
    NodeId merged = out.add_node(merged_name, meta, merged_attrs);
    for (NodeId id : group.members) remap[id] = merged;

    for (const Link& l : g.links()) {
        std::string label = l.label;
        int salt = 1;
        while (true) {
            LinkResult r = out.add_link(remap.at(l.src), l.typ, remap.at(l.dst), l.weight, label);
            if (ok(r)) break;
            const auto& err = std::get<LinkError>(r);
            if (err.kind != LinkErrorKind::DuplicateLink) {
                throw std::logic_error("contracted link became invalid: " + err.message);
            }
            label = l.label + "#" + std::to_string(++salt);
        }
    }
    return out;
}

std::vector<ChainTrace> trace(const Graph& g, NodeId start, LinkFamily family,
                              Direction direction, int budget) {
    if (!g.has_node(start)) throw std::out_of_range("unknown start node");
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");

    FamilyView view = family_view(g, family);
    auto node_key = [&](NodeId id) {
        const Node& n = g.node(id);
        return std::make_pair(n.meta, n.proper_name);
    };
    std::map<NodeId, std::vector<NodeId>> succ =
        direction == Direction::Forward ? view.out : view.in;
    for (auto& [id, list] : succ) {
        list = sorted_unique(std::move(list));
        std::sort(list.begin(), list.end(),
                  [&](NodeId a, NodeId b) { return node_key(a) < node_key(b); });
    }

    std::vector<ChainTrace> traces;
    std::vector<NodeId> path{start};
    std::set<NodeId> visited{start};

    std::function<void()> dfs = [&]() {
        if (traces.size() >= static_cast<std::size_t>(budget)) return;
        NodeId here = path.back();
        auto it = succ.find(here);
        const std::vector<NodeId>* children = it == succ.end() ? nullptr : &it->second;

        if (!children || children->empty()) {
            traces.push_back(ChainTrace{path, family, Termination::TerminatedAtSink});
            return;
        }
        if (static_cast<int>(path.size()) - 1 >= budget) {
            traces.push_back(ChainTrace{path, family, Termination::BudgetExhausted});
            return;
        }
        bool extended = false;
        for (NodeId next : *children) {
            if (visited.count(next)) continue;
            extended = true;
            path.push_back(next);
            visited.insert(next);
            dfs();
            visited.erase(next);
            path.pop_back();
        }
        if (!extended) {
            // every continuation would re-enter the path
            traces.push_back(ChainTrace{path, family, Termination::CycleDetected});
        }
    };
    dfs();
    return traces;
}

std::string terminal_note(const ChainTrace& trace, const Graph& g) {
    const Node& last = g.node(trace.path.back());
    switch (trace.termination) {
        case Termination::CycleDetected:
            return trace.family == LinkFamily::L ? "never terminates (cycle)"
                                                 : "cycle detected at \"" + last.proper_name + "\"";
        case Termination::BudgetExhausted:
            return "no end found within the step budget";
        case Termination::TerminatedAtSink:
            break;
    }
    switch (trace.family) {
        case LinkFamily::L:
            return "final event \"" + last.proper_name + "\"";
        case LinkFamily::C:
            return "atomic thing (component): \"" + last.proper_name + "\"";
        case LinkFamily::E:
            return "atomic concept (property): \"" + last.proper_name + "\"";
        case LinkFamily::N:
            return "no termination requirement for nearness chains";
    }
    return {};
}

}  // namespace sst::analysis
