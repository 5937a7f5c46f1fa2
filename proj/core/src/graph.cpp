#include "sst/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sst {

Link reverse(const Link& l) {
    Link out = l;
    std::swap(out.src, out.dst);
    out.typ = l.typ.negated();
    return out;
}

Link canonical(const Link& l) {
    return l.typ.is_reverse() ? reverse(l) : l;
}

NodeId Graph::add_node(std::string_view proper_name, MetaType meta, AttrMap attributes) {
    if (proper_name.empty()) {
        throw std::invalid_argument("node proper name must not be empty");
    }
    auto key = std::make_pair(meta, std::string(proper_name));
    auto it = index_.find(key);
    if (it != index_.end()) {
        Node& existing = nodes_[it->second.value];
        for (auto& [k, v] : attributes) existing.attributes.insert_or_assign(k, std::move(v));
        return it->second;
    }
    NodeId id{static_cast<std::uint32_t>(nodes_.size())};
    nodes_.push_back(Node{id, std::string(proper_name), meta, std::move(attributes)});
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<NodeId> Graph::find_node(std::string_view proper_name, MetaType meta) const {
    auto it = index_.find(std::make_pair(meta, std::string(proper_name)));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<NodeId> Graph::find_nodes_named(std::string_view proper_name) const {
    std::vector<NodeId> out;
    for (MetaType m : all_meta_types) {
        if (auto id = find_node(proper_name, m)) out.push_back(*id);
    }
    return out;
}

const Node& Graph::node(NodeId id) const {
    if (!has_node(id)) throw std::out_of_range("unknown node id");
    return nodes_[id.value];
}

LinkResult Graph::add_link(NodeId src, std::string_view label, NodeId dst, double weight) {
    auto typ = aliases_.resolve(label);
    if (!typ) {
        return LinkError{LinkErrorKind::UnknownAlias,
                         "unknown link alias \"" + std::string(label) + "\""};
    }
    return store_link(src, *typ, dst, weight, std::string(label));
}

LinkResult Graph::add_link(NodeId src, SignedLinkType typ, NodeId dst, double weight,
                           std::string_view label) {
    std::string used = label.empty() ? typ.token() : std::string(label);
    return store_link(src, typ, dst, weight, std::move(used));
}

LinkResult Graph::store_link(NodeId src, SignedLinkType typ, NodeId dst, double weight,
                             std::string label) {
    if (!has_node(src) || !has_node(dst)) {
        return LinkError{LinkErrorKind::UnknownNode, "link endpoint does not exist"};
    }
    if (weight < 0.0) {
        return LinkError{LinkErrorKind::NegativeWeight, "link weight must be non-negative"};
    }
    MetaType sm = node(src).meta;
    MetaType dm = node(dst).meta;
    if (!allowed_transition(sm, typ, dm)) {
        LinkError err{LinkErrorKind::ForbiddenTransition, {}, sm, dm, typ};
        err.message = std::string(to_string(sm)) + " (" + typ.token() + ") " +
                      std::string(to_string(dm)) + " is forbidden: " +
                      violation_text(sm, typ, dm);
        return err;
    }
    auto quad = std::make_tuple(src.value, typ.token(), dst.value, label);
    if (quads_.count(quad)) {
        return LinkError{LinkErrorKind::DuplicateLink,
                         "duplicate link (same endpoints, type and label)"};
    }
    quads_.insert(std::move(quad));
    links_.push_back(Link{src, dst, typ, std::move(label), weight});
    return links_.back();
}

std::vector<NodeId> Graph::canonical_order() const {
    std::vector<NodeId> order;
    order.reserve(nodes_.size());
    for (const auto& [key, id] : index_) order.push_back(id);
    return order;  // map iteration is already (meta, name) sorted
}

bool Graph::revalidate() const {
    return std::all_of(links_.begin(), links_.end(), [this](const Link& l) {
        return has_node(l.src) && has_node(l.dst) && l.weight >= 0.0 &&
               allowed_transition(node(l.src).meta, l.typ, node(l.dst).meta);
    });
}

}  // namespace sst
