#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sst/alias.hpp"
#include "sst/transitions.hpp"
#include "sst/types.hpp"

namespace sst {

using AttrMap = std::map<std::string, std::string>;

/// A graph agent. Identity is the (proper_name, meta) pair: the same name may
/// exist once per meta-type, and names carry no length limit.
struct Node {
    NodeId id;
    std::string proper_name;
    MetaType meta = MetaType::Event;
    AttrMap attributes;
};

/// A typed, weighted arrow between two nodes. `label` records the alias the
/// author actually used; links may be stored in reverse orientation.
struct Link {
    NodeId src;
    NodeId dst;
    SignedLinkType typ = SignedLinkType::near();
    std::string label;
    double weight = 1.0;

    friend bool operator==(const Link&, const Link&) = default;
};

/// Swaps endpoints and negates the orientation. Involutive; validity is
/// preserved by the reversal symmetry of the transition table.
Link reverse(const Link& l);

/// Folds a reverse-oriented link into its forward reading. Forward and N
/// links are returned unchanged.
Link canonical(const Link& l);

enum class LinkErrorKind {
    UnknownAlias,
    ForbiddenTransition,
    NegativeWeight,
    DuplicateLink,
    UnknownNode,
};

struct LinkError {
    LinkErrorKind kind;
    std::string message;
    // populated for ForbiddenTransition
    std::optional<MetaType> src_meta;
    std::optional<MetaType> dst_meta;
    std::optional<SignedLinkType> typ;
};

using LinkResult = std::variant<Link, LinkError>;

inline bool ok(const LinkResult& r) { return std::holds_alternative<Link>(r); }

/// Node set plus typed link multiset plus the alias table used to resolve
/// labels. Single-writer during construction; immutable thereafter and then
/// freely shareable across threads.
class Graph {
public:
    Graph() : aliases_(AliasTable::defaults()) {}
    explicit Graph(AliasTable aliases) : aliases_(std::move(aliases)) {}

    /// Idempotent on (proper_name, meta): re-adding returns the existing id
    /// and merges attributes. Throws std::invalid_argument on an empty name.
    NodeId add_node(std::string_view proper_name, MetaType meta, AttrMap attributes = {});

    std::optional<NodeId> find_node(std::string_view proper_name, MetaType meta) const;
    std::vector<NodeId> find_nodes_named(std::string_view proper_name) const;
    const Node& node(NodeId id) const;
    bool has_node(NodeId id) const { return id.value < nodes_.size(); }

    /// Resolves `label` through the alias table (type tokens always resolve)
    /// and stores the link if the endpoint meta-types admit it.
    LinkResult add_link(NodeId src, std::string_view label, NodeId dst, double weight = 1.0);
    /// Same, with an explicit type; the label defaults to the type token.
    LinkResult add_link(NodeId src, SignedLinkType typ, NodeId dst, double weight = 1.0,
                        std::string_view label = {});

    std::span<const Node> nodes() const { return nodes_; }
    std::span<const Link> links() const { return links_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t link_count() const { return links_.size(); }

    const AliasTable& aliases() const { return aliases_; }
    AliasTable& aliases() { return aliases_; }

    /// Node ids sorted by (meta, proper_name); the deterministic order used
    /// by serialization and matrix construction.
    std::vector<NodeId> canonical_order() const;

    /// Re-checks every stored link against the transition table.
    bool revalidate() const;

private:
    LinkResult store_link(NodeId src, SignedLinkType typ, NodeId dst, double weight,
                          std::string label);

    std::vector<Node> nodes_;
    std::vector<Link> links_;
    std::map<std::pair<MetaType, std::string>, NodeId, std::less<>> index_;
    std::set<std::tuple<std::uint32_t, std::string, std::uint32_t, std::string>> quads_;
    AliasTable aliases_;
};

}  // namespace sst
