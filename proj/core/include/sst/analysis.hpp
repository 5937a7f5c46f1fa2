#pragma once

#include <set>
#include <string>
#include <vector>

#include "sst/graph.hpp"

namespace sst::analysis {

enum class Role { Source, Sink, Appointed, Appointing, Hub, Authority, Central };

std::string_view to_string(Role r);

/// Per-family structural role of one node. Degrees are counted over links in
/// canonical orientation; N links are incident symmetrically.
struct NodeRole {
    NodeId node;
    LinkFamily family;
    std::set<Role> roles;
};

/// Classifies every node with at least one incident link of the family.
/// source: in 0, out > 0; sink: out 0, in > 0; appointed/hub: in >= 2;
/// appointing/authority: out >= 2; central: appointed and at least half of
/// the appointers are themselves appointed.
std::vector<NodeRole> classify_roles(const Graph& g, LinkFamily family);

enum class Direction { Forward, Backward };

/// A set of nodes no flow of the family can leave: a terminal strongly
/// connected component of the family subgraph.
struct AbsorbingRegion {
    std::set<NodeId> nodes;
    LinkFamily family;
};

/// Terminal components of the condensation of the family subgraph, over the
/// nodes that participate in that family. Backward direction reverses every
/// arrow first (sources become the absorbing ends).
std::vector<AbsorbingRegion> absorbing_regions(const Graph& g, LinkFamily family,
                                               Direction direction = Direction::Forward);

/// Nodes sharing an exact (in-neighbour set, out-neighbour set) signature for
/// one family, i.e. interchangeable for that process. `partial` marks groups
/// whose members disagree elsewhere: on another family's signature or on the
/// weights of the grouped family.
struct SupernodeGroup {
    std::vector<NodeId> members;
    LinkFamily family;
    std::string signature;
    bool partial = false;
    std::vector<LinkFamily> differing_families;
};

std::vector<SupernodeGroup> supernodes(const Graph& g, LinkFamily family);

/// Merges the members of a group into a single node (the first member's name
/// joined with the others). Links are re-pointed; a collision with the
/// duplicate-quadruple rule is resolved by suffixing the label, so every
/// link survives and non-member degrees are preserved.
Graph contract(const Graph& g, const SupernodeGroup& group);

enum class Termination { TerminatedAtSink, CycleDetected, BudgetExhausted };

std::string_view to_string(Termination t);

struct ChainTrace {
    std::vector<NodeId> path;
    LinkFamily family;
    Termination termination = Termination::TerminatedAtSink;
};

/// Depth-first enumeration of maximal single-family paths from `start`, with
/// per-path cycle detection, up to `budget` hops per path. Throws
/// std::out_of_range for an unknown start node.
std::vector<ChainTrace> trace(const Graph& g, NodeId start, LinkFamily family,
                              Direction direction = Direction::Forward, int budget = 10000);

/// What the end of a finished chain means for its family: C chains bottom out
/// on an atomic thing (component), E chains on an atomic concept (property),
/// L chains on a final event or never, N chains carry no termination rule.
std::string terminal_note(const ChainTrace& trace, const Graph& g);

}  // namespace sst::analysis
