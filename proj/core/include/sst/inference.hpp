#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sst/analysis.hpp"
#include "sst/graph.hpp"

namespace sst::inference {

enum class HypothesisKind {
    MightBeNear,
    EventCopresence,
    MightHaveProperty,
    FunctionalEquivalence,
    InvalidGeneralization,
};

enum class Tier { Possible, Invalid };

std::string_view to_string(HypothesisKind k);
std::string_view to_string(Tier t);

/// A structural "might" statement. Never materialized as a link; every basis
/// link exists in the graph it was inferred from.
struct Hypothesis {
    HypothesisKind kind = HypothesisKind::MightBeNear;
    std::vector<NodeId> subjects;
    std::vector<Link> basis;
    Tier tier = Tier::Possible;
    std::optional<NodeId> scope;  // container or event the claim is scaled to
    std::string note;
};

/// Shared container: if one node contains two others, those two might be near
/// one another on the container's scale. Pairs already joined by an explicit
/// N link are skipped.
std::vector<Hypothesis> infer_proximity(const Graph& g);

/// An event containing two things places them together for its duration.
std::vector<Hypothesis> infer_event_copresence(const Graph& g);

/// Downward property flow: members of a container expressing P might also
/// have P; an N-neighbour of a node expressing P might also have P (one hop).
std::vector<Hypothesis> infer_property_inheritance(const Graph& g);

/// Upward generalization check for a proposed container-expresses-property
/// link. Returns an invalid-tier hypothesis when the proposal is backed only
/// by members' properties (annotated "unanimous members" when every member
/// shares it); nullopt when the pattern does not apply or the link already
/// has an independent explicit basis.
std::optional<Hypothesis> flag_invalid_generalization(const Graph& g, NodeId container,
                                                      NodeId property);

/// Functional-equivalence hypotheses from supernode groups of all four
/// families; partial groups carry a warning note.
std::vector<Hypothesis> infer_equivalence(const Graph& g);

/// Every generator, merged and stably ordered (kind, then subjects, then
/// scope).
std::vector<Hypothesis> infer_all(const Graph& g);

}  // namespace sst::inference
