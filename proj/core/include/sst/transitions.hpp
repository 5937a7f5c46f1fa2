#pragma once

#include <set>
#include <string>
#include <vector>

#include "sst/types.hpp"

namespace sst {

/// Decides whether a link of the given signed type may run from a node of
/// meta-type `src` to a node of meta-type `dst`. Total over all
/// 3 x 7 x 3 combinations and closed under reversal symmetry:
/// allowed(a, +X, b) == allowed(b, -X, a), and N is symmetric.
bool allowed_transition(MetaType src, SignedLinkType typ, MetaType dst);

/// All signed types legal between a fixed endpoint pair. Empty when the two
/// meta-types cannot be related at all.
std::vector<SignedLinkType> legal_types_between(MetaType src, MetaType dst);

/// Human-readable statement of the rule a forbidden combination breaks.
/// Returns an empty string for allowed combinations.
std::string violation_text(MetaType src, SignedLinkType typ, MetaType dst);

/// Meta-types on which a canonical arrow of the family may terminate.
std::set<MetaType> family_targets(LinkFamily f);

/// Meta-types from which a canonical arrow of the family may depart.
std::set<MetaType> family_sources(LinkFamily f);

/// The set of meta-types that can sit between two consecutive arrow families
/// on a path: a canonical `first` arrow ends there and a canonical `second`
/// arrow leaves from there. Computed from the transition table.
std::set<MetaType> join_types(LinkFamily first, LinkFamily second);

}  // namespace sst
