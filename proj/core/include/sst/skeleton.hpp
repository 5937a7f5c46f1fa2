#pragma once

#include <array>
#include <set>
#include <vector>

#include "sst/transitions.hpp"
#include "sst/types.hpp"

namespace sst::matrix {

/// Entry of a type-level generator matrix: which orientations of one family
/// relate a (row meta, column meta) pair.
enum class SignEntry { Zero, Plus, Minus, PlusMinus };

/// Column/row order used by the incidence skeleton: L, C, E, N_e, N_t, N_c.
inline constexpr std::array<LinkFamily, 4> skeleton_family_order{
    LinkFamily::L, LinkFamily::C, LinkFamily::E, LinkFamily::N};

/// The type-level matrices of the gamma(3,4) skeleton: emission incidence
/// I+ (3x6, rows e/t/c), absorption incidence I- (6x3), the set-valued
/// meta-adjacency over signed types, and the four family generators.
struct SkeletonMatrices {
    std::array<std::array<int, 6>, 3> emission{};
    std::array<std::array<int, 3>, 6> absorption{};
    std::array<std::array<std::set<SignedLinkType>, 3>, 3> meta_adjacency;
    // indexed by LinkFamily enum value: N, L, C, E
    std::array<std::array<std::array<SignEntry, 3>, 3>, 4> generators{};
};

/// The reference skeleton as published for the model, verbatim. Some of its
/// cells disagree with the transition table; see check_factorization().
SkeletonMatrices skeleton();

/// The same matrices derived from the implemented transition table
/// (canonical forward orientation for the incidence pair).
SkeletonMatrices derived_skeleton();

struct CountCellMismatch {
    std::size_t row, col;
    int product, derived;
};

struct MetaCellDiff {
    std::size_t row, col;
    std::set<SignedLinkType> derived, reference;
};

struct GeneratorCellDiff {
    LinkFamily family;
    std::size_t row, col;
    SignEntry derived, reference;
};

/// Result of multiplying the published incidence pair and holding it against
/// the transition table: I+ . I- = (derived family counts) + C should leave a
/// diagonal Cartan part C; any residual off-diagonal cell is reported, as is
/// every divergence between published and derived type tables.
struct FactorizationReport {
    std::array<std::array<int, 3>, 3> product{};
    std::array<std::array<int, 3>, 3> derived_counts{};
    std::array<int, 3> cartan{};
    bool cartan_uniform = false;
    std::vector<CountCellMismatch> offdiagonal_mismatches;
    std::vector<MetaCellDiff> meta_adjacency_diffs;
    std::vector<GeneratorCellDiff> generator_diffs;
    bool incidence_matches_derived = false;
};

FactorizationReport check_factorization();

struct JoinCellDiff {
    LinkFamily first, second;
    std::set<MetaType> derived, reference;
};

/// Derived join matrix (which meta-types may sit between two consecutive
/// arrow families) next to the published one, with a stable cell diff.
struct JoinMatrixReport {
    std::array<std::array<std::set<MetaType>, 4>, 4> derived;
    std::array<std::array<std::set<MetaType>, 4>, 4> reference;
    std::vector<JoinCellDiff> diffs;
};

JoinMatrixReport join_matrix_report();

}  // namespace sst::matrix
