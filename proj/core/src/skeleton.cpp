#include "sst/skeleton.hpp"

namespace sst::matrix {
namespace {

constexpr MetaType metas[3] = {MetaType::Event, MetaType::Thing, MetaType::Concept};

SignEntry sign_entry(bool plus, bool minus) {
    if (plus && minus) return SignEntry::PlusMinus;
    if (plus) return SignEntry::Plus;
    if (minus) return SignEntry::Minus;
    return SignEntry::Zero;
}

std::set<SignedLinkType> types(std::initializer_list<const char*> tokens) {
    std::set<SignedLinkType> out;
    for (const char* tok : tokens) out.insert(*SignedLinkType::parse(tok));
    return out;
}

}  // namespace

SkeletonMatrices skeleton() {
    SkeletonMatrices s;
    s.emission = {{{1, 1, 1, 1, 0, 0},
                   {0, 1, 1, 0, 1, 0},
                   {0, 0, 1, 0, 0, 1}}};
    s.absorption = {{{1, 0, 0},
                     {1, 1, 0},
                     {1, 0, 1},
                     {1, 0, 0},
                     {0, 1, 0},
                     {0, 0, 1}}};

    s.meta_adjacency[0] = {types({"+L", "-L", "+C", "-C", "+E", "-E", "N"}), types({"+C"}),
                           types({"+E"})};
    s.meta_adjacency[1] = {types({"-C"}), types({"+C", "-C", "N"}), types({"+E"})};
    s.meta_adjacency[2] = {types({"-E"}), types({"-E"}), types({"+E", "-E", "N"})};

    using S = SignEntry;
    s.generators[1] = {{{S::PlusMinus, S::Zero, S::Zero},
                        {S::Zero, S::Zero, S::Zero},
                        {S::Zero, S::Zero, S::Zero}}};  // L
    s.generators[2] = {{{S::PlusMinus, S::Plus, S::Zero},
                        {S::Minus, S::PlusMinus, S::Zero},
                        {S::Zero, S::Zero, S::Zero}}};  // C
    s.generators[3] = {{{S::PlusMinus, S::Zero, S::Minus},
                        {S::Zero, S::Zero, S::Plus},
                        {S::Minus, S::Minus, S::PlusMinus}}};  // E
    s.generators[0] = {{{S::Plus, S::Zero, S::Zero},
                        {S::Zero, S::Plus, S::Zero},
                        {S::Zero, S::Zero, S::Plus}}};  // N
    return s;
}

SkeletonMatrices derived_skeleton() {
    SkeletonMatrices s;
    // Emission and absorption use the canonical forward reading; N links are
    // split per endpoint meta-type as in the published layout.
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t col = 0; col < 3; ++col) {
            LinkFamily fam = skeleton_family_order[col];
            bool emits = false;
            for (MetaType b : metas) {
                emits |= allowed_transition(metas[a], SignedLinkType::forward(fam), b);
            }
            s.emission[a][col] = emits ? 1 : 0;
        }
        for (std::size_t m = 0; m < 3; ++m) {
            s.emission[a][3 + m] =
                (a == m && allowed_transition(metas[a], SignedLinkType::near(), metas[m])) ? 1 : 0;
        }
    }
    for (std::size_t row = 0; row < 3; ++row) {
        LinkFamily fam = skeleton_family_order[row];
        for (std::size_t b = 0; b < 3; ++b) {
            bool absorbs = false;
            for (MetaType a : metas) {
                absorbs |= allowed_transition(a, SignedLinkType::forward(fam), metas[b]);
            }
            s.absorption[row][b] = absorbs ? 1 : 0;
        }
    }
    for (std::size_t m = 0; m < 3; ++m) {
        for (std::size_t b = 0; b < 3; ++b) {
            s.absorption[3 + m][b] =
                (m == b && allowed_transition(metas[m], SignedLinkType::near(), metas[b])) ? 1 : 0;
        }
    }

    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            for (const auto& typ : all_signed_types()) {
                if (allowed_transition(metas[a], typ, metas[b])) {
                    s.meta_adjacency[a][b].insert(typ);
                }
            }
        }
    }

    for (std::size_t f = 0; f < 4; ++f) {
        LinkFamily fam = skeleton_family_order[f];
        std::size_t slot = f == 3 ? 0 : f + 1;  // generators indexed L,C,E at 1..3, N at 0
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                if (fam == LinkFamily::N) {
                    bool near = allowed_transition(metas[a], SignedLinkType::near(), metas[b]);
                    s.generators[0][a][b] = near ? SignEntry::Plus : SignEntry::Zero;
                } else {
                    bool plus =
                        allowed_transition(metas[a], SignedLinkType::forward(fam), metas[b]);
                    bool minus =
                        allowed_transition(metas[a], SignedLinkType::reverse(fam), metas[b]);
                    s.generators[slot][a][b] = sign_entry(plus, minus);
                }
            }
        }
    }
    return s;
}

FactorizationReport check_factorization() {
    FactorizationReport report;
    const SkeletonMatrices ref = skeleton();
    const SkeletonMatrices der = derived_skeleton();

    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            int sum = 0;
            for (std::size_t k = 0; k < 6; ++k) sum += ref.emission[a][k] * ref.absorption[k][b];
            report.product[a][b] = sum;

            int count = 0;
            for (std::size_t f = 0; f < 4; ++f) {
                LinkFamily fam = skeleton_family_order[f];
                SignedLinkType typ =
                    fam == LinkFamily::N ? SignedLinkType::near() : SignedLinkType::forward(fam);
                if (allowed_transition(metas[a], typ, metas[b])) ++count;
            }
            report.derived_counts[a][b] = count;
        }
    }
    for (std::size_t a = 0; a < 3; ++a) {
        report.cartan[a] = report.product[a][a] - report.derived_counts[a][a];
        for (std::size_t b = 0; b < 3; ++b) {
            if (a != b && report.product[a][b] != report.derived_counts[a][b]) {
                report.offdiagonal_mismatches.push_back(
                    CountCellMismatch{a, b, report.product[a][b], report.derived_counts[a][b]});
            }
        }
    }
    report.cartan_uniform =
        report.cartan[0] == report.cartan[1] && report.cartan[1] == report.cartan[2];

    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            if (der.meta_adjacency[a][b] != ref.meta_adjacency[a][b]) {
                report.meta_adjacency_diffs.push_back(
                    MetaCellDiff{a, b, der.meta_adjacency[a][b], ref.meta_adjacency[a][b]});
            }
        }
    }
    for (std::size_t f = 0; f < 4; ++f) {
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                if (der.generators[f][a][b] != ref.generators[f][a][b]) {
                    LinkFamily fam = f == 0 ? LinkFamily::N : skeleton_family_order[f - 1];
                    report.generator_diffs.push_back(GeneratorCellDiff{
                        fam, a, b, der.generators[f][a][b], ref.generators[f][a][b]});
                }
            }
        }
    }
    report.incidence_matches_derived =
        ref.emission == der.emission && ref.absorption == der.absorption;
    return report;
}

JoinMatrixReport join_matrix_report() {
    JoinMatrixReport report;
    constexpr MetaType e = MetaType::Event;
    constexpr MetaType t = MetaType::Thing;
    constexpr MetaType c = MetaType::Concept;

    report.reference = {{
        {{{e}, {e}, {e}, {e}}},                          // L row
        {{{e}, {e, t}, {e, t}, {e, t}}},                 // C row
        {{{e}, {e, t}, {e, t, c}, {e, t, c}}},           // E row
        {{{e}, {e, t}, {e, t, c}, {e, t, c}}},           // N row
    }};

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            report.derived[i][j] =
                join_types(skeleton_family_order[i], skeleton_family_order[j]);
            if (report.derived[i][j] != report.reference[i][j]) {
                report.diffs.push_back(JoinCellDiff{skeleton_family_order[i],
                                                    skeleton_family_order[j],
                                                    report.derived[i][j],
                                                    report.reference[i][j]});
            }
        }
    }
    return report;
}

}  // namespace sst::matrix
