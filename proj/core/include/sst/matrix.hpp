#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sst/graph.hpp"

namespace sst::matrix {

/// Dense weighted adjacency over the canonical node order. Reverse-oriented
/// links are folded into their forward reading before insertion, so the
/// transpose is always the forward stepping operator; N links contribute
/// symmetrically to both (i,j) and (j,i).
struct AdjacencyView {
    std::vector<NodeId> node_order;
    std::size_t n = 0;
    std::vector<double> entries;  // row-major, n*n
    std::optional<LinkFamily> family_filter;
    bool directional = false;  // true when any L/C/E link contributed

    double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    std::optional<std::size_t> index_of(NodeId id) const;
};

AdjacencyView adjacency(const Graph& g, std::optional<LinkFamily> family = std::nullopt);

/// Per-node real values, conforming to an adjacency view's node order.
struct ValueVector {
    std::vector<NodeId> node_order;
    std::vector<double> values;
};

ValueVector ones(const AdjacencyView& a);
ValueVector value_vector(const AdjacencyView& a, std::span<const double> values);

/// v' = A^T v: values flow along the arrows onto successors.
ValueVector forward_step(const AdjacencyView& a, const ValueVector& v);
/// v' = A v: values flow against the arrows onto predecessors.
ValueVector backward_step(const AdjacencyView& a, const ValueVector& v);

/// Per-link differences v[src] - v[dst], in stored-link order.
std::vector<double> graph_gradient(const ValueVector& v, const Graph& g);

enum class SpectralStatus {
    Converged,
    NonConvergence,   // residual still above tolerance after max_iter
    DegenerateZero,   // iterate collapsed to the zero vector (absorbing drain)
};

struct SpectralResult {
    double eigenvalue = 0.0;
    ValueVector vector;        // unit 1-norm
    int iterations = 0;
    double residual = 0.0;     // max-norm of (M v - lambda v) for the iterated operator
    bool damped = false;
    SpectralStatus status = SpectralStatus::Converged;
};

/// Power iteration from the all-ones vector with 1-norm renormalization.
/// Without damping the bare transpose is iterated and may degenerate on
/// graphs with absorbing nodes. With damping d in (0,1) the operator
/// d*A^T + ((1-d)/n)*J (J all-ones) is iterated, which is strictly positive
/// and always converges. Throws std::invalid_argument on an all-zero matrix
/// or an empty view.
SpectralResult principal_eigenvector(const AdjacencyView& a,
                                     std::optional<double> damping = std::nullopt,
                                     double tol = 1e-9, int max_iter = 10000);

/// Shannon entropy of the normalized value distribution in base `base`,
/// with the 0*log(0) = 0 convention. Throws on negative values and on the
/// all-zero vector.
double entropy(std::span<const double> values, int base = 2);
double entropy(const ValueVector& v, int base = 2);

/// entropy(outgoing weights) - entropy(incoming weights) at a node for one
/// family, base max(in-degree, out-degree, 2). Pure sinks report -S(in),
/// pure sources +S(out). Throws if the node has no incident link of the
/// family. Degrees and distributions use canonical link orientation.
double node_entropy_delta(const Graph& g, NodeId node, LinkFamily family);

struct SingularityReport {
    double determinant = 0.0;
    std::vector<std::size_t> zero_rows;
    std::vector<std::size_t> zero_cols;
    bool invertible = false;
};

/// Determinant (fraction-free elimination for n <= 12, partially pivoted LU
/// beyond), zero rows/columns, and invertibility at the given tolerance.
SingularityReport singularity_report(const AdjacencyView& a, double tol = 1e-12);

/// Plain dense determinant of an arbitrary square matrix (row-major).
double determinant(std::span<const double> entries, std::size_t n);

using Mat3 = std::array<std::array<double, 3>, 3>;
double det3(const Mat3& m);
/// Adjugate-formula inverse; nullopt when the determinant vanishes.
std::optional<Mat3> invert3(const Mat3& m);

}  // namespace sst::matrix
