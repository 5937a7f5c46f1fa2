#include "sst/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sst::matrix {
namespace {

void check_conforms(const AdjacencyView& a, const ValueVector& v) {
    if (v.node_order != a.node_order || v.values.size() != a.n) {
        throw std::invalid_argument("value vector does not conform to the adjacency view");
    }
}

double one_norm(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) sum += std::abs(x);
    return sum;
}

}  // namespace

std::optional<std::size_t> AdjacencyView::index_of(NodeId id) const {
    auto it = std::find(node_order.begin(), node_order.end(), id);
    if (it == node_order.end()) return std::nullopt;
    return static_cast<std::size_t>(it - node_order.begin());
}

AdjacencyView adjacency(const Graph& g, std::optional<LinkFamily> family) {
    AdjacencyView view;
    view.node_order = g.canonical_order();
    view.n = view.node_order.size();
    view.entries.assign(view.n * view.n, 0.0);
    view.family_filter = family;

    std::vector<std::size_t> index(g.node_count());
    for (std::size_t i = 0; i < view.n; ++i) index[view.node_order[i].value] = i;

    for (const Link& stored : g.links()) {
        if (family && stored.typ.family() != *family) continue;
        Link l = canonical(stored);
        std::size_t i = index[l.src.value];
        std::size_t j = index[l.dst.value];
        if (l.typ.is_symmetric()) {
            view.at(i, j) += l.weight;
            if (i != j) view.at(j, i) += l.weight;
        } else {
            view.at(i, j) += l.weight;
            view.directional = true;
        }
    }
    return view;
}

ValueVector ones(const AdjacencyView& a) {
    return ValueVector{a.node_order, std::vector<double>(a.n, 1.0)};
}

ValueVector value_vector(const AdjacencyView& a, std::span<const double> values) {
    if (values.size() != a.n) throw std::invalid_argument("value count mismatch");
    return ValueVector{a.node_order, std::vector<double>(values.begin(), values.end())};
}

ValueVector forward_step(const AdjacencyView& a, const ValueVector& v) {
    check_conforms(a, v);
    ValueVector out{a.node_order, std::vector<double>(a.n, 0.0)};
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < a.n; ++j) {
            out.values[j] += a.at(i, j) * v.values[i];
        }
    }
    return out;
}

ValueVector backward_step(const AdjacencyView& a, const ValueVector& v) {
    check_conforms(a, v);
    ValueVector out{a.node_order, std::vector<double>(a.n, 0.0)};
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < a.n; ++j) {
            out.values[i] += a.at(i, j) * v.values[j];
        }
    }
    return out;
}

std::vector<double> graph_gradient(const ValueVector& v, const Graph& g) {
    std::vector<double> position(g.node_count(), 0.0);
    if (v.node_order.size() != v.values.size()) {
        throw std::invalid_argument("malformed value vector");
    }
    std::vector<bool> seen(g.node_count(), false);
    for (std::size_t k = 0; k < v.node_order.size(); ++k) {
        position[v.node_order[k].value] = v.values[k];
        seen[v.node_order[k].value] = true;
    }
    std::vector<double> out;
    out.reserve(g.link_count());
    for (const Link& l : g.links()) {
        if (!seen[l.src.value] || !seen[l.dst.value]) {
            throw std::invalid_argument("value vector does not cover all link endpoints");
        }
        out.push_back(position[l.src.value] - position[l.dst.value]);
    }
    return out;
}

SpectralResult principal_eigenvector(const AdjacencyView& a, std::optional<double> damping,
                                     double tol, int max_iter) {
    if (a.n == 0) throw std::invalid_argument("empty adjacency view");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    bool all_zero = std::all_of(a.entries.begin(), a.entries.end(),
                                [](double x) { return x == 0.0; });
    if (all_zero) throw std::invalid_argument("all-zero adjacency matrix");
    if (damping && (*damping <= 0.0 || *damping > 1.0)) {
        throw std::invalid_argument("damping must lie in (0, 1]");
    }

    const double d = damping.value_or(1.0);
    const bool damped = damping.has_value() && d < 1.0;
    const double uniform = damped ? (1.0 - d) / static_cast<double>(a.n) : 0.0;

    auto apply = [&](const std::vector<double>& v) {
        std::vector<double> out(a.n, 0.0);
        double total = 0.0;
        for (double x : v) total += x;
        for (std::size_t i = 0; i < a.n; ++i) {
            for (std::size_t j = 0; j < a.n; ++j) {
                out[j] += d * a.at(i, j) * v[i];
            }
        }
        if (damped) {
            for (std::size_t j = 0; j < a.n; ++j) out[j] += uniform * total;
        }
        return out;
    };

    SpectralResult result;
    result.damped = damped;
    std::vector<double> v(a.n, 1.0 / static_cast<double>(a.n));

    for (int iter = 1; iter <= max_iter; ++iter) {
        std::vector<double> next = apply(v);
        double norm = one_norm(next);
        result.iterations = iter;
        if (norm == 0.0) {
            // The whole mass fell off an absorbing edge; report the last
            // surviving iterate.
            result.status = SpectralStatus::DegenerateZero;
            result.eigenvalue = 0.0;
            result.vector = ValueVector{a.node_order, v};
            result.residual = std::numeric_limits<double>::infinity();
            return result;
        }
        double lambda = norm / one_norm(v);
        for (double& x : next) x /= norm;

        // residual of the normalized iterate under the iterated operator
        std::vector<double> check = apply(next);
        double residual = 0.0;
        for (std::size_t i = 0; i < a.n; ++i) {
            residual = std::max(residual, std::abs(check[i] - lambda * next[i]));
        }
        v = std::move(next);
        result.eigenvalue = lambda;
        result.residual = residual;
        if (residual < tol) {
            result.status = SpectralStatus::Converged;
            result.vector = ValueVector{a.node_order, std::move(v)};
            return result;
        }
    }
    result.status = SpectralStatus::NonConvergence;
    result.vector = ValueVector{a.node_order, std::move(v)};
    return result;
}

double entropy(std::span<const double> values, int base) {
    if (base < 2) throw std::invalid_argument("entropy base must be at least 2");
    double total = 0.0;
    for (double x : values) {
        if (x < 0.0) throw std::invalid_argument("entropy requires non-negative values");
        total += x;
    }
    if (total == 0.0) throw std::invalid_argument("entropy of the all-zero vector is undefined");
    double s = 0.0;
    const double log_base = std::log(static_cast<double>(base));
    for (double x : values) {
        if (x == 0.0) continue;
        double p = x / total;
        s -= p * std::log(p) / log_base;
    }
    return s;
}

double entropy(const ValueVector& v, int base) { return entropy(std::span(v.values), base); }

double node_entropy_delta(const Graph& g, NodeId node, LinkFamily family) {
    std::vector<double> in, out;
    for (const Link& stored : g.links()) {
        if (stored.typ.family() != family) continue;
        Link l = canonical(stored);
        if (l.typ.is_symmetric()) {
            // N links are incident in both roles at both endpoints
            if (l.src == node || l.dst == node) {
                in.push_back(l.weight);
                out.push_back(l.weight);
            }
            continue;
        }
        if (l.src == node) out.push_back(l.weight);
        if (l.dst == node) in.push_back(l.weight);
    }
    if (in.empty() && out.empty()) {
        throw std::invalid_argument("node has no incident link of the family");
    }
    int base = static_cast<int>(std::max({in.size(), out.size(), std::size_t{2}}));
    auto flatten_zero = [](double x) { return x == 0.0 ? 0.0 : x; };
    if (out.empty()) return flatten_zero(-entropy(std::span(in), base));
    if (in.empty()) return entropy(std::span(out), base);
    return flatten_zero(entropy(std::span(out), base) - entropy(std::span(in), base));
}

double determinant(std::span<const double> entries, std::size_t n) {
    if (entries.size() != n * n) throw std::invalid_argument("matrix size mismatch");
    if (n == 0) return 1.0;
    std::vector<double> m(entries.begin(), entries.end());

    if (n <= 12) {
        // Bareiss fraction-free elimination: exact on integer inputs.
        double sign = 1.0;
        double prev = 1.0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m[k * n + k] == 0.0) {
                std::size_t pivot = k + 1;
                while (pivot < n && m[pivot * n + k] == 0.0) ++pivot;
                if (pivot == n) return 0.0;
                for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    m[i * n + j] =
                        (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
                }
                m[i * n + k] = 0.0;
            }
            prev = m[k * n + k];
        }
        return sign * m[(n - 1) * n + (n - 1)];
    }

    // LU with partial pivoting for larger matrices.
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m[i * n + k]) > std::abs(m[pivot * n + k])) pivot = i;
        }
        if (m[pivot * n + k] == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
            det = -det;
        }
        det *= m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            double factor = m[i * n + k] / m[k * n + k];
            for (std::size_t j = k; j < n; ++j) m[i * n + j] -= factor * m[k * n + j];
        }
    }
    return det;
}

SingularityReport singularity_report(const AdjacencyView& a, double tol) {
    SingularityReport report;
    report.determinant = determinant(std::span(a.entries), a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        bool row_zero = true, col_zero = true;
        for (std::size_t j = 0; j < a.n; ++j) {
            if (a.at(i, j) != 0.0) row_zero = false;
            if (a.at(j, i) != 0.0) col_zero = false;
        }
        if (row_zero) report.zero_rows.push_back(i);
        if (col_zero) report.zero_cols.push_back(i);
    }
    report.invertible = std::abs(report.determinant) > tol;
    return report;
}

double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[2][1] * m[1][2]) -
           m[0][1] * (m[1][0] * m[2][2] - m[2][0] * m[1][2]) +
           m[0][2] * (m[1][0] * m[2][1] - m[2][0] * m[1][1]);
}

std::optional<Mat3> invert3(const Mat3& m) {
    double det = det3(m);
    if (det == 0.0) return std::nullopt;
    const auto [a, b, c] = m[0];
    const auto [d, e, f] = m[1];
    const auto [h, i, j] = m[2];
    Mat3 adj{{{(e * j - i * f), -(b * j - i * c), (b * f - e * c)},
              {-(d * j - h * f), (a * j - h * c), -(a * f - d * c)},
              {(d * i - h * e), -(a * i - h * b), (a * e - d * b)}}};
    for (auto& row : adj) {
        for (double& x : row) x /= det;
    }
    return adj;
}

}  // namespace sst::matrix
