#pragma once

#include <optional>
#include <string>

#include "sst/graph.hpp"
#include "sst/matrix.hpp"

namespace sst::exports {

/// Graphviz DOT with one fixed style per family (L solid, C bold blue,
/// E dashed, N dotted and undirected). Links are drawn in canonical
/// orientation; nodes are shaped by meta-type.
std::string to_dot(const Graph& g);

/// Adjacency matrix as CSV: header row of proper names in canonical order,
/// then one row of weights per node.
std::string to_csv_adjacency(const Graph& g,
                             std::optional<LinkFamily> family = std::nullopt);

}  // namespace sst::exports
