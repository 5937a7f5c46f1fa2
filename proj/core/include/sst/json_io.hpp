#pragma once

#include <string>

#include "sst/graph.hpp"

namespace sst::json_io {

/// Canonical JSON document for a graph:
/// {"nodes":[{name, meta, attrs}...], "links":[{src, dst, family, sign,
/// label, weight}...], "aliases":{label: type token}}.
/// Nodes appear in canonical order and links are referenced by node index,
/// so export -> import -> export is byte-identical.
std::string to_json_text(const Graph& g);

/// Inverse of to_json_text. Throws std::runtime_error on malformed input.
Graph graph_from_json_text(const std::string& text);

}  // namespace sst::json_io
