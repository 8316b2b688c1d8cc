#pragma once

#include <string>

#include "glspec/graph.hpp"

namespace glspec {

// Standard graph6 text format, orders 0..62 (single-byte prefix).
// parse accepts an optional ">>graph6<<" header; errors carry the byte
// offset of the offending character.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

}  // namespace glspec
