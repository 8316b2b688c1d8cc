#pragma once

#include <string>

#include "glspec/graph.hpp"

namespace glspec {

// Canonical relabeling: constant on isomorphism classes, separating
// across them. Partition refinement plus individualization search;
// exact, guarded to order <= 16 where the search stays cheap.
Graph canonical_graph(const Graph& g);
std::string canonical_form(const Graph& g);  // graph6 of canonical_graph
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace glspec
