#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "glspec/graph.hpp"

namespace glspec {

inline constexpr int kEnumerationBound = 9;   // default ceiling
inline constexpr int kEnumerationCap = 10;    // hard cap behind the flag

// Visits exactly one representative (canonically labeled) per isomorphism
// class of connected simple graphs of order n. Augmentation from order
// n-1 with canonical-form deduplication. Orders above kEnumerationBound
// require allow_order_10 and are capped at kEnumerationCap.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit,
                         bool allow_order_10 = false);

std::vector<Graph> connected_graphs(int n, bool allow_order_10 = false);

// Keeps only graphs whose girth satisfies pred (forests pass nullopt).
std::vector<Graph> connected_graphs_girth(
    int n, const std::function<bool(std::optional<int>)>& pred,
    bool allow_order_10 = false);

}  // namespace glspec
