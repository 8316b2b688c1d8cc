#include "glspec/enumerate.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "glspec/canonical.hpp"
#include "glspec/graph6.hpp"

namespace glspec {

namespace {

// Augment each graph of order k-1 with vertex k-1 attached to every
// nonempty subset of the others; canonical dedup keeps one labeling per
// isomorphism class. Connectivity is preserved by construction.
void augment(const Graph& g, int k, std::unordered_set<std::string>& seen,
             const std::function<void(Graph)>& fresh) {
    std::vector<std::uint64_t> rows(k, 0);
    for (int v = 0; v < k - 1; ++v) rows[v] = g.neighbor_mask(v);
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << (k - 1)); ++sub) {
        auto aug = rows;
        aug[k - 1] = sub;
        for (std::uint64_t m = sub; m; m &= m - 1)
            aug[std::countr_zero(m)] |= std::uint64_t{1} << (k - 1);
        Graph c = canonical_graph(Graph(k, aug));
        if (seen.insert(emit_graph6(c)).second) fresh(std::move(c));
    }
}

// Orders up to kEnumerationBound are built once and kept; a deque keeps
// references valid while later levels are appended.
const std::vector<Graph>& cached_level(int n) {
    static std::mutex mutex;
    static std::deque<std::vector<Graph>> levels;
    std::scoped_lock lock(mutex);
    if (levels.empty()) levels.push_back({Graph(1)});
    while (static_cast<int>(levels.size()) < n) {
        int k = static_cast<int>(levels.size()) + 1;
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& g : levels[k - 2])
            augment(g, k, seen, [&](Graph c) { next.push_back(std::move(c)); });
        levels.push_back(std::move(next));
    }
    return levels[n - 1];
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit,
                         bool allow_order_10) {
    int bound = allow_order_10 ? kEnumerationCap : kEnumerationBound;
    if (n < 1 || n > bound)
        throw std::invalid_argument("enumerate_connected: order " + std::to_string(n) +
                                    " outside 1.." + std::to_string(bound));
    if (n <= kEnumerationBound) {
        for (const Graph& g : cached_level(n)) visit(g);
        return;
    }
    // One level past the cache is streamed without being stored.
    std::unordered_set<std::string> seen;
    for (const Graph& g : cached_level(n - 1))
        augment(g, n, seen, [&](Graph c) { visit(c); });
}

std::vector<Graph> connected_graphs(int n, bool allow_order_10) {
    std::vector<Graph> out;
    enumerate_connected(n, [&](const Graph& g) { out.push_back(g); }, allow_order_10);
    return out;
}

std::vector<Graph> connected_graphs_girth(
    int n, const std::function<bool(std::optional<int>)>& pred, bool allow_order_10) {
    std::vector<Graph> out;
    enumerate_connected(
        n,
        [&](const Graph& g) {
            if (pred(girth(g))) out.push_back(g);
        },
        allow_order_10);
    return out;
}

}  // namespace glspec
