#include "glspec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "glspec/graph6.hpp"

namespace glspec {

namespace {

constexpr int kCanonicalBound = 16;

using Cells = std::vector<std::uint64_t>;  // ordered partition, one mask per cell

// Split every cell by the vector of neighbor counts into all cells,
// sub-cells ordered by that signature; repeat until equitable. The
// signature is label-independent, so cell order is too.
void refine(Cells& cells, const std::vector<std::uint64_t>& adj) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (std::popcount(cells[i]) <= 1) continue;
            std::vector<std::pair<std::vector<int>, std::uint64_t>> groups;
            for (std::uint64_t m = cells[i]; m; m &= m - 1) {
                int v = std::countr_zero(m);
                std::vector<int> sig;
                sig.reserve(cells.size());
                for (auto cell : cells) sig.push_back(std::popcount(adj[v] & cell));
                bool found = false;
                for (auto& [key, mask] : groups)
                    if (key == sig) {
                        mask |= std::uint64_t{1} << v;
                        found = true;
                        break;
                    }
                if (!found) groups.emplace_back(std::move(sig), std::uint64_t{1} << v);
            }
            if (groups.size() > 1) {
                std::sort(groups.begin(), groups.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                Cells next(cells.begin(), cells.begin() + i);
                for (auto& [key, mask] : groups) next.push_back(mask);
                next.insert(next.end(), cells.begin() + i + 1, cells.end());
                cells = std::move(next);
                changed = true;
                break;
            }
        }
    }
}

struct Searcher {
    const std::vector<std::uint64_t>& adj;
    int n;
    std::vector<std::uint64_t> best{};  // packed upper-triangle bits
    bool have_best = false;

    std::vector<std::uint64_t> score(const Cells& cells) const {
        std::vector<int> vert(n);
        for (int i = 0; i < n; ++i) vert[i] = std::countr_zero(cells[i]);
        std::vector<std::uint64_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (adj[vert[i]] >> vert[j] & 1)
                    bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        return bits;
    }

    void search(Cells cells) {
        refine(cells, adj);
        size_t split = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) > 1) {
                split = i;
                break;
            }
        if (split == cells.size()) {
            auto s = score(cells);
            if (!have_best || s < best) {
                best = std::move(s);
                have_best = true;
            }
            return;
        }
        std::uint64_t tried = 0;  // vertices twin-equivalent to an explored branch
        for (std::uint64_t m = cells[split]; m; m &= m - 1) {
            std::uint64_t one = m & -m;
            if (tried & one) continue;
            int u = std::countr_zero(one);
            // swapping u with a same-cell twin is an automorphism fixing all
            // singleton cells, so one branch per twin class suffices
            for (std::uint64_t rest = m & ~one; rest; rest &= rest - 1) {
                int w = std::countr_zero(rest);
                std::uint64_t pair = one | (rest & -rest);
                if ((adj[u] & ~pair) == (adj[w] & ~pair)) tried |= rest & -rest;
            }
            Cells next(cells.begin(), cells.begin() + split);
            next.push_back(one);
            next.push_back(cells[split] & ~one);
            next.insert(next.end(), cells.begin() + split + 1, cells.end());
            search(std::move(next));
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    const int n = g.order();
    if (n > kCanonicalBound)
        throw std::invalid_argument("canonical_form: order above bound " +
                                    std::to_string(kCanonicalBound));
    if (n == 0) return g;
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
    Cells cells{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    Searcher s{adj, n};
    s.search(cells);
    // rebuild the graph from the winning bitstring
    std::vector<Edge> edges;
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (s.best[k / 64] >> (63 - k % 64) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace glspec
