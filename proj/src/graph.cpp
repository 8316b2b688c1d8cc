#include "glspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace glspec {

namespace {
constexpr int kMaxOrder = 62;  // graph6 single-byte range

void check_order(int n) {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}
}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    check_order(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
}

Graph::Graph(int n, std::vector<std::uint64_t> rows) : n_(n), adj_(std::move(rows)) {
    check_order(n);
    if (adj_.size() != static_cast<size_t>(n))
        throw std::invalid_argument("adjacency row count mismatch");
    std::uint64_t allowed = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int v = 0; v < n; ++v) {
        if (adj_[v] & ~allowed) throw std::invalid_argument("adjacency bit out of range");
        if (adj_[v] >> v & 1) throw std::invalid_argument("loop edge rejected");
        for (int u = v + 1; u < n; ++u)
            if ((adj_[v] >> u & 1) != (adj_[u] >> v & 1))
                throw std::invalid_argument("adjacency not symmetric");
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

int Graph::size() const {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u] >> v & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (std::uint64_t m = adj_[v]; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t m = adj_[u] >> u; m; m &= m - 1)
            out.emplace_back(u, u + std::countr_zero(m));
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = std::popcount(adj_[v]);
    return d;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != -1 && 2 * dist[u] >= best) continue;
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    // non-tree edge: closed walk through root of this length,
                    // which contains a cycle no longer than it
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace {
std::uint64_t reach_mask(const Graph& g, int start) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbor_mask(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}
}  // namespace

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::uint64_t all = (std::uint64_t{1} << n) - 1;
    return reach_mask(g, 0) == all;
}

int component_count(const Graph& g) {
    const int n = g.order();
    std::uint64_t left = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    int count = 0;
    while (left) {
        left &= ~reach_mask(g, std::countr_zero(left));
        ++count;
    }
    return count;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::uint64_t left = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<int>> out;
    while (left) {
        std::uint64_t comp = reach_mask(g, std::countr_zero(left));
        std::vector<int> verts;
        for (std::uint64_t m = comp; m; m &= m - 1)
            verts.push_back(std::countr_zero(m));
        out.push_back(std::move(verts));
        left &= ~comp;
    }
    return out;
}

namespace {
// Minimum vertex cut by brute force over subset sizes; complete graphs
// get n-1 by convention.
int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (g.size() == n * (n - 1) / 2) return n - 1;
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::vector<int> keep;
            std::uint64_t drop = 0;
            for (int v : pick) drop |= std::uint64_t{1} << v;
            for (int v = 0; v < n; ++v)
                if (!(drop >> v & 1)) keep.push_back(v);
            if (!is_connected(induced_subgraph(g, keep))) return k;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return n - 1;
}
}  // namespace

GraphStats stats(const Graph& g) {
    const int n = g.order();
    GraphStats s;
    auto deg = g.degrees();
    if (n > 0) s.max_degree = *std::max_element(deg.begin(), deg.end());
    if (n >= 2) {
        // second largest degree: max over vertices other than one fixed
        // maximum-degree vertex, so d2 may equal the maximum
        int maxv = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
        int d2 = -1;
        for (int v = 0; v < n; ++v)
            if (v != maxv) d2 = std::max(d2, deg[v]);
        s.second_degree = d2;
    }
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 1) ++s.pendant_count;
        bool quasi = false;
        for (int u : g.neighbors(v)) quasi = quasi || deg[u] == 1;
        if (quasi) ++s.quasi_pendant_count;
    }
    if (n >= 1 && is_connected(g)) s.vertex_connectivity = vertex_connectivity(g);
    auto edges = g.edge_list();
    if (edges.size() >= 2) {
        std::vector<int> sums;
        sums.reserve(edges.size());
        for (auto [u, v] : edges) sums.push_back(deg[u] + deg[v]);
        std::sort(sums.begin(), sums.end(), std::greater<>());
        s.max_edge_degree_sum = sums[0];
        s.second_edge_degree_sum = sums[1];
    }
    return s;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto edges = g.edge_list();
    for (auto [u, v] : h.edge_list())
        edges.emplace_back(u + g.order(), v + g.order());
    return Graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
    auto edges = disjoint_union(g, h).edge_list();
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            edges.emplace_back(u, g.order() + v);
    return Graph(g.order() + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> where(g.order(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        if (where[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        where[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(keep.size()), edges);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    std::vector<int> keep;
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& edges) {
    auto kept = g.edge_list();
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v)) throw std::invalid_argument("edge to delete not present");
        std::erase_if(kept, [&](Edge e) {
            return (e.first == u && e.second == v) || (e.first == v && e.second == u);
        });
    }
    return Graph(g.order(), kept);
}

Graph add_edges(const Graph& g, const std::vector<Edge>& edges) {
    auto all = g.edge_list();
    all.insert(all.end(), edges.begin(), edges.end());
    return Graph(g.order(), all);  // constructor rejects duplicates
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    if (perm.size() != static_cast<size_t>(g.order()))
        throw std::invalid_argument("permutation length mismatch");
    std::vector<int> seen(g.order(), 0);
    for (int v : perm) {
        if (v < 0 || v >= g.order() || seen[v]++)
            throw std::invalid_argument("not a permutation");
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace glspec
