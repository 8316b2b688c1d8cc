#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glspec {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// 64-bit mask per vertex. No loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);
    Graph(int n, std::vector<std::uint64_t> rows);  // validated

    int order() const { return n_; }
    int size() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint64_t neighbor_mask(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edge_list() const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct GraphStats {
    int max_degree = 0;
    std::optional<int> second_degree;            // needs n >= 2
    int pendant_count = 0;
    int quasi_pendant_count = 0;
    std::optional<int> vertex_connectivity;      // needs connected
    std::optional<int> max_edge_degree_sum;      // needs >= 2 edges
    std::optional<int> second_edge_degree_sum;   // needs >= 2 edges
};

std::optional<int> girth(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);
// Vertex sets of the connected components, each sorted ascending.
std::vector<std::vector<int>> components(const Graph& g);
GraphStats stats(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
// Subgraph induced on keep (distinct, in range); vertex i of the result
// is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edges(const Graph& g, const std::vector<Edge>& edges);
Graph add_edges(const Graph& g, const std::vector<Edge>& edges);
// Relabels: vertex v of g becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

}  // namespace glspec
