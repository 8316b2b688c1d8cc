#include "glspec/spectra.hpp"

#include "glspec/jacobi.hpp"

#include <algorithm>
#include <stdexcept>

namespace glspec {

namespace {

// Faddeev-LeVerrier: exact characteristic polynomial of an integer
// matrix; every trace division is exact.
IntPoly charpoly_matrix(const std::vector<std::vector<BigInt>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<BigInt> coeff(n + 1, 0);
    coeff[n] = 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (int k = 1; k <= n; ++k) {
        // m <- a * (m + c_{n-k+1} I), with m = 0 and the coefficient 1 at k = 1
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] += coeff[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
            }
        m = std::move(next);
        BigInt trace = 0;
        for (int i = 0; i < n; ++i) trace += m[i][i];
        coeff[n - k] = -trace / k;
    }
    return IntPoly(std::move(coeff));
}

std::vector<std::vector<BigInt>> laplacian_submatrix(const Graph& g, int skip) {
    int n = g.order();
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != skip) keep.push_back(v);
    std::vector<std::vector<BigInt>> m(keep.size(), std::vector<BigInt>(keep.size(), 0));
    for (size_t i = 0; i < keep.size(); ++i) {
        m[i][i] = g.degree(keep[i]);
        for (size_t j = 0; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) m[i][j] = -1;
    }
    return m;
}

void check_bound(const Graph& g) {
    if (g.order() > kCharpolyBound)
        throw std::invalid_argument("charpoly: order " + std::to_string(g.order()) +
                                    " exceeds the exact bound " + std::to_string(kCharpolyBound));
}

}  // namespace

std::vector<std::vector<BigInt>> laplacian(const Graph& g) {
    return laplacian_submatrix(g, -1);
}

IntPoly charpoly(const Graph& g) {
    check_bound(g);
    return charpoly_matrix(laplacian(g));
}

IntPoly charpoly_vertex_deleted(const Graph& g, int v) {
    check_bound(g);
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("charpoly_vertex_deleted: vertex out of range");
    return charpoly_matrix(laplacian_submatrix(g, v));
}

IntPoly charpoly_via_cut_edge(const Graph& g, Edge e) {
    check_bound(g);
    auto [v1, v2] = e;
    if (!g.has_edge(v1, v2)) throw std::invalid_argument("cut edge: edge not present");
    Graph cut = delete_edges(g, {e});
    auto comps = components(cut);
    std::vector<int> side1, side2;
    std::vector<std::vector<int>> rest;
    for (auto& comp : comps) {
        bool has1 = std::find(comp.begin(), comp.end(), v1) != comp.end();
        bool has2 = std::find(comp.begin(), comp.end(), v2) != comp.end();
        if (has1 && has2) throw std::invalid_argument("cut edge: edge lies on a cycle");
        if (has1)
            side1 = comp;
        else if (has2)
            side2 = comp;
        else
            rest.push_back(comp);
    }
    Graph g1 = induced_subgraph(cut, side1);
    Graph g2 = induced_subgraph(cut, side2);
    int p1 = static_cast<int>(std::find(side1.begin(), side1.end(), v1) - side1.begin());
    int p2 = static_cast<int>(std::find(side2.begin(), side2.end(), v2) - side2.begin());
    IntPoly f1 = charpoly(g1), f2 = charpoly(g2);
    IntPoly result = f1 * f2 - f1 * charpoly_vertex_deleted(g2, p2) -
                     charpoly_vertex_deleted(g1, p1) * f2;
    for (const auto& comp : rest) result = result * charpoly(induced_subgraph(cut, comp));
    return result;
}

int m_interval(const Graph& g, const IntervalSpec& interval) {
    return count_in_interval(charpoly(g), interval);
}

Spectrum eigenvalues_numeric(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = g.degree(i);
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) a[i][j] = -1;
    }
    return jacobi_eigenvalues(std::move(a));
}

double mu_k(const Graph& g, int k) {
    if (k < 1 || k > g.order()) throw std::invalid_argument("mu_k: k out of range");
    return eigenvalues_numeric(g)[k - 1];
}

Cmp mu_k_compare(const Graph& g, int k, const BigRat& c) {
    if (k < 1 || k > g.order()) throw std::invalid_argument("mu_k_compare: k out of range");
    IntPoly p = charpoly(g);
    if (count_in_interval(p, IntervalSpec::greater_than(c)) >= k) return Cmp::greater;
    if (count_in_interval(p, IntervalSpec::at_least(c)) >= k) return Cmp::equal;
    return Cmp::less;
}

}  // namespace glspec
