#pragma once

#include "glspec/graph.hpp"
#include "glspec/polynomial.hpp"
#include "glspec/sturm.hpp"

#include <vector>

namespace glspec {

inline constexpr int kCharpolyBound = 12;

// Nonincreasing Laplacian eigenvalues.
using Spectrum = std::vector<double>;

std::vector<std::vector<BigInt>> laplacian(const Graph& g);

// Characteristic polynomial of the Laplacian, exact, monic of degree n.
IntPoly charpoly(const Graph& g);

// Characteristic polynomial of the principal submatrix of the Laplacian
// with row and column v removed (not the Laplacian of g - v).
IntPoly charpoly_vertex_deleted(const Graph& g, int v);

// Characteristic polynomial assembled by the cut-edge recursion on the
// two components of g - e; equals charpoly(g).
IntPoly charpoly_via_cut_edge(const Graph& g, Edge e);

// Number of Laplacian eigenvalues in the interval, with multiplicity.
int m_interval(const Graph& g, const IntervalSpec& interval);

Spectrum eigenvalues_numeric(const Graph& g);

// k-th largest Laplacian eigenvalue, 1-based, numeric.
double mu_k(const Graph& g, int k);

enum class Cmp { less, equal, greater };

// Exact comparison of the k-th largest Laplacian eigenvalue with c.
Cmp mu_k_compare(const Graph& g, int k, const BigRat& c);

}  // namespace glspec
