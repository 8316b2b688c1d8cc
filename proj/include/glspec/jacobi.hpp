#pragma once

#include <vector>

namespace glspec {

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
// returned in nonincreasing order.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);

}  // namespace glspec
