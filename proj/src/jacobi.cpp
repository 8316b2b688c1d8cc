#include "glspec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace glspec {

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("jacobi: matrix is not square");

    auto off_norm = [&] {
        double s = 0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) s += a[p][q] * a[p][q];
        return std::sqrt(2 * s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > 1e-12; ++sweep) {
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                double tau = s / (1 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0;
                for (size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = a[r][p], arq = a[r][q];
                    a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
                    a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace glspec
