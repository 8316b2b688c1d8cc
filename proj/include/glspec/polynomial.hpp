#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace glspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense integer polynomial, coefficients ascending by degree, trimmed so
// the back is nonzero. The zero polynomial has an empty list and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly& o) const = default;

    IntPoly derivative() const;
    BigInt evaluate(const BigInt& x) const;
    BigRat evaluate(const BigRat& x) const;
    // Sign of the value at a rational point, computed without divisions.
    int sign_at(const BigRat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    // p(a + b*x)
    IntPoly compose_linear(const BigInt& a, const BigInt& b) const;

    // Coefficients divided by their gcd; sign of the polynomial is kept.
    IntPoly primitive_part() const;

    std::string to_string() const;

private:
    std::vector<BigInt> c_;
};

// Exact quotient; throws std::domain_error if den does not divide num
// over the rationals or the quotient is not an integer polynomial.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

// Primitive gcd with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Yun decomposition: p = c * prod f_i^m_i with each f_i squarefree,
// primitive, positive leading coefficient; pairs are (f_i, m_i) with
// degree(f_i) >= 1, ascending m_i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

}  // namespace glspec
