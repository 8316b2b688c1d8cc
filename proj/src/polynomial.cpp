#include "glspec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace glspec {

namespace {

const BigInt kZero = 0;

int sign_of(const BigInt& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

// Rational-coefficient scratch polynomials for division, gcd and Yun.
using RatPoly = std::vector<BigRat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly to_rat(const IntPoly& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

// Scale by the positive lcm of denominators, then strip the content;
// only positive factors are used so the sign is that of the input.
IntPoly to_int_primitive(const RatPoly& p) {
    BigInt mult = 1;
    for (const auto& c : p) mult = boost::multiprecision::lcm(mult, denominator(c));
    std::vector<BigInt> ints;
    ints.reserve(p.size());
    for (const auto& c : p) ints.push_back(BigInt(numerator(c) * (mult / denominator(c))));
    return IntPoly(std::move(ints)).primitive_part();
}

RatPoly rat_rem(RatPoly num, const RatPoly& den) {
    trim(num);
    while (deg(num) >= deg(den)) {
        BigRat factor = num.back() / den.back();
        int shift = deg(num) - deg(den);
        for (int i = 0; i <= deg(den); ++i) num[i + shift] -= factor * den[i];
        num.pop_back();
        trim(num);
    }
    return num;
}

RatPoly rat_divide_exact(RatPoly num, const RatPoly& den) {
    trim(num);
    RatPoly q(std::max(deg(num) - deg(den) + 1, 0), BigRat(0));
    while (deg(num) >= deg(den)) {
        BigRat factor = num.back() / den.back();
        int shift = deg(num) - deg(den);
        q[shift] = factor;
        for (int i = 0; i <= deg(den); ++i) num[i + shift] -= factor * den[i];
        num.pop_back();
        trim(num);
    }
    if (!num.empty()) throw std::domain_error("polynomial division is not exact");
    return q;
}

void make_monic(RatPoly& p) {
    trim(p);
    if (p.empty()) return;
    BigRat lead = p.back();
    for (auto& c : p) c /= lead;
}

RatPoly rat_gcd_monic(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

RatPoly rat_derivative(const RatPoly& p) {
    RatPoly out;
    for (int k = 1; k <= deg(p); ++k) out.push_back(p[k] * k);
    return out;
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> out = c_;
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    std::vector<BigInt> out = c_;
    for (auto& c : out) c *= s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    std::vector<BigInt> out;
    for (int k = 1; k <= degree(); ++k) out.push_back(c_[k] * k);
    return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

BigRat IntPoly::evaluate(const BigRat& x) const {
    BigRat acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + BigRat(c_[k]);
    return acc;
}

int IntPoly::sign_at(const BigRat& x) const {
    // For x = p/q (q > 0), sign(f(x)) = sign(sum c_k p^k q^(d-k)).
    if (is_zero()) return 0;
    BigInt p = numerator(x), q = denominator(x);
    BigInt acc = c_.back(), qpow = 1;
    for (int k = degree() - 1; k >= 0; --k) {
        qpow *= q;
        acc = acc * p + c_[k] * qpow;
    }
    return sign_of(acc);
}

int IntPoly::sign_at_pos_inf() const {
    if (is_zero()) return 0;
    return sign_of(c_.back());
}

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sign_of(c_.back());
    return degree() % 2 == 0 ? s : -s;
}

IntPoly IntPoly::compose_linear(const BigInt& a, const BigInt& b) const {
    IntPoly acc;
    IntPoly lin({a, b});
    for (int k = degree(); k >= 0; --k) acc = acc * lin + IntPoly::constant(c_[k]);
    return acc;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    std::vector<BigInt> out = c_;
    for (auto& c : out) c /= g;
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = c_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || k == 0) out += mag.str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    RatPoly q = rat_divide_exact(to_rat(num), to_rat(den));
    std::vector<BigInt> out;
    out.reserve(q.size());
    for (const auto& c : q) {
        if (denominator(c) != 1) throw std::domain_error("quotient is not an integer polynomial");
        out.push_back(BigInt(numerator(c)));
    }
    return IntPoly(std::move(out));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    RatPoly g = rat_gcd_monic(to_rat(a), to_rat(b));
    IntPoly out = to_int_primitive(g);
    if (!out.is_zero() && out.leading() < 0) out = -out;
    return out;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    RatPoly q = to_rat(p);
    make_monic(q);
    if (deg(q) == 0) return out;
    RatPoly dq = rat_derivative(q);
    RatPoly g = rat_gcd_monic(q, dq);
    RatPoly c = rat_divide_exact(q, g);
    RatPoly d = rat_sub(rat_divide_exact(dq, g), rat_derivative(c));
    int m = 1;
    while (deg(c) > 0) {
        RatPoly a = rat_gcd_monic(c, d);
        RatPoly cn = rat_divide_exact(c, a);
        d = rat_sub(rat_divide_exact(d, a), rat_derivative(cn));
        if (deg(a) > 0) {
            IntPoly f = to_int_primitive(a);
            if (f.leading() < 0) f = -f;
            out.emplace_back(std::move(f), m);
        }
        c = std::move(cn);
        ++m;
    }
    return out;
}

}  // namespace glspec
