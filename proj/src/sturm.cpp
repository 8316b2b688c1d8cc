#include "glspec/sturm.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace glspec {

namespace {

// Sturm chain of a squarefree polynomial. Each element is the integer
// primitive part of the rational remainder, scaled by positive factors
// only so the sign pattern is preserved.
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<IntPoly> chain{squarefree, squarefree.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        // Pseudo-remainder with an even power of the leading coefficient:
        // lc(b)^(2m) * a = q*b + r keeps sign(r) = sign(a mod b).
        int delta = a.degree() - b.degree();
        BigInt lead2 = b.leading() * b.leading();
        IntPoly r = a * boost::multiprecision::pow(lead2, static_cast<unsigned>(delta / 2 + 1));
        while (r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            BigInt factor = r.coeff(r.degree()) / b.leading();
            std::vector<BigInt> sub(shift, 0);
            sub.insert(sub.end(), b.coeffs().begin(), b.coeffs().end());
            r = r - IntPoly(std::move(sub)) * factor;
        }
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

int variations_at(const std::vector<IntPoly>& chain, const std::optional<BigRat>& point,
                  bool pos_inf) {
    int count = 0, prev = 0;
    for (const auto& s : chain) {
        int sig = point ? s.sign_at(*point) : (pos_inf ? s.sign_at_pos_inf() : s.sign_at_neg_inf());
        if (sig == 0) continue;
        if (prev != 0 && sig != prev) ++count;
        prev = sig;
    }
    return count;
}

// Distinct roots of the squarefree polynomial in the interval.
int count_distinct(const IntPoly& squarefree, const IntervalSpec& iv) {
    auto chain = sturm_chain(squarefree);
    // Sturm: V(a) - V(b) counts roots in (a, b].
    int count = variations_at(chain, iv.lo, false) - variations_at(chain, iv.hi, true);
    if (iv.lo && iv.lo_closed && squarefree.sign_at(*iv.lo) == 0) ++count;
    if (iv.hi && !iv.hi_closed && squarefree.sign_at(*iv.hi) == 0) --count;
    return count;
}

void validate(const IntervalSpec& iv) {
    if (iv.lo && iv.hi && *iv.lo > *iv.hi)
        throw std::invalid_argument("interval: lower bound exceeds upper bound");
}

struct Cursor {
    const std::string& s;
    size_t i = 0;
    char peek() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        char c = peek();
        ++i;
        return c;
    }
};

BigInt parse_integer(Cursor& c) {
    c.peek();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("interval: expected number at '" + c.s + "'");
    return BigInt(c.s.substr(start, c.i - start));
}

std::string parse_name(Cursor& c) {
    c.peek();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isalpha(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    return c.s.substr(start, c.i - start);
}

// endpoint := ['+'|'-'] term (('+'|'-') term)*, term := int['/'int] | name
// An infinite endpoint sets inf_sign to -1 or +1 and yields nullopt.
std::optional<BigRat> parse_endpoint(Cursor& c, const std::map<std::string, BigRat>& vars,
                                     int& inf_sign) {
    BigRat total = 0;
    bool first = true;
    int sign = 1;
    inf_sign = 0;
    for (;;) {
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = ch == '-' ? -1 : 1;
        } else if (!first) {
            break;
        }
        BigRat term;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            BigInt num = parse_integer(c);
            if (c.peek() == '/') {
                c.take();
                BigInt den = parse_integer(c);
                if (den == 0) throw std::invalid_argument("interval: zero denominator");
                term = BigRat(num, den);
            } else {
                term = BigRat(num);
            }
        } else {
            std::string name = parse_name(c);
            if (name.empty())
                throw std::invalid_argument("interval: expected number or name in '" + c.s + "'");
            if (name == "inf" || name == "oo") {
                if (!first) throw std::invalid_argument("interval: inf inside expression");
                inf_sign = sign;
                return std::nullopt;
            }
            auto it = vars.find(name);
            if (it == vars.end())
                throw std::invalid_argument("interval: unknown name '" + name + "'");
            term = it->second;
        }
        total += sign * term;
        sign = 1;
        first = false;
        ch = c.peek();
        if (ch != '+' && ch != '-') break;
    }
    return total;
}

std::string rat_text(const BigRat& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

}  // namespace

IntervalSpec IntervalSpec::closed(BigRat lo, BigRat hi) {
    return {std::move(lo), std::move(hi), true, true};
}

IntervalSpec IntervalSpec::singleton(BigRat v) { return closed(v, v); }

IntervalSpec IntervalSpec::at_least(BigRat lo) {
    return {std::move(lo), std::nullopt, true, false};
}

IntervalSpec IntervalSpec::greater_than(BigRat lo) {
    return {std::move(lo), std::nullopt, false, false};
}

IntervalSpec IntervalSpec::parse(const std::string& text,
                                 const std::map<std::string, BigRat>& vars) {
    Cursor c{text};
    IntervalSpec iv;
    char open = c.take();
    if (open == '[')
        iv.lo_closed = true;
    else if (open == '(')
        iv.lo_closed = false;
    else
        throw std::invalid_argument("interval: expected '[' or '(' in '" + text + "'");
    int inf_sign = 0;
    iv.lo = parse_endpoint(c, vars, inf_sign);
    if (!iv.lo && inf_sign > 0)
        throw std::invalid_argument("interval: lower bound cannot be +inf in '" + text + "'");
    if (c.take() != ',') throw std::invalid_argument("interval: expected ',' in '" + text + "'");
    iv.hi = parse_endpoint(c, vars, inf_sign);
    if (!iv.hi && inf_sign < 0)
        throw std::invalid_argument("interval: upper bound cannot be -inf in '" + text + "'");
    char close = c.take();
    if (close == ']')
        iv.hi_closed = true;
    else if (close == ')')
        iv.hi_closed = false;
    else
        throw std::invalid_argument("interval: expected ']' or ')' in '" + text + "'");
    if (c.peek() != '\0')
        throw std::invalid_argument("interval: trailing characters in '" + text + "'");
    if (!iv.lo) iv.lo_closed = false;
    if (!iv.hi) iv.hi_closed = false;
    validate(iv);
    return iv;
}

std::string IntervalSpec::text() const {
    std::string out = lo_closed ? "[" : "(";
    out += lo ? rat_text(*lo) : "-inf";
    out += ",";
    out += hi ? rat_text(*hi) : "inf";
    out += hi_closed ? "]" : ")";
    return out;
}

int count_in_interval(const IntPoly& p, const IntervalSpec& interval) {
    if (p.is_zero()) throw std::domain_error("count_in_interval: zero polynomial");
    validate(interval);
    if (interval.lo && interval.hi && *interval.lo == *interval.hi &&
        !(interval.lo_closed && interval.hi_closed))
        return 0;
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        total += mult * count_distinct(factor, interval);
    return total;
}

int root_multiplicity(const IntPoly& p, const BigRat& r) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        if (factor.sign_at(r) == 0) return mult;
    return 0;
}

}  // namespace glspec
