#pragma once

#include "glspec/polynomial.hpp"

#include <map>
#include <optional>
#include <string>

namespace glspec {

// Rational interval with independently open or closed endpoints; an
// absent bound means the interval is unbounded on that side.
struct IntervalSpec {
    std::optional<BigRat> lo;
    std::optional<BigRat> hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static IntervalSpec closed(BigRat lo, BigRat hi);
    static IntervalSpec singleton(BigRat v);
    static IntervalSpec at_least(BigRat lo);
    static IntervalSpec greater_than(BigRat lo);

    // Grammar: '[' or '(', endpoint, ',', endpoint, ']' or ')'.
    // Endpoints are sums/differences of integers, rationals written a/b,
    // names bound in vars, or inf / +inf / -inf.
    static IntervalSpec parse(const std::string& text,
                              const std::map<std::string, BigRat>& vars = {});

    std::string text() const;
    bool operator==(const IntervalSpec& o) const = default;
};

// Exact number of real roots of p in the interval, with multiplicity.
int count_in_interval(const IntPoly& p, const IntervalSpec& interval);

// Multiplicity of the rational point as a root of p (0 if not a root).
int root_multiplicity(const IntPoly& p, const BigRat& r);

}  // namespace glspec
