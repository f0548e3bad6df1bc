#pragma once

#include "rational.hpp"

namespace pienc {

// Closed interval with exact rational endpoints. Every operation returns an
// interval containing the exact image of its inputs; widening is allowed,
// losing points is not.
class Interval {
public:
    Interval(Rational lo, Rational hi);
    static Interval point(const Rational& x) { return Interval(x, x); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_;
    Rational hi_;
};

enum class ArithOp { add, sub, mul, div };

// Exact endpoint arithmetic; no rounding happens here. Division by an
// interval containing zero throws DomainError.
Interval interval_arith(ArithOp op, const Interval& a, const Interval& b);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

// Tight enclosure of {x^2 : x in a} (unlike a*a it knows both factors are
// the same number, so an interval straddling zero squares to [0, max^2]).
Interval square(const Interval& a);

// Enclosure of sqrt over the interval. Endpoints are dyadics with `bits`
// fractional bits, computed by integer Newton on floor(sqrt(n * 4^bits))
// with a +1 adjustment on the upper end; rounding adds at most 2^(1-bits)
// of width. Requires a.lo >= 0.
Interval interval_sqrt(const Interval& a, int bits);

// Outward rounding to dyadic endpoints with at most `bits` fractional bits:
// lo down, hi up. Always a superset; widens by at most 2^(1-bits).
Interval compress(const Interval& a, int bits);

// [max(a.lo, b.lo), min(a.hi, b.hi)]; throws InconsistencyError when the
// intervals are disjoint.
Interval intersect(const Interval& a, const Interval& b);

} // namespace pienc
