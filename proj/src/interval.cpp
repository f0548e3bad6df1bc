#include "interval.hpp"

#include <algorithm>
#include <utility>

namespace pienc {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) {
        throw DomainError("interval endpoints out of order: [" + lo_.str() + ", " + hi_.str() + "]");
    }
}

namespace {

Interval minmax4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const Rational lo = std::min(std::min(a, b), std::min(c, d));
    const Rational hi = std::max(std::max(a, b), std::max(c, d));
    return Interval(lo, hi);
}

void require_bits(int bits) {
    if (bits < 1) throw DomainError("precision must be a positive number of bits");
}

} // namespace

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator*(const Interval& a, const Interval& b) {
    return minmax4(a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi());
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo().sign() <= 0 && b.hi().sign() >= 0) {
        throw DomainError("division by an interval containing zero: [" + b.lo().str() + ", " +
                          b.hi().str() + "]");
    }
    return minmax4(a.lo() / b.lo(), a.lo() / b.hi(), a.hi() / b.lo(), a.hi() / b.hi());
}

Interval interval_arith(ArithOp op, const Interval& a, const Interval& b) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw DomainError("unknown interval operation");
}

Interval square(const Interval& a) {
    Rational l2 = a.lo() * a.lo();
    Rational h2 = a.hi() * a.hi();
    if (a.lo().sign() >= 0) return Interval(l2, h2);
    if (a.hi().sign() <= 0) return Interval(h2, l2);
    return Interval(Rational(0), std::max(l2, h2));
}

namespace {

// largest dyadic s/2^bits with (s/2^bits)^2 <= x
mpz_class sqrt_scaled_down(const Rational& x, int bits) {
    return isqrt_newton(x.floor_scaled2(2 * bits));
}

// smallest dyadic t/2^bits with (t/2^bits)^2 >= x
mpz_class sqrt_scaled_up(const Rational& x, int bits) {
    mpz_class m = x.ceil_scaled2(2 * bits);
    mpz_class t = isqrt_newton(m);
    // t = floor(sqrt(m)) may still fall short of sqrt(x * 4^bits)
    if (t * t * x.den() < (x.num() << (2 * bits))) {
        t += 1;
    }
    return t;
}

} // namespace

Interval interval_sqrt(const Interval& a, int bits) {
    require_bits(bits);
    if (a.lo().sign() < 0) {
        throw DomainError("square root of an interval with negative lower endpoint: " +
                          a.lo().str());
    }
    return Interval(Rational::dyadic(sqrt_scaled_down(a.lo(), bits), bits),
                    Rational::dyadic(sqrt_scaled_up(a.hi(), bits), bits));
}

Interval compress(const Interval& a, int bits) {
    require_bits(bits);
    return Interval(Rational::dyadic(a.lo().floor_scaled2(bits), bits),
                    Rational::dyadic(a.hi().ceil_scaled2(bits), bits));
}

Interval intersect(const Interval& a, const Interval& b) {
    const Rational& lo = std::max(a.lo(), b.lo());
    const Rational& hi = std::min(a.hi(), b.hi());
    if (lo > hi) {
        throw InconsistencyError("disjoint enclosures: [" + a.lo().str() + ", " + a.hi().str() +
                                 "] and [" + b.lo().str() + ", " + b.hi().str() + "]");
    }
    return Interval(lo, hi);
}

} // namespace pienc
