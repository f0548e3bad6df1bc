#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

#include "errors.hpp"

namespace pienc {

// Arbitrary-precision rational, always held in canonical form:
// denominator > 0 and gcd(|numerator|, denominator) == 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, integers are rationals
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p/q", plain integers, and decimal/scientific literals
    // ("3.25", "1e-12", "-2.5e3"). Throws DomainError on anything else.
    static Rational parse(const std::string& text);

    // num / 2^bits
    static Rational dyadic(const mpz_class& num, int bits);
    // 2^k, k may be negative
    static Rational pow2(int k);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const;

    // floor/ceil of value * 2^bits, resp. value * 10^digits
    mpz_class floor_scaled2(int bits) const;
    mpz_class ceil_scaled2(int bits) const;
    mpz_class floor_scaled10(int digits) const;
    mpz_class ceil_scaled10(int digits) const;

    std::string str() const;      // "7" or "-7/3"
    std::string frac_str() const; // always "num/den", e.g. "7/1"

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

// floor(sqrt(n)) by integer Newton iteration (x' = (x + n/x) / 2 from an
// upper-bound seed; terminates when the iterate stops decreasing).
// Throws DomainError for negative n.
mpz_class isqrt_newton(const mpz_class& n);

// Exact sum of many terms. Combines pairwise over raw numerator/denominator
// pairs and canonicalizes once at the end, so denominators never see a gcd
// until the final reduction.
Rational exact_sum(std::span<const Rational> terms);

// Outward decimal rendering with exactly frac_digits fractional digits:
// the floor string never exceeds x, the ceil string is never below it.
std::string decimal_floor_string(const Rational& x, int frac_digits);
std::string decimal_ceil_string(const Rational& x, int frac_digits);

} // namespace pienc
