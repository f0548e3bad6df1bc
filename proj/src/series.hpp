#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pienc {

// Truncated formal power series c[0] + c[1] x + ... + c[order] x^order with
// exact rational coefficients. Arithmetic between two series truncates to the
// smaller order; there is no silent zero padding.
class Series {
public:
    Series() : c_(1) {}
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(std::size_t order);
    static Series identity(std::size_t order); // the series x

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    Rational& operator[](std::size_t k) { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // pad with zeros or drop high-order terms
    Series truncated(std::size_t order) const;

    bool operator==(const Series& other) const { return c_ == other.c_; }

private:
    std::vector<Rational> c_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);
Series series_mul(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);

// substitute inner into outer; requires inner constant term 0
Series series_compose(const Series& outer, const Series& inner);

// compositional inverse g with f(g(x)) = x through the order of f;
// requires f[0] = 0 and f[1] != 0
Series series_revert(const Series& f);

// arcsin(x) = sum a_n x^(2n+1), a_n = (2n)! / (4^n (n!)^2 (2n+1)).
// Compact form: coefficient a_n at index n (the x^(2n+1) data only).
Series arcsin_coeffs(std::size_t N);

// a_n by the recurrence a_0 = 1, a_{n+1} = a_n (2n+1)^2 / ((2n+2)(2n+3))
Rational arcsin_coeff(std::size_t n);

// full series in x through the given order (even coefficients zero)
Series arcsin_series(std::size_t order);

Series cos_coeffs(std::size_t order);
Series sin_coeffs(std::size_t order);

// rational bound on sum_{n>N} a_n at x = 1: 1/floor(sqrt(2N+1)); requires N >= 1
Rational arcsin_tail_bound(std::size_t N);

// S_N = sum_{n=0}^{N} a_n, exact
Rational arcsin_partial_sum(std::size_t N);

// S at each checkpoint (strictly increasing), one sequential accumulation pass
std::vector<Rational> arcsin_partial_sums(std::span<const std::size_t> checkpoints);

// "2 + 1/3 + 3/20" for N=2: the doubled series terms 2*a_0 ... 2*a_N
std::string arcsin_pi_prefix(std::size_t N);

} // namespace pienc
