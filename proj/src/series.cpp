#include "series.hpp"

#include <algorithm>

#include "errors.hpp"

namespace pienc {

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("series needs at least the constant coefficient");
}

Series Series::zero(std::size_t order) {
    return Series(std::vector<Rational>(order + 1));
}

Series Series::identity(std::size_t order) {
    Series s = zero(order);
    if (order >= 1) s[1] = Rational(1);
    return s;
}

Series Series::truncated(std::size_t order) const {
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order && k < c_.size(); ++k) c[k] = c_[k];
    return Series(std::move(c));
}

namespace {

template <typename F>
Series pointwise(const Series& a, const Series& b, F f) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = f(a[k], b[k]);
    return Series(std::move(c));
}

} // namespace

Series operator+(const Series& a, const Series& b) {
    return pointwise(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Series operator-(const Series& a, const Series& b) {
    return pointwise(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Series operator*(const Rational& c, const Series& a) {
    std::vector<Rational> r(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) r[k] = c * a[k];
    return Series(std::move(r));
}

Series series_mul(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (i <= a.order() && j <= b.order()) c[i + j] = c[i + j] + a[i] * b[j];
        }
    }
    return Series(std::move(c));
}

Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

Series series_compose(const Series& outer, const Series& inner) {
    if (!inner[0].is_zero()) {
        throw DomainError("series composition needs inner constant term 0, got " + inner[0].str());
    }
    std::size_t n = std::min(outer.order(), inner.order());
    Series in = inner.truncated(n);
    // Horner: result = (...(c_n * in + c_{n-1}) * in + ...) + c_0
    Series result = Series::zero(n);
    result[0] = outer[n];
    for (std::size_t k = n; k-- > 0;) {
        result = series_mul(result, in);
        result[0] = result[0] + outer[k];
    }
    return result;
}

Series series_revert(const Series& f) {
    if (!f[0].is_zero()) {
        throw DomainError("series reversion needs constant term 0, got " + f[0].str());
    }
    if (f.order() < 1 || f[1].is_zero()) {
        throw DomainError("series reversion needs a nonzero linear coefficient");
    }
    std::size_t n = f.order();
    Series g = Series::zero(n);
    g[1] = Rational(1) / f[1];
    // With g known through order k-1 and g_k = 0, the x^k coefficient of f(g)
    // is off from the target (0 for k >= 2) by exactly f_1 * g_k.
    for (std::size_t k = 2; k <= n; ++k) {
        Series h = series_compose(f.truncated(k), g.truncated(k));
        g[k] = -h[k] / f[1];
    }
    return g;
}

Rational arcsin_coeff(std::size_t n) {
    Rational a(1);
    for (std::size_t m = 0; m < n; ++m) {
        long odd = 2 * static_cast<long>(m) + 1;
        a = a * Rational(odd * odd, (odd + 1) * (odd + 2));
    }
    return a;
}

Series arcsin_coeffs(std::size_t N) {
    std::vector<Rational> c(N + 1);
    c[0] = Rational(1);
    for (std::size_t m = 0; m < N; ++m) {
        long odd = 2 * static_cast<long>(m) + 1;
        c[m + 1] = c[m] * Rational(odd * odd, (odd + 1) * (odd + 2));
    }
    return Series(std::move(c));
}

Series arcsin_series(std::size_t order) {
    Series s = Series::zero(order);
    Rational a(1);
    for (std::size_t n = 0; 2 * n + 1 <= order; ++n) {
        s[2 * n + 1] = a;
        long odd = 2 * static_cast<long>(n) + 1;
        a = a * Rational(odd * odd, (odd + 1) * (odd + 2));
    }
    return s;
}

namespace {

Rational inverse_factorial(std::size_t k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpz_class(1), f);
}

} // namespace

Series cos_coeffs(std::size_t order) {
    Series s = Series::zero(order);
    for (std::size_t k = 0; k <= order; k += 2) {
        Rational c = inverse_factorial(k);
        s[k] = (k / 2) % 2 == 0 ? c : -c;
    }
    return s;
}

Series sin_coeffs(std::size_t order) {
    Series s = Series::zero(order);
    for (std::size_t k = 1; k <= order; k += 2) {
        Rational c = inverse_factorial(k);
        s[k] = ((k - 1) / 2) % 2 == 0 ? c : -c;
    }
    return s;
}

Rational arcsin_tail_bound(std::size_t N) {
    if (N < 1) throw DomainError("tail bound needs N >= 1");
    mpz_class root = isqrt_newton(mpz_class(2 * static_cast<unsigned long>(N) + 1));
    return Rational(mpz_class(1), root);
}

Rational arcsin_partial_sum(std::size_t N) {
    std::size_t cp[] = {N};
    return arcsin_partial_sums(cp).front();
}

std::vector<Rational> arcsin_partial_sums(std::span<const std::size_t> checkpoints) {
    std::vector<Rational> out;
    out.reserve(checkpoints.size());
    if (checkpoints.empty()) return out;
    for (std::size_t i = 1; i < checkpoints.size(); ++i) {
        if (checkpoints[i] <= checkpoints[i - 1]) {
            throw DomainError("partial-sum checkpoints must be strictly increasing");
        }
    }
    mpq_class a(1), s(1); // a_0 and S_0
    std::size_t next = 0;
    for (std::size_t n = 0;; ++n) {
        if (n == checkpoints[next]) {
            out.emplace_back(Rational(s.get_num(), s.get_den()));
            if (++next == checkpoints.size()) break;
        }
        unsigned long odd = 2 * static_cast<unsigned long>(n) + 1;
        a *= mpq_class(odd * odd, (odd + 1) * (odd + 2));
        a.canonicalize();
        s += a;
    }
    return out;
}

std::string arcsin_pi_prefix(std::size_t N) {
    std::string text;
    Rational a(1);
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) text += " + ";
        text += (Rational(2) * a).str();
        long odd = 2 * static_cast<long>(n) + 1;
        a = a * Rational(odd * odd, (odd + 1) * (odd + 2));
    }
    return text;
}

} // namespace pienc
