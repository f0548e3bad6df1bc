#include "rational.hpp"

#include <cctype>
#include <cstddef>
#include <utility>
#include <vector>

namespace pienc {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw DomainError("rational with zero denominator");
    }
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

mpz_class pow10_z(int digits) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return p;
}

} // namespace

Rational::Rational(long num, long den) : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        try {
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw ParseError("cannot parse rational literal: " + text);
        }
    }

    // [sign] digits [. digits] [eE [sign] digits]
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    std::string mantissa;
    long frac_len = 0;
    bool seen_digit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        mantissa.push_back(s[i]);
        seen_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            mantissa.push_back(s[i]);
            ++frac_len;
            seen_digit = true;
        }
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        bool seen_exp_digit = false;
        long e = 0;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            if (e > 1000000) throw DomainError("exponent out of range: " + text);
            e = e * 10 + (s[i] - '0');
            seen_exp_digit = true;
        }
        if (!seen_exp_digit) throw ParseError("cannot parse rational literal: " + text);
        exp10 = eneg ? -e : e;
    }
    if (!seen_digit || i != s.size()) {
        throw ParseError("cannot parse rational literal: " + text);
    }

    mpz_class m(mantissa.empty() ? "0" : mantissa, 10);
    if (neg) m = -m;
    long net = exp10 - frac_len;
    if (net >= 0) return Rational(m * pow10_z(static_cast<int>(net)), mpz_class(1));
    return Rational(m, pow10_z(static_cast<int>(-net)));
}

Rational Rational::dyadic(const mpz_class& num, int bits) {
    if (bits < 0) throw DomainError("dyadic with negative bit count");
    mpz_class den = mpz_class(1) << bits;
    return Rational(num, den);
}

Rational Rational::pow2(int k) {
    if (k >= 0) return Rational(mpz_class(1) << k, mpz_class(1));
    return Rational(mpz_class(1), mpz_class(1) << (-k));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

mpz_class Rational::floor_scaled2(int bits) const {
    mpz_class q;
    mpz_class scaled_num = num() << bits;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil_scaled2(int bits) const {
    mpz_class q;
    mpz_class scaled_num = num() << bits;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::floor_scaled10(int digits) const {
    mpz_class q;
    mpz_class scaled_num = num() * pow10_z(digits);
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil_scaled10(int digits) const {
    mpz_class q;
    mpz_class scaled_num = num() * pow10_z(digits);
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::frac_str() const {
    return num().get_str() + "/" + den().get_str();
}

mpz_class isqrt_newton(const mpz_class& n) {
    if (sgn(n) < 0) throw DomainError("integer square root of a negative number");
    if (n <= 1) return n;
    std::size_t bitlen = mpz_sizeinbase(n.get_mpz_t(), 2);
    // 2^ceil(bitlen/2) >= sqrt(n), so the iteration descends onto floor(sqrt(n))
    mpz_class x = mpz_class(1) << ((bitlen + 1) / 2);
    for (;;) {
        mpz_class y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

namespace {

struct RawFrac {
    mpz_class num;
    mpz_class den;
};

RawFrac raw_sum(std::span<const Rational> terms) {
    if (terms.size() == 1) {
        return {terms[0].num(), terms[0].den()};
    }
    std::size_t half = terms.size() / 2;
    RawFrac a = raw_sum(terms.first(half));
    RawFrac b = raw_sum(terms.subspan(half));
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

} // namespace

Rational exact_sum(std::span<const Rational> terms) {
    if (terms.empty()) return Rational();
    RawFrac r = raw_sum(terms);
    return Rational(r.num, r.den);
}

namespace {

std::string render_scaled(const mpz_class& v, int frac_digits) {
    bool neg = sgn(v) < 0;
    mpz_class a = neg ? mpz_class(-v) : v;
    std::string digits = a.get_str();
    if (static_cast<int>(digits.size()) <= frac_digits) {
        digits.insert(0, static_cast<std::size_t>(frac_digits) + 1 - digits.size(), '0');
    }
    std::string out;
    if (neg) out.push_back('-');
    out.append(digits, 0, digits.size() - static_cast<std::size_t>(frac_digits));
    if (frac_digits > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - static_cast<std::size_t>(frac_digits),
                   static_cast<std::size_t>(frac_digits));
    }
    return out;
}

} // namespace

std::string decimal_floor_string(const Rational& x, int frac_digits) {
    if (frac_digits < 0) frac_digits = 0;
    return render_scaled(x.floor_scaled10(frac_digits), frac_digits);
}

std::string decimal_ceil_string(const Rational& x, int frac_digits) {
    if (frac_digits < 0) frac_digits = 0;
    return render_scaled(x.ceil_scaled10(frac_digits), frac_digits);
}

} // namespace pienc
