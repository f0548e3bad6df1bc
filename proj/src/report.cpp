#include "report.hpp"

namespace pienc {

namespace {

// smallest d >= 0 with 10^d * w >= 1, within one digit (overshoot is harmless)
int ceil_log10_inverse(const Rational& w) {
    if (w.sign() <= 0 || w.num() >= w.den()) return 0;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), w.den().get_mpz_t(), w.num().get_mpz_t());
    return static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 10));
}

std::string common_prefix(const std::string& a, const std::string& b) {
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    std::string p = a.substr(0, n);
    while (!p.empty() && (p.back() == '.' || p.back() == '-')) p.pop_back();
    return p;
}

} // namespace

std::string guaranteed_digits(const Interval& v) {
    Rational w = v.width();
    int p = w.is_zero() ? 40 : ceil_log10_inverse(w) + 2;
    return common_prefix(decimal_floor_string(v.lo(), p), decimal_ceil_string(v.hi(), p));
}

int guaranteed_digit_count(const Interval& v) {
    int count = 0;
    for (char c : guaranteed_digits(v)) {
        if (c >= '0' && c <= '9') ++count;
    }
    return count;
}

int adaptive_frac_digits(const Interval& v) {
    std::string g = guaranteed_digits(v);
    std::size_t dot = g.find('.');
    int frac = dot == std::string::npos ? 0 : static_cast<int>(g.size() - dot - 1);
    return frac + 2;
}

std::string width_string(const Interval& v) {
    Rational w = v.width();
    return decimal_ceil_string(w, ceil_log10_inverse(w) + 4);
}

ReportRow make_row(const Enclosure& e, int frac_digits) {
    int f = frac_digits > 0 ? frac_digits : adaptive_frac_digits(e.value);
    return ReportRow{e.method, e.work, decimal_floor_string(e.value.lo(), f),
                     decimal_ceil_string(e.value.hi(), f), width_string(e.value)};
}

std::string csv_header() { return "method,work,lo,hi,width"; }

std::string csv_line(const ReportRow& r) {
    return r.method + "," + std::to_string(r.work) + "," + r.lo + "," + r.hi + "," + r.width;
}

} // namespace pienc
