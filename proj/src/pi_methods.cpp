#include "pi_methods.hpp"

#include <chrono>

#include "errors.hpp"

namespace pienc {

namespace {

template <typename F>
Enclosure timed(F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    Enclosure e = body();
    auto t1 = std::chrono::steady_clock::now();
    e.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return e;
}

// smallest b >= 0 with 2^b * w >= 1 (may overshoot by one bit, which only
// makes compression finer)
int ceil_log2_inverse(const Rational& w) {
    if (w.sign() <= 0) throw DomainError("width must be positive, got " + w.str());
    if (w.num() >= w.den()) return 0;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), w.den().get_mpz_t(), w.num().get_mpz_t());
    return static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2));
}

Rational rat_pow(const Rational& x, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), e);
    return Rational(n, d);
}

Rational factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f, 1);
}

} // namespace

int bits_for_width(const Rational& w) {
    int b = ceil_log2_inverse(w);
    return (b < 1 ? 1 : b) + 32;
}

unsigned long budget_for_width(const std::string& method, const Rational& w) {
    if (w.sign() <= 0) throw DomainError("width must be positive, got " + w.str());
    if (method == "arcsin") {
        // need 2 / floor(sqrt(2N+1)) <= w, i.e. 2N+1 >= ceil(2/w)^2
        mpz_class r, n2;
        mpz_cdiv_q(r.get_mpz_t(), mpz_class(2 * w.den()).get_mpz_t(), w.num().get_mpz_t());
        mpz_cdiv_q(n2.get_mpz_t(), mpz_class(r * r - 1).get_mpz_t(), mpz_class(2).get_mpz_t());
        if (n2 < 1) return 1;
        if (n2 > 20000) return 20000;
        return n2.get_ui();
    }
    if (method == "cosroot") {
        // bracket [1,2] halves per step; stop once its width is <= w/2
        int s = ceil_log2_inverse(w / 2);
        if (s < 1) s = 1;
        return s > 128 ? 128 : static_cast<unsigned long>(s);
    }
    if (method == "archimedes") {
        // initial gap 4 - 2*sqrt(2) < 6/5, contracting by at least 4x per doubling
        Rational gap(6, 5);
        unsigned long k = 0;
        while (gap > w && k < 64) {
            gap /= Rational(4);
            ++k;
        }
        return k;
    }
    if (method == "quadrature") {
        mpz_class n;
        mpz_cdiv_q(n.get_mpz_t(), mpz_class(2 * w.den()).get_mpz_t(), w.num().get_mpz_t());
        if (n < 1) return 1;
        if (n > 100000) return 100000;
        return n.get_ui();
    }
    throw DomainError("unknown method: " + method);
}

Interval cos_eval_interval(const Interval& x, std::size_t order, int bits) {
    if (bits < 1) throw DomainError("precision must be a positive number of bits");
    if (x.lo().sign() < 0 || x.hi() > Rational(5, 2)) {
        throw DomainError("cos evaluation domain is [0, 5/2], got [" + x.lo().str() + ", " +
                          x.hi().str() + "]");
    }
    unsigned long n2 = 2 * static_cast<unsigned long>(order);
    Rational h2 = x.hi() * x.hi();
    if (h2 > Rational(static_cast<long>((n2 + 1) * (n2 + 2)))) {
        throw DomainError("cos remainder bound needs (x.hi)^2 <= (2N+1)(2N+2); raise the order");
    }
    int work_bits = bits + 32;
    Interval u = square(x);
    // Horner in u over c_k = (-1)^k / (2k)!
    Rational cN = Rational(1) / factorial(n2);
    if (order % 2 == 1) cN = -cN;
    Interval p = Interval::point(cN);
    for (std::size_t k = order; k-- > 0;) {
        Rational ck = Rational(1) / factorial(2 * static_cast<unsigned long>(k));
        if (k % 2 == 1) ck = -ck;
        p = compress(p * u, work_bits) + Interval::point(ck);
    }
    Rational rem = rat_pow(x.hi(), n2 + 2) / factorial(n2 + 2);
    return p + Interval(-rem, rem);
}

namespace {

// +1 or -1 once an order certifies the sign; 0 when the cap (64) is reached
// with the sign still ambiguous. `order` persists and only grows.
int certified_cos_sign(const Rational& x, int bits, std::size_t& order) {
    for (;;) {
        Interval c = cos_eval_interval(Interval::point(x), order, bits);
        if (c.lo().sign() > 0) return 1;
        if (c.hi().sign() < 0) return -1;
        if (order >= 64) return 0;
        order = std::min<std::size_t>(order * 2, 64);
    }
}

Enclosure cosroot_run(const Rational* target_width, unsigned long max_steps, int bits) {
    Rational lo(1), hi(2);
    std::size_t order = 3;
    if (certified_cos_sign(lo, bits, order) <= 0) {
        throw InconsistencyError("failed to certify cos(1) > 0");
    }
    if (certified_cos_sign(hi, bits, order) >= 0) {
        throw InconsistencyError("failed to certify cos(2) < 0");
    }
    bool converged = true;
    unsigned long steps = 0;
    for (;;) {
        if (target_width != nullptr && hi - lo <= *target_width / 2) break;
        if (steps >= max_steps) {
            if (target_width != nullptr) converged = false;
            break;
        }
        Rational mid = (lo + hi) / 2;
        int s = certified_cos_sign(mid, bits, order);
        if (s == 0) {
            converged = false; // sound bracket, just wider than requested
            break;
        }
        (s > 0 ? lo : hi) = mid;
        ++steps;
    }
    Interval exact(Rational(2) * lo, Rational(2) * hi);
    return Enclosure{"cosroot", compress(exact, bits), exact, steps, 0.0, converged};
}

} // namespace

Enclosure pi_arcsin(unsigned long terms, int bits) {
    if (terms < 1) throw DomainError("arcsin method needs at least one term");
    return timed([&] {
        Rational s = arcsin_partial_sum(terms);
        Rational tail = arcsin_tail_bound(terms);
        Interval exact(Rational(2) * s, Rational(2) * (s + tail));
        int b = bits > 0 ? bits : bits_for_width(Rational(2) * tail);
        return Enclosure{"arcsin", compress(exact, b), exact, terms, 0.0, true};
    });
}

Enclosure pi_cosroot(const Rational& target_width, int bits) {
    if (target_width.sign() <= 0) {
        throw DomainError("target width must be positive, got " + target_width.str());
    }
    int b = bits > 0 ? bits : bits_for_width(target_width);
    return timed([&] { return cosroot_run(&target_width, 100000, b); });
}

Enclosure pi_cosroot_steps(unsigned long steps, int bits) {
    int b = bits > 0 ? bits : static_cast<int>(steps) + 34;
    return timed([&] { return cosroot_run(nullptr, steps, b); });
}

ArchimedesIterates archimedes_iterates(unsigned long doublings, int bits) {
    if (bits < 1) throw DomainError("precision must be a positive number of bits");
    ArchimedesIterates it;
    it.s.reserve(doublings + 1);
    it.t.reserve(doublings + 1);
    Interval s = interval_sqrt(Interval::point(Rational(8)), bits); // 2*sqrt(2)
    Interval t = Interval::point(Rational(4));
    it.s.push_back(s);
    it.t.push_back(t);
    const Interval two = Interval::point(Rational(2));
    for (unsigned long i = 0; i < doublings; ++i) {
        Interval tn = compress(two * s * t / (s + t), bits); // harmonic-mean step
        Interval sn = interval_sqrt(s * tn, bits);           // geometric-mean step
        s = sn;
        t = tn;
        it.s.push_back(s);
        it.t.push_back(t);
    }
    return it;
}

Enclosure pi_archimedes(unsigned long doublings, int bits) {
    int b = bits > 0 ? bits : static_cast<int>(2 * doublings) + 40;
    return timed([&] {
        ArchimedesIterates it = archimedes_iterates(doublings, b);
        Interval exact(it.s.back().lo(), it.t.back().hi());
        return Enclosure{"archimedes", exact, exact, doublings, 0.0, true};
    });
}

Enclosure pi_quadrature(unsigned long subintervals, int bits) {
    if (subintervals < 1) throw DomainError("quadrature needs at least one subinterval");
    return timed([&] {
        unsigned long n = subintervals;
        mpz_class nn = mpz_class(static_cast<unsigned long>(n)) * n;
        // f(i/n) = 2 / (1 + (i/n)^2) = 2n^2 / (n^2 + i^2), strictly decreasing
        std::vector<Rational> left, right;
        left.reserve(n);
        right.reserve(n);
        for (unsigned long i = 0; i < n; ++i) {
            mpz_class ii = mpz_class(i) * i;
            left.emplace_back(2 * nn, nn + ii);
        }
        for (unsigned long i = 1; i <= n; ++i) {
            mpz_class ii = mpz_class(i) * i;
            right.emplace_back(2 * nn, nn + ii);
        }
        Rational ln = exact_sum(left) / Rational(static_cast<long>(n));
        Rational rn = exact_sum(right) / Rational(static_cast<long>(n));
        Interval exact(Rational(2) * rn, Rational(2) * ln);
        int b = bits > 0 ? bits : bits_for_width(Rational(2, static_cast<long>(n)));
        return Enclosure{"quadrature", compress(exact, b), exact, n, 0.0, true};
    });
}

Interval cross_check(std::span<const Enclosure> enclosures) {
    if (enclosures.empty()) throw DomainError("cross-check needs at least one enclosure");
    Interval acc = enclosures.front().value;
    for (std::size_t i = 1; i < enclosures.size(); ++i) {
        acc = intersect(acc, enclosures[i].value);
    }
    return acc;
}

} // namespace pienc
