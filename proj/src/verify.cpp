#include "verify.hpp"

#include <functional>
#include <random>
#include <vector>

#include "arclength.hpp"
#include "errors.hpp"
#include "interval.hpp"
#include "pi_methods.hpp"
#include "report.hpp"
#include "series.hpp"

namespace pienc {

namespace {

struct Runner {
    std::string out;
    int failures = 0;

    void check(const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        out += ok ? "PASS " : "FAIL ";
        out += name;
        if (!detail.empty()) {
            out += ": ";
            out += detail;
        }
        out += '\n';
        if (!ok) ++failures;
    }
};

Rational rand_rational(std::mt19937_64& g, long span = 50, long den_max = 30) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(g), den(g));
}

Interval rand_interval(std::mt19937_64& g) {
    Rational a = rand_rational(g), b = rand_rational(g);
    return a <= b ? Interval(a, b) : Interval(b, a);
}

// point of a at parameter t in [0,1]
Rational sample(const Interval& a, const Rational& t) {
    return a.lo() + t * (a.hi() - a.lo());
}

Rational binomial_arcsin_coeff(unsigned long n) {
    mpz_class c, p;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    mpz_ui_pow_ui(p.get_mpz_t(), 4, n);
    return Rational(c, p * (2 * n + 1));
}

} // namespace

VerifyResult run_verify(bool inject_disjoint) {
    Runner r;
    std::mt19937_64 rng(0x5eed5eedULL); // fixed seed: the suite is deterministic

    r.check("interval.arith-soundness", [&](std::string&) {
        const ArithOp ops[] = {ArithOp::add, ArithOp::sub, ArithOp::mul, ArithOp::div};
        std::uniform_int_distribution<long> tnum(0, 16);
        for (int trial = 0; trial < 40; ++trial) {
            Interval a = rand_interval(rng);
            Interval b = rand_interval(rng);
            for (ArithOp op : ops) {
                if (op == ArithOp::div && b.contains(Rational(0))) {
                    b = b + Interval::point(b.hi() - b.lo() + Rational(1));
                }
                Interval c = interval_arith(op, a, b);
                for (int k = 0; k < 3; ++k) {
                    Rational t1(tnum(rng), 16), t2(tnum(rng), 16);
                    Rational x = sample(a, t1), y = sample(b, t2);
                    Rational exact = op == ArithOp::add ? x + y
                                   : op == ArithOp::sub ? x - y
                                   : op == ArithOp::mul ? x * y
                                                        : x / y;
                    if (!c.contains(exact)) return false;
                }
            }
        }
        if (interval_arith(ArithOp::add, Interval(1, 2), Interval(3, 4)) != Interval(4, 6)) return false;
        if (interval_arith(ArithOp::mul, Interval(-1, 2), Interval(3, 4)) != Interval(-4, 8)) return false;
        if (interval_arith(ArithOp::div, Interval(1, 1), Interval(2, 4)) !=
            Interval(Rational(1, 4), Rational(1, 2))) return false;
        return true;
    });

    r.check("interval.compress-widening", [&](std::string&) {
        for (int trial = 0; trial < 60; ++trial) {
            Interval a = rand_interval(rng);
            int k = 1 + trial % 12;
            Interval c = compress(a, k);
            if (!c.contains(a)) return false;
            if (c.width() > a.width() + Rational::pow2(1 - k)) return false;
        }
        return compress(Interval(Rational(1, 3), Rational(1, 3)), 4) ==
                   Interval(Rational(5, 16), Rational(6, 16)) &&
               compress(Interval(Rational(1, 2), Rational(1, 2)), 8) ==
                   Interval(Rational(1, 2), Rational(1, 2)) &&
               compress(Interval(0, 1), 2) == Interval(0, 1);
    });

    r.check("interval.sqrt-contains", [&](std::string&) {
        for (int trial = 0; trial < 40; ++trial) {
            Interval raw = rand_interval(rng);
            Interval a(raw.lo().abs(), raw.lo().abs() + raw.width());
            int bits = trial % 3 == 0 ? 8 : trial % 3 == 1 ? 16 : 40;
            Interval s = interval_sqrt(a, bits);
            if (s.lo().sign() < 0) return false;
            if (s.lo() * s.lo() > a.lo()) return false;
            if (s.hi() * s.hi() < a.hi()) return false;
        }
        return interval_sqrt(Interval(4, 9), 32) == Interval(2, 3) &&
               interval_sqrt(Interval(2, 2), 10) ==
                   Interval(Rational(1448, 1024), Rational(1449, 1024)) &&
               interval_sqrt(Interval(0, 0), 8) == Interval(0, 0);
    });

    r.check("interval.isqrt-oracle", [&](std::string&) {
        for (int trial = 0; trial < 60; ++trial) {
            mpz_class n = 1;
            int limbs = 1 + trial % 4;
            for (int i = 0; i < limbs; ++i) n = (n << 48) + static_cast<unsigned long>(rng() >> 16);
            mpz_class mine = isqrt_newton(n);
            mpz_class ref;
            mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
            if (mine != ref) return false;
            if (isqrt_newton(n * n) != n) return false;
            if (isqrt_newton(n * n - 1) != n - 1) return false;
        }
        return isqrt_newton(mpz_class(0)) == 0 && isqrt_newton(mpz_class(1)) == 1;
    });

    r.check("interval.intersect", [&](std::string&) {
        if (intersect(Interval(1, 3), Interval(2, 4)) != Interval(2, 3)) return false;
        if (intersect(Interval(0, 1), Interval(1, 2)) != Interval(1, 1)) return false;
        try {
            intersect(Interval(0, 1), Interval(2, 3));
            return false;
        } catch (const InconsistencyError&) {
        }
        return true;
    });

    r.check("interval.determinism", [&](std::string&) {
        Interval a = rand_interval(rng), b = rand_interval(rng);
        Interval nn(a.lo().abs(), a.lo().abs() + a.width());
        return a * b == a * b && interval_sqrt(nn, 24) == interval_sqrt(nn, 24) &&
               compress(a, 7) == compress(a, 7);
    });

    r.check("interval.exact-sum", [&](std::string&) {
        std::vector<Rational> terms;
        Rational fold;
        for (int i = 0; i < 200; ++i) {
            terms.push_back(rand_rational(rng, 1000, 500));
            fold += terms.back();
        }
        return exact_sum(terms) == fold && exact_sum({}) == Rational(0);
    });

    r.check("powerseries.recurrence-closed-form", [&](std::string&) {
        Series a = arcsin_coeffs(50);
        for (unsigned long n = 0; n <= 50; ++n) {
            if (a[n] != binomial_arcsin_coeff(n)) return false;
            if (a[n] != arcsin_coeff(n)) return false;
        }
        return a[0] == Rational(1) && a[3] == Rational(5, 112);
    });

    r.check("powerseries.monotone-positive", [&](std::string&) {
        Series a = arcsin_coeffs(60);
        for (unsigned long n = 0; n <= 60; ++n) {
            if (a[n].sign() <= 0) return false;
        }
        for (unsigned long n = 1; n < 60; ++n) {
            if (a[n + 1] >= a[n]) return false;
        }
        return true;
    });

    r.check("powerseries.tail-bound", [&](std::string&) {
        const std::size_t cps[] = {2, 5, 10, 100, 10002, 10005, 10010, 10100};
        std::vector<Rational> s = arcsin_partial_sums(cps);
        for (int i = 0; i < 4; ++i) {
            Rational tail = s[i + 4] - s[i];
            if (tail >= arcsin_tail_bound(cps[i])) return false;
        }
        return arcsin_tail_bound(2) == Rational(1, 2) && arcsin_tail_bound(12) == Rational(1, 5) &&
               arcsin_tail_bound(10000) == Rational(1, 141);
    });

    r.check("powerseries.mul-compose", [&](std::string&) {
        // (1+x)(1-x) = 1 - x^2 needs both factors carried at order 2
        Series one_plus = Series(std::vector<Rational>{1, 1}).truncated(2);
        Series one_minus = Series(std::vector<Rational>{1, -1}).truncated(2);
        if (series_mul(one_plus, one_minus) != Series(std::vector<Rational>{1, 0, -1})) return false;
        if (series_mul(Series(std::vector<Rational>{1, 1}), one_minus) !=
            Series(std::vector<Rational>{1, 0})) {
            return false; // order-1 factor truncates the product to order 1
        }
        Series f(std::vector<Rational>{rand_rational(rng), rand_rational(rng), rand_rational(rng),
                                       rand_rational(rng)});
        if (series_compose(f, Series::identity(3)) != f) return false;
        Series sq = Series::zero(3);
        sq[2] = Rational(1);
        Series inner = Series::zero(3);
        inner[1] = Rational(1);
        inner[2] = Rational(1);
        Series expect = Series::zero(3);
        expect[2] = Rational(1);
        expect[3] = Rational(2);
        if (series_compose(sq, inner) != expect) return false;
        try {
            series_compose(f, Series(std::vector<Rational>{1, 1}));
            return false;
        } catch (const DomainError&) {
        }
        return true;
    });

    r.check("powerseries.reversion-sin", [&](std::string& detail) {
        if (series_revert(arcsin_series(9)) != sin_coeffs(9)) return false;
        detail = "sin coefficients recovered through order 9";
        return true;
    });

    r.check("powerseries.reversion-identity", [&](std::string&) {
        if (series_revert(Series::identity(6)) != Series::identity(6)) return false;
        std::uniform_int_distribution<long> small(-3, 3);
        std::uniform_int_distribution<int> lead(0, 3);
        const long leads[] = {1, -1, 2, -2};
        for (int trial = 0; trial < 5; ++trial) {
            Series f = Series::zero(8);
            f[1] = Rational(leads[lead(rng)]);
            for (std::size_t k = 2; k <= 8; ++k) f[k] = Rational(small(rng));
            if (series_compose(f, series_revert(f)) != Series::identity(8)) return false;
        }
        return true;
    });

    r.check("powerseries.triple-angle", [&](std::string&) {
        Series s = sin_coeffs(9);
        Series three_x = Series::zero(9);
        three_x[1] = Rational(3);
        Series lhs = series_compose(s, three_x);
        Series rhs = Rational(3) * s - Rational(4) * series_mul(series_mul(s, s), s);
        return lhs == rhs;
    });

    r.check("pi-methods.cos-certificates", [&](std::string&) {
        Interval c1 = cos_eval_interval(Interval::point(Rational(1)), 3, 64);
        Interval c2 = cos_eval_interval(Interval::point(Rational(2)), 3, 64);
        if (!(c1.lo().sign() > 0 && c2.hi().sign() < 0)) return false;
        if (!Interval(Rational::parse("0.5402"), Rational::parse("0.5404")).contains(c1)) return false;
        if (!c1.contains(Rational(389, 720))) return false;
        if (!Interval(Rational::parse("-0.429"), Rational::parse("-0.415")).contains(c2)) return false;
        if (!c2.contains(Rational(-19, 45))) return false;
        Interval c0 = cos_eval_interval(Interval::point(Rational(0)), 0, 16);
        if (c0 != Interval(1, 1)) return false;
        try {
            cos_eval_interval(Interval::point(Rational(2)), 0, 16); // 4 > 1*2
            return false;
        } catch (const DomainError&) {
        }
        return true;
    });

    r.check("pi-methods.first-bisection", [&](std::string&) {
        Enclosure e = pi_cosroot_steps(1);
        return e.exact == Interval(3, 4) && e.work == 1 && e.converged;
    });

    r.check("pi-methods.arcsin-prefix", [&](std::string&) {
        Enclosure e1 = pi_arcsin(1);
        Enclosure e2 = pi_arcsin(2);
        return e1.exact.lo() == Rational(7, 3) && e2.exact.lo() == Rational(149, 60) &&
               e2.exact.hi() == Rational(209, 60) && arcsin_pi_prefix(2) == "2 + 1/3 + 3/20";
    });

    r.check("pi-methods.nesting", [&](std::string&) {
        const unsigned long arcs[] = {2, 8, 32};
        const unsigned long steps[] = {2, 6, 12};
        const unsigned long dbl[] = {1, 3, 6};
        const unsigned long quads[] = {4, 16, 64};
        for (int i = 0; i < 2; ++i) {
            if (!pi_arcsin(arcs[i]).exact.contains(pi_arcsin(arcs[i + 1]).exact)) return false;
            if (!pi_cosroot_steps(steps[i]).exact.contains(pi_cosroot_steps(steps[i + 1]).exact))
                return false;
            if (!pi_archimedes(dbl[i]).value.contains(pi_archimedes(dbl[i + 1]).value)) return false;
            if (!pi_quadrature(quads[i]).exact.contains(pi_quadrature(quads[i + 1]).exact))
                return false;
        }
        return true;
    });

    r.check("pi-methods.bracket-halving", [&](std::string&) {
        for (unsigned long k = 1; k <= 10; ++k) {
            if (pi_cosroot_steps(k).exact.width() != Rational::pow2(1 - static_cast<int>(k)))
                return false;
        }
        return true;
    });

    r.check("pi-methods.arcsin-lower-monotone", [&](std::string&) {
        std::vector<std::size_t> cps(50);
        for (std::size_t i = 0; i < 50; ++i) cps[i] = i + 1;
        std::vector<Rational> s = arcsin_partial_sums(cps);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i + 1] <= s[i]) return false;
        }
        return true;
    });

    r.check("pi-methods.quadrature-gap", [&](std::string&) {
        const unsigned long ns[] = {1, 4, 1000};
        for (unsigned long n : ns) {
            Enclosure e = pi_quadrature(n);
            if (e.exact.width() != Rational(2, static_cast<long>(n))) return false;
        }
        Enclosure e4 = pi_quadrature(4);
        if (e4.exact != Interval(Rational(2449, 850), Rational(2874, 850))) return false;
        Enclosure e1 = pi_quadrature(1);
        return e1.exact == Interval(2, 4);
    });

    r.check("pi-methods.archimedes-geometry", [&](std::string&) {
        ArchimedesIterates it = archimedes_iterates(20, 96);
        for (std::size_t k = 0; k <= 20; ++k) {
            if (it.s[k].hi() >= it.t[k].lo()) return false; // s_k < t_k with room
            if (k < 20) {
                if (it.s[k].lo() >= it.s[k + 1].lo()) return false; // s strictly up
                if (it.t[k].hi() <= it.t[k + 1].hi()) return false; // t strictly down
            }
        }
        Enclosure k1 = pi_archimedes(1);
        if (!k1.value.contains(Interval(Rational::parse("3.0615"), Rational::parse("3.3137"))))
            return false;
        Enclosure k0 = pi_archimedes(0);
        // lower endpoint is an outward-rounded 2*sqrt(2): never above it, close below
        return k0.value.hi() == Rational(4) && k0.value.lo() * k0.value.lo() <= Rational(8) &&
               k0.value.lo() >= Rational::parse("2.8283") &&
               k0.value.lo() <= Rational::parse("2.8285");
    });

    r.check("pi-methods.sanity-bracket", [&](std::string&) {
        const Enclosure es[] = {pi_arcsin(2), pi_arcsin(100), pi_cosroot_steps(2),
                                pi_archimedes(1), pi_quadrature(2), pi_quadrature(500)};
        for (const Enclosure& e : es) {
            if (!(Rational(2) < e.value.lo() && e.value.hi() < Rational(4))) return false;
        }
        return true;
    });

    r.check("pi-methods.cross-consistency", [&](std::string& detail) {
        std::vector<Enclosure> es;
        es.push_back(pi_arcsin(100));
        es.push_back(pi_cosroot(Rational::parse("1e-6")));
        es.push_back(pi_archimedes(8));
        es.push_back(pi_quadrature(500));
        if (inject_disjoint) {
            Interval fake(Rational(2), Rational(21, 10)); // cannot contain pi
            es.push_back(Enclosure{"fabricated", fake, fake, 1, 0.0, true});
            detail = "injected fabricated enclosure [2, 21/10]";
        }
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                intersect(es[i].value, es[j].value); // throws when disjoint
            }
        }
        Interval common = cross_check(es);
        for (const Enclosure& e : es) {
            if (!e.value.contains(common)) return false;
        }
        return true;
    });

    r.check("pi-methods.cross-check-negative", [&](std::string&) {
        Interval a(Rational::parse("2.0"), Rational::parse("2.1"));
        Interval b(Rational::parse("3.0"), Rational::parse("3.1"));
        std::vector<Enclosure> es = {Enclosure{"fabricated", a, a, 1, 0.0, true},
                                     Enclosure{"fabricated", b, b, 1, 0.0, true}};
        try {
            cross_check(es);
            return false;
        } catch (const InconsistencyError&) {
        }
        Enclosure single = pi_quadrature(4);
        return cross_check({&single, 1}) == single.value;
    });

    r.check("pi-methods.convergence-contrast", [&](std::string& detail) {
        // table schedule 1,2,4,...: the first arcsin row at width <= 0.015
        unsigned long first = 0;
        for (unsigned long n = 1; n <= 16384; n *= 2) {
            if (Rational(2) * arcsin_tail_bound(n) <= Rational(15, 1000)) {
                first = n;
                break;
            }
        }
        if (first <= 10000) return false;
        Enclosure slow = pi_arcsin(first);
        if (slow.value.width() > Rational(15, 1000)) return false;
        Enclosure fast = pi_cosroot(Rational::parse("1e-12"));
        if (!fast.converged || fast.work > 50) return false;
        if (fast.value.width() > Rational::parse("1e-12")) return false;
        if (slow.value.width() < Rational(1000) * fast.value.width()) return false;
        if (fast.elapsed_ms > slow.elapsed_ms) return false;
        detail = "arcsin first reaches width<=0.015 at " + std::to_string(first) +
                 " terms; cosroot hits 1e-12 in " + std::to_string(fast.work) + " steps";
        return true;
    });

    r.check("arclength.monotone-refinement", [&](std::string&) {
        Rational prev(-1);
        for (unsigned long n = 1; n <= 16; n *= 2) {
            PolylineResult p = inscribed_polyline(n, 64);
            if (p.length.lo() < prev) return false;
            prev = p.length.lo();
        }
        PolylineResult one = inscribed_polyline(1, 64);
        if (!Interval(Rational::parse("1.414213"), Rational::parse("1.414214")).contains(one.length))
            return false;
        PolylineResult two = inscribed_polyline(2, 64);
        return Interval(Rational::parse("1.51763"), Rational::parse("1.51764")).contains(two.length);
    });

    r.check("arclength.upper-domination", [&](std::string&) {
        Enclosure best = pi_cosroot(Rational::parse("1e-9"));
        Rational half_hi = best.value.hi() / 2;
        for (unsigned long n : {1ul, 2ul, 4ul, 8ul, 16ul, 64ul}) {
            PolylineResult p = inscribed_polyline(n, 64);
            if (p.length.hi() >= half_hi) return false;
            if (n >= 2 && p.length.hi() >= Rational::parse("1.5718")) return false;
        }
        return inscribed_polyline(64, 64).length.lo() > Rational(157, 100);
    });

    r.check("arclength.vertex-validity", [&](std::string&) {
        unsigned long n = 8;
        for (unsigned long i = 0; i <= n; ++i) {
            Rational xi(static_cast<long>(i), static_cast<long>(n));
            Interval yi = interval_sqrt(Interval::point(Rational(1) - xi * xi), 48);
            if (!Interval(0, 1).contains(yi)) return false;
            Interval circle = Interval::point(xi * xi) + square(yi);
            if (!circle.contains(Rational(1))) return false;
        }
        return true;
    });

    r.check("report.outward-rounding", [&](std::string&) {
        for (int trial = 0; trial < 60; ++trial) {
            Rational x = rand_rational(rng, 2000, 700);
            int d = 1 + trial % 6;
            Rational lo = Rational::parse(decimal_floor_string(x, d));
            Rational hi = Rational::parse(decimal_ceil_string(x, d));
            if (!(lo <= x && x <= hi)) return false;
            if (hi - lo > Rational(1, 10)) return false; // one ulp at d >= 1
        }
        return decimal_floor_string(Rational(1, 3), 4) == "0.3333" &&
               decimal_ceil_string(Rational(1, 3), 4) == "0.3334" &&
               decimal_floor_string(Rational(-1, 3), 4) == "-0.3334" &&
               decimal_ceil_string(Rational(-1, 3), 4) == "-0.3333";
    });

    r.check("report.digits-determinism", [&](std::string& detail) {
        std::string got[2];
        for (int run = 0; run < 2; ++run) {
            std::vector<Enclosure> es;
            es.push_back(pi_arcsin(100));
            es.push_back(pi_cosroot(Rational::parse("1e-8")));
            es.push_back(pi_archimedes(14));
            es.push_back(pi_quadrature(1000));
            got[run] = guaranteed_digits(cross_check(es));
        }
        if (got[0] != got[1]) return false;
        if (got[0].size() < 6) return false; // width 1e-8 pins several digits
        // a strictly tighter enclosure must extend the same digit string;
        // no reference constant is consulted anywhere
        std::string finer = guaranteed_digits(pi_cosroot(Rational::parse("1e-14")).value);
        if (finer.size() <= got[0].size()) return false;
        if (finer.rfind(got[0], 0) != 0) return false;
        detail = "agreed prefix " + got[0];
        return true;
    });

    r.out += r.failures == 0
                 ? "ALL CHECKS PASSED\n"
                 : std::to_string(r.failures) + " CHECK" + (r.failures == 1 ? "" : "S") + " FAILED\n";
    return VerifyResult{r.failures == 0, r.out};
}

} // namespace pienc
