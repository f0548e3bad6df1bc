#pragma once

#include <span>
#include <string>
#include <vector>

#include "interval.hpp"
#include "series.hpp"

namespace pienc {

// A method-tagged guaranteed enclosure of pi. `value` has dyadic endpoints
// (compressed once at the end); `exact` is the certified interval before that
// final compression, kept for exact-identity checks and display.
struct Enclosure {
    std::string method; // arcsin | cosroot | archimedes | quadrature | intersection
    Interval value;
    Interval exact;
    unsigned long work = 0;   // terms, accepted bisection steps, doublings, subintervals
    double elapsed_ms = 0.0;
    bool converged = true; // false when cosroot hit the order-escalation cap early
};

struct MethodConfig {
    bool has_target_width = false;
    Rational target_width;
    bool has_terms = false;
    unsigned long terms = 0;
    int bits = 0; // <= 0 means: derive from the budget, plus 32 guard bits
};

// smallest b >= 1 with 2^-b <= w, plus 32 guard bits; w must be positive
int bits_for_width(const Rational& w);

// per-method work budget that reaches (about) the requested width:
// arcsin -> terms, cosroot -> max bisection steps, archimedes -> doublings,
// quadrature -> subintervals. arcsin caps at 20000, quadrature at 100000,
// archimedes/cosroot at 64 and 128 steps.
unsigned long budget_for_width(const std::string& method, const Rational& w);

// Interval cos via the Maclaurin partial sum of order N (terms through x^(2N))
// plus the alternating-series remainder (x.hi)^(2N+2)/(2N+2)!.
// Requires 0 <= x.lo, x.hi <= 5/2 and (x.hi)^2 <= (2N+1)(2N+2).
Interval cos_eval_interval(const Interval& x, std::size_t order, int bits);

Enclosure pi_arcsin(unsigned long terms, int bits = 0);
Enclosure pi_cosroot(const Rational& target_width, int bits = 0);
Enclosure pi_cosroot_steps(unsigned long steps, int bits = 0);
Enclosure pi_archimedes(unsigned long doublings, int bits = 0);
Enclosure pi_quadrature(unsigned long subintervals, int bits = 0);

// inscribed/circumscribed semiperimeter intervals after 0..k doublings,
// starting from squares: s[0] encloses 2*sqrt(2), t[0] = [4,4]
struct ArchimedesIterates {
    std::vector<Interval> s;
    std::vector<Interval> t;
};
ArchimedesIterates archimedes_iterates(unsigned long doublings, int bits);

// intersection of all enclosure intervals; throws InconsistencyError if any
// two are disjoint (that would mean some method's bound is wrong)
Interval cross_check(std::span<const Enclosure> enclosures);

} // namespace pienc
