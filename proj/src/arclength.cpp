#include "arclength.hpp"

#include <vector>

#include "errors.hpp"

namespace pienc {

PolylineResult inscribed_polyline(unsigned long segments, int bits) {
    if (segments < 1) throw DomainError("polyline needs at least one segment");
    if (bits < 1) throw DomainError("precision must be a positive number of bits");
    unsigned long n = segments;
    Rational nr(static_cast<long>(n));
    // vertices (x_i, y_i) with x_i = i/n, y_i an enclosure of sqrt(1 - x_i^2)
    std::vector<Interval> y;
    y.reserve(n + 1);
    for (unsigned long i = 0; i <= n; ++i) {
        Rational xi = Rational(static_cast<long>(i)) / nr;
        y.push_back(interval_sqrt(Interval::point(Rational(1) - xi * xi), bits));
    }
    // chord lengths sqrt(dx^2 + dy^2); dx = 1/n exactly. All endpoints are
    // dyadic with at most `bits` fractional bits, so the running sum stays flat.
    Interval dx2 = Interval::point(Rational(1) / (nr * nr));
    Interval total = Interval::point(Rational(0));
    for (unsigned long i = 1; i <= n; ++i) {
        Interval dy = y[i - 1] - y[i];
        total = total + interval_sqrt(dx2 + square(dy), bits);
    }
    return PolylineResult{n, total};
}

std::string demo_circularity_text() {
    return
        "CYCLE\n"
        "  pi -> circle length -> arcsin -> pi\n"
        "\n"
        "  1. pi is introduced as half the length of the unit circle x^2 + y^2 = 1.\n"
        "  2. that length is delegated to calculus: the quarter arc is the graph of\n"
        "     y = sqrt(1 - x^2), so quarter length = integral[0,1] dx / sqrt(1 - x^2).\n"
        "  3. the antiderivative of 1 / sqrt(1 - x^2) is arcsin, so the integral\n"
        "     evaluates to arcsin(1).\n"
        "  4. but arcsin(1) is pi/2 by the very definition of arcsin as the inverse\n"
        "     of sin on [-pi/2, pi/2]. The chain returns to pi without ever having\n"
        "     produced a number.\n"
        "\n"
        "PARAMETRIC-DEAD-END\n"
        "  Parametrizing the circle as (cos t, sin t), t in [0, 2pi], gives speed\n"
        "  sqrt(sin^2 t + cos^2 t) = 1, so the length integral turns into\n"
        "  integral[0,2pi] 1 dt = 2pi. That computes nothing: the parameter range\n"
        "  [0, 2pi] already assumes the answer, so the equation only restates that\n"
        "  2pi equals 2pi.\n"
        "\n"
        "REPAIR\n"
        "  Build the functions before the constant. Four independent grounded routes\n"
        "  each produce a guaranteed enclosure of pi, with no trigonometric facts\n"
        "  assumed anywhere:\n"
        "    arcsin      Maclaurin series M(x) of arcsin, summed at x = 1 with a\n"
        "                pi-free tail bound\n"
        "    cosroot     bisection for the smallest positive zero of the cos series,\n"
        "                every sign certified by a remainder bound\n"
        "    archimedes  inscribed/circumscribed polygon doubling starting from\n"
        "                squares (no sin 30 import)\n"
        "    quadrature  rigorous Riemann bounds for integral[0,1] 2/(1+t^2) dt,\n"
        "                the arc integral after the substitution x = 2t/(1+t^2)\n"
        "  The series route is the repaired definition:\n"
        "    pi = 2*M(1) = 2 + 1/3 + 3/20 + ...\n";
}

std::string demo_circularity_machine() {
    return
        "node.1=pi:=half the length of the unit circle\n"
        "node.2=circle length:=integral[0,1] dx/sqrt(1-x^2) (quarter arc)\n"
        "node.3=integral value:=arcsin(1), arcsin being the antiderivative\n"
        "node.4=arcsin(1):=pi/2 by the definition of arcsin\n"
        "edge.cycle=node.4->node.1\n"
        "deadend.parametric=integral[0,2pi] 1 dt = 2pi\n"
        "repair=pi:=2*M(1) = 2 + 1/3 + 3/20 + ...\n";
}

} // namespace pienc
