#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "errors.hpp"
#include "interval.hpp"

using pienc::ArithOp;
using pienc::DomainError;
using pienc::InconsistencyError;
using pienc::Interval;
using pienc::Rational;

TEST_CASE("construction and accessors") {
    Interval a(Rational(1, 2), Rational(3, 2));
    CHECK(a.lo() == Rational(1, 2));
    CHECK(a.hi() == Rational(3, 2));
    CHECK(a.width() == Rational(1));
    CHECK(a.contains(Rational(1)));
    CHECK_FALSE(a.contains(Rational(2)));
    CHECK(a.contains(Interval(Rational(3, 4), Rational(1))));
    CHECK_FALSE(a.contains(Interval(0, 1)));
    CHECK(Interval::point(Rational(5)).width() == Rational(0));
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), DomainError);
}

TEST_CASE("endpoint arithmetic") {
    CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
    CHECK(Interval(1, 2) - Interval(3, 4) == Interval(-3, -1));
    CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
    CHECK(Interval(1, 1) / Interval(2, 4) == Interval(Rational(1, 4), Rational(1, 2)));
    CHECK(interval_arith(ArithOp::add, Interval(1, 2), Interval(3, 4)) == Interval(4, 6));
    CHECK(interval_arith(ArithOp::mul, Interval(-2, 1), Interval(-3, -1)) == Interval(-3, 6));
    CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), DomainError);
    CHECK_THROWS_AS(Interval(1, 2) / Interval(0, 3), DomainError);
    CHECK_THROWS_AS(Interval(1, 2) / Interval(-3, 0), DomainError);
}

TEST_CASE("soundness on sampled points") {
    const Interval as[] = {Interval(-3, -1), Interval(-1, 2), Interval(Rational(1, 3), Rational(7, 2))};
    const Interval bs[] = {Interval(1, 4), Interval(Rational(-5, 2), Rational(-1, 2))};
    for (const Interval& a : as) {
        for (const Interval& b : bs) {
            for (int i = 0; i <= 4; ++i) {
                for (int j = 0; j <= 4; ++j) {
                    Rational x = a.lo() + Rational(i, 4) * a.width();
                    Rational y = b.lo() + Rational(j, 4) * b.width();
                    CHECK((a + b).contains(x + y));
                    CHECK((a - b).contains(x - y));
                    CHECK((a * b).contains(x * y));
                    CHECK((a / b).contains(x / y));
                }
            }
        }
    }
}

TEST_CASE("square is tight around zero") {
    CHECK(pienc::square(Interval(2, 3)) == Interval(4, 9));
    CHECK(pienc::square(Interval(-3, -2)) == Interval(4, 9));
    CHECK(pienc::square(Interval(-2, 3)) == Interval(0, 9));
    CHECK(pienc::square(Interval(-3, 2)) == Interval(0, 9));
    CHECK(pienc::square(Interval::point(Rational(-1, 2))) == Interval::point(Rational(1, 4)));
}

TEST_CASE("interval square root") {
    CHECK(pienc::interval_sqrt(Interval(4, 9), 32) == Interval(2, 3));
    CHECK(pienc::interval_sqrt(Interval(0, 0), 8) == Interval(0, 0));
    CHECK(pienc::interval_sqrt(Interval(2, 2), 10) ==
          Interval(Rational(1448, 1024), Rational(1449, 1024)));
    CHECK_THROWS_AS(pienc::interval_sqrt(Interval(-1, 4), 16), DomainError);
    CHECK_THROWS_AS(pienc::interval_sqrt(Interval(1, 4), 0), DomainError);

    for (long num = 0; num <= 30; ++num) {
        Interval a(Rational(num, 7), Rational(num + 2, 7));
        for (int bits : {4, 12, 28}) {
            Interval s = pienc::interval_sqrt(a, bits);
            CHECK(s.lo() * s.lo() <= a.lo());
            CHECK(s.hi() * s.hi() >= a.hi());
            CHECK(s.lo().sign() >= 0);
            // rounding contributes at most 2^(1-bits) of width
            Interval tight = pienc::interval_sqrt(a, 60);
            CHECK(s.width() <= tight.width() + Rational::pow2(1 - bits));
        }
    }
}

TEST_CASE("compress rounds outward to dyadics") {
    CHECK(pienc::compress(Interval(Rational(1, 3), Rational(1, 3)), 4) ==
          Interval(Rational(5, 16), Rational(6, 16)));
    CHECK(pienc::compress(Interval(Rational(1, 2), Rational(1, 2)), 8) ==
          Interval(Rational(1, 2), Rational(1, 2)));
    CHECK(pienc::compress(Interval(0, 1), 2) == Interval(0, 1));
    CHECK_THROWS_AS(pienc::compress(Interval(0, 1), 0), DomainError);

    for (long num = -20; num <= 20; ++num) {
        Interval a(Rational(num, 7), Rational(num, 7) + Rational(2, 11));
        for (int k = 1; k <= 10; ++k) {
            Interval c = pienc::compress(a, k);
            CHECK(c.contains(a));
            CHECK(c.width() <= a.width() + Rational::pow2(1 - k));
            // endpoints are dyadic with at most k fractional bits
            CHECK((c.lo() * Rational::pow2(k)).den() == 1);
            CHECK((c.hi() * Rational::pow2(k)).den() == 1);
        }
    }
}

TEST_CASE("intersection") {
    CHECK(pienc::intersect(Interval(1, 3), Interval(2, 4)) == Interval(2, 3));
    CHECK(pienc::intersect(Interval(0, 1), Interval(1, 2)) == Interval(1, 1));
    CHECK(pienc::intersect(Interval(0, 5), Interval(1, 2)) == Interval(1, 2));
    CHECK_THROWS_AS(pienc::intersect(Interval(0, 1), Interval(2, 3)), InconsistencyError);
}

TEST_CASE("determinism") {
    Interval a(Rational(2, 7), Rational(9, 5)), b(Rational(1, 3), Rational(4, 3));
    CHECK(a * b == a * b);
    CHECK(pienc::interval_sqrt(a, 24) == pienc::interval_sqrt(a, 24));
    CHECK(pienc::compress(a / b, 9) == pienc::compress(a / b, 9));
}
