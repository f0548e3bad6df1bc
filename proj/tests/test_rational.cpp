#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "errors.hpp"
#include "rational.hpp"

using pienc::DomainError;
using pienc::Rational;

TEST_CASE("canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(7).frac_str() == "7/1");
}

TEST_CASE("parse accepts fractions, decimals, scientific") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("3.25") == Rational(13, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("1e-12") == Rational(mpz_class(1), mpz_class("1000000000000")));
    CHECK(Rational::parse("-2.5e3") == Rational(-2500));
    CHECK(Rational::parse("2.5E+2") == Rational(250));
    CHECK(Rational::parse(" 1/3 ") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1e"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), DomainError);
}

TEST_CASE("dyadic and pow2") {
    CHECK(Rational::dyadic(mpz_class(5), 4) == Rational(5, 16));
    CHECK(Rational::dyadic(mpz_class(-3), 1) == Rational(-3, 2));
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational::pow2(5) == Rational(32));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
}

TEST_CASE("arithmetic and comparisons") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK(-a == Rational(-1, 3));
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a != b);
    CHECK(a.sign() == 1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-2).sign() == -1);
}

TEST_CASE("floor and ceil scaling") {
    Rational third(1, 3);
    CHECK(third.floor_scaled2(4) == 5);  // 16/3 = 5.33
    CHECK(third.ceil_scaled2(4) == 6);
    CHECK(third.floor_scaled10(2) == 33);
    CHECK(third.ceil_scaled10(2) == 34);
    Rational neg(-1, 3);
    CHECK(neg.floor_scaled10(2) == -34); // floor toward minus infinity
    CHECK(neg.ceil_scaled10(2) == -33);
    CHECK(Rational(1, 2).floor_scaled2(3) == 4); // exact: floor == ceil
    CHECK(Rational(1, 2).ceil_scaled2(3) == 4);
}

TEST_CASE("integer Newton square root matches the gmp oracle") {
    CHECK(pienc::isqrt_newton(mpz_class(0)) == 0);
    CHECK(pienc::isqrt_newton(mpz_class(1)) == 1);
    CHECK(pienc::isqrt_newton(mpz_class(2)) == 1);
    CHECK(pienc::isqrt_newton(mpz_class(3)) == 1);
    CHECK(pienc::isqrt_newton(mpz_class(4)) == 2);
    CHECK(pienc::isqrt_newton(mpz_class(2097152)) == 1448); // floor(sqrt(2 * 4^10))
    CHECK_THROWS_AS(pienc::isqrt_newton(mpz_class(-1)), DomainError);

    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(20240801UL);
    for (int i = 0; i < 200; ++i) {
        mpz_class n = rnd.get_z_bits(1 + i);
        mpz_class ref;
        mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
        CHECK(pienc::isqrt_newton(n) == ref);
        CHECK(pienc::isqrt_newton(n * n) == n);
        if (n > 0) CHECK(pienc::isqrt_newton(n * n - 1) == n - 1);
    }
}

TEST_CASE("exact pairwise sum equals sequential fold") {
    std::vector<Rational> terms;
    Rational fold;
    for (long i = 1; i <= 300; ++i) {
        Rational t(i % 2 == 0 ? i : -i, 2 * i + 1);
        terms.push_back(t);
        fold += t;
    }
    CHECK(pienc::exact_sum(terms) == fold);
    CHECK(pienc::exact_sum(std::vector<Rational>{}) == Rational(0));
    CHECK(pienc::exact_sum(std::vector<Rational>{Rational(5, 7)}) == Rational(5, 7));
}

TEST_CASE("decimal strings round outward") {
    CHECK(pienc::decimal_floor_string(Rational(1, 3), 4) == "0.3333");
    CHECK(pienc::decimal_ceil_string(Rational(1, 3), 4) == "0.3334");
    CHECK(pienc::decimal_floor_string(Rational(-1, 3), 4) == "-0.3334");
    CHECK(pienc::decimal_ceil_string(Rational(-1, 3), 4) == "-0.3333");
    CHECK(pienc::decimal_floor_string(Rational(2), 2) == "2.00");
    CHECK(pienc::decimal_ceil_string(Rational(2), 2) == "2.00");
    CHECK(pienc::decimal_floor_string(Rational(7, 2), 0) == "3");
    CHECK(pienc::decimal_ceil_string(Rational(7, 2), 0) == "4");
    CHECK(pienc::decimal_floor_string(Rational(1, 1000), 2) == "0.00");
    CHECK(pienc::decimal_ceil_string(Rational(1, 1000), 2) == "0.01");

    for (long num = -25; num <= 25; ++num) {
        for (long den = 1; den <= 9; ++den) {
            Rational x(num, den);
            for (int d = 1; d <= 4; ++d) {
                Rational lo = Rational::parse(pienc::decimal_floor_string(x, d));
                Rational hi = Rational::parse(pienc::decimal_ceil_string(x, d));
                CHECK(lo <= x);
                CHECK(x <= hi);
            }
        }
    }
}
