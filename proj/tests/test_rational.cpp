#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superfermat/rational.hpp"
#include "random_gen.hpp"

using namespace superfermat;

TEST_CASE("addition is exact and reduced") {
    CHECK(rat_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
    Rational a(7, 3);
    CHECK(rat_add(Rational(0), a) == a);
    CHECK(rat_add(Rational(2, 4), Rational(1, 4)) == Rational(3, 4));
}

TEST_CASE("multiplication is exact and reduced") {
    CHECK(rat_mul(Rational(2, 3), Rational(3, 4)) == Rational(1, 2));
    Rational a(-5, 7);
    CHECK(rat_mul(Rational(1), a) == a);
    CHECK(rat_mul(a, Rational(0)) == Rational(0));
}

TEST_CASE("division") {
    CHECK(rat_div(Rational(1, 2), Rational(1, 4)) == Rational(2));
    Rational a(9, 4);
    CHECK(rat_div(a, Rational(1)) == a);
    CHECK_THROWS_AS(rat_div(a, Rational(0)), DivisionByZero);
}

TEST_CASE("canonical form") {
    Rational a(-4, 8);
    CHECK(a.numerator() == -1);
    CHECK(a.denominator() == 2);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(6, 2).to_string() == "3");
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational::from_string("5/10") == Rational(1, 2));
    CHECK(Rational::from_string("-7") == Rational(-7));
}

TEST_CASE("field axioms on random values") {
    testgen::Rng rng(20240101);
    for (int i = 0; i < 500; ++i) {
        Rational a = testgen::random_rational(rng);
        Rational b = testgen::random_rational(rng);
        Rational c = testgen::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero())
            CHECK(a * a.reciprocal() == Rational(1));
    }
}

TEST_CASE("equal values agree componentwise after normalization") {
    testgen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = testgen::random_rational(rng);
        Rational b = testgen::random_nonzero_rational(rng);
        Rational s = (a / b) * b;
        CHECK(s == a);
        CHECK(s.numerator() == a.numerator());
        CHECK(s.denominator() == a.denominator());
    }
}

TEST_CASE("double round trips") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_double(-17.0) == Rational(-17));
}
