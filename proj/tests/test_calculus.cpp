#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superfermat/calculus.hpp"
#include "superfermat/parser.hpp"
#include "random_gen.hpp"

using namespace superfermat;

namespace {

// Swaps the two even generators given by 1-based indices.
SuperPoly swap_even(const SuperPoly &f, int a, int b) {
    Signature sig = f.signature();
    std::vector<SuperPoly> evens, odds;
    for (int i = 1; i <= sig.evens; ++i)
        evens.push_back(SuperPoly::generator(sig, VariableRef::even(i)));
    std::swap(evens[a - 1], evens[b - 1]);
    for (int i = 1; i <= sig.odds; ++i)
        odds.push_back(SuperPoly::generator(sig, VariableRef::odd(i)));
    return substitute(f, evens, odds);
}

} // namespace

TEST_CASE("difference quotient") {
    SUBCASE("x^2 -> x + y") {
        SuperPoly f = parse_superpoly("x1^2", Signature(1, 0));
        SuperPoly q = difference_quotient(f, VariableRef::even(1));
        CHECK(q == parse_superpoly("x1 + x2", Signature(2, 0)));
    }
    SUBCASE("constants in x vanish") {
        SuperPoly f = parse_superpoly("7/2 + xi1*xi2", Signature(1, 2));
        CHECK(difference_quotient(f, VariableRef::even(1)).is_zero());
    }
    SUBCASE("x^3 + x*xi1*xi2") {
        SuperPoly f = parse_superpoly("x1^3 + x1*xi1*xi2", Signature(1, 2));
        SuperPoly q = difference_quotient(f, VariableRef::even(1));
        CHECK(q == parse_superpoly("x1^2 + x1*x2 + x2^2 + xi1*xi2", Signature(2, 2)));
    }
    SUBCASE("fresh variable sits immediately after x") {
        SuperPoly f = parse_superpoly("x1*x2^2", Signature(2, 0));
        SuperPoly q = difference_quotient(f, VariableRef::even(2));
        // signature becomes (3|0) with y = x3 in slot 3 and nothing shifted
        // before x2; q = x1*(x2 + y)
        CHECK(q == parse_superpoly("x1*x2 + x1*x3", Signature(3, 0)));
        SuperPoly q1 = difference_quotient(f, VariableRef::even(1));
        // y = x2 in the extended signature, the old x2 moves to x3
        CHECK(q1 == parse_superpoly("x3^2", Signature(3, 0)));
    }
}

TEST_CASE("partial_even") {
    CHECK(partial_even(parse_superpoly("x1^2", Signature(1, 0)), VariableRef::even(1)) ==
          parse_superpoly("2*x1", Signature(1, 0)));
    CHECK(partial_even(parse_superpoly("xi1*xi2", Signature(1, 2)), VariableRef::even(1))
              .is_zero());
    CHECK(partial_even(parse_superpoly("x1*xi1", Signature(1, 1)), VariableRef::even(1)) ==
          parse_superpoly("xi1", Signature(1, 1)));
}

TEST_CASE("odd_split") {
    Signature sig(0, 2);
    SUBCASE("eta leftmost") {
        auto [h, g] = odd_split(parse_superpoly("xi1*xi2", sig), VariableRef::odd(1));
        CHECK(h.is_zero());
        CHECK(g == parse_superpoly("xi2", sig));
    }
    SUBCASE("one transposition") {
        auto [h, g] = odd_split(parse_superpoly("xi1*xi2", sig), VariableRef::odd(2));
        CHECK(h.is_zero());
        CHECK(g == parse_superpoly("-xi1", sig));
    }
    SUBCASE("no eta dependence") {
        Signature s(1, 3);
        SuperPoly f = parse_superpoly("x1^2 + xi3*x1", s);
        auto [h, g] = odd_split(f, VariableRef::odd(1));
        CHECK(h == f);
        CHECK(g.is_zero());
    }
    SUBCASE("reassembly f = h + eta*g") {
        testgen::Rng rng(99);
        Signature s(2, 3);
        for (int i = 0; i < 100; ++i) {
            SuperPoly f = testgen::random_poly(rng, s);
            for (int k = 1; k <= 3; ++k) {
                auto [h, g] = odd_split(f, VariableRef::odd(k));
                SuperPoly eta = SuperPoly::generator(s, VariableRef::odd(k));
                CHECK(h + eta * g == f);
                auto check_free = [&](const SuperPoly &p) {
                    for (const auto &[m, c] : p.terms())
                        CHECK((m.odd & (std::uint64_t(1) << (k - 1))) == 0);
                };
                check_free(h);
                check_free(g);
            }
        }
    }
}

TEST_CASE("partial_odd") {
    CHECK(partial_odd(parse_superpoly("xi1", Signature(0, 1)), VariableRef::odd(1)) ==
          parse_superpoly("1", Signature(0, 1)));
    CHECK(partial_odd(parse_superpoly("xi1*xi2*xi3", Signature(0, 3)), VariableRef::odd(2)) ==
          parse_superpoly("-xi1*xi3", Signature(0, 3)));

    testgen::Rng rng(7);
    Signature sig(1, 3);
    for (int i = 0; i < 50; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        for (int k = 1; k <= 3; ++k)
            CHECK(partial_odd(partial_odd(f, VariableRef::odd(k)), VariableRef::odd(k))
                      .is_zero());
    }
}

TEST_CASE("fermat identity holds, and perturbed quotients fail") {
    testgen::Rng rng(4242);
    CHECK(fermat_identity_holds(SuperPoly::zero(Signature(2, 1)), VariableRef::even(1)));
    Signature sig(3, 3);
    for (int i = 0; i < 60; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig, 50, 5);
        int var = 1 + int(rng() % 3);
        CHECK(fermat_identity_holds(f, VariableRef::even(var)));

        // uniqueness: (x-y)*q' != f(x)-f(y) for q' = q + r with r != 0,
        // because x - y is a nonzerodivisor
        SuperPoly q = difference_quotient(f, VariableRef::even(var));
        Signature ext = q.signature();
        SuperPoly r = testgen::random_nonzero_poly(rng, ext, 4, 3);
        SuperPoly fx = extend_even_after(f, var);
        SuperPoly xme = SuperPoly::generator(ext, VariableRef::even(var)) -
                        SuperPoly::generator(ext, VariableRef::even(var + 1));
        SuperPoly fy = fx - xme * q;
        CHECK(xme * (q + r) != fx - fy);
    }
}

TEST_CASE("difference quotient is symmetric in x and y") {
    testgen::Rng rng(31337);
    Signature sig(2, 2);
    for (int i = 0; i < 80; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        int var = 1 + int(rng() % 2);
        SuperPoly q = difference_quotient(f, VariableRef::even(var));
        CHECK(swap_even(q, var, var + 1) == q);
    }
}

TEST_CASE("partial_even agrees with the diagonal of the difference quotient") {
    testgen::Rng rng(1001);
    Signature sig(2, 2);
    for (int i = 0; i < 100; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        int var = 1 + int(rng() % 2);
        SuperPoly q = difference_quotient(f, VariableRef::even(var));
        Signature ext = q.signature();
        // substitute y -> x and drop the fresh slot
        std::vector<SuperPoly> evens, odds;
        for (int k = 1; k <= ext.evens; ++k) {
            int original = k <= var ? k : k - 1; // collapse the fresh slot back
            evens.push_back(SuperPoly::generator(sig, VariableRef::even(original)));
        }
        for (int k = 1; k <= ext.odds; ++k)
            odds.push_back(SuperPoly::generator(sig, VariableRef::odd(k)));
        CHECK(substitute(q, evens, odds) == partial_even(f, VariableRef::even(var)));
    }
}

TEST_CASE("Leibniz rules") {
    testgen::Rng rng(555);
    Signature sig(2, 3);
    SUBCASE("even Leibniz") {
        for (int i = 0; i < 100; ++i) {
            SuperPoly f = testgen::random_poly(rng, sig);
            SuperPoly g = testgen::random_poly(rng, sig);
            VariableRef x = VariableRef::even(1 + int(rng() % 2));
            CHECK(partial_even(f * g, x) ==
                  partial_even(f, x) * g + f * partial_even(g, x));
        }
    }
    SUBCASE("graded Leibniz for the odd derivative") {
        for (int i = 0; i < 100; ++i) {
            Parity pf = (rng() & 1) ? Parity::Odd : Parity::Even;
            SuperPoly f = testgen::random_homogeneous_poly(rng, sig, pf);
            SuperPoly g = testgen::random_poly(rng, sig);
            VariableRef eta = VariableRef::odd(1 + int(rng() % 3));
            SuperPoly rhs = partial_odd(f, eta) * g;
            SuperPoly fdg = f * partial_odd(g, eta);
            rhs += (pf == Parity::Odd) ? -fdg : fdg;
            CHECK(partial_odd(f * g, eta) == rhs);
        }
    }
}

TEST_CASE("second partials: even ones commute, odd ones anticommute") {
    testgen::Rng rng(808);
    Signature sig(2, 3);
    for (int i = 0; i < 100; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        VariableRef x1 = VariableRef::even(1), x2 = VariableRef::even(2);
        CHECK(partial_even(partial_even(f, x1), x2) ==
              partial_even(partial_even(f, x2), x1));
        VariableRef e1 = VariableRef::odd(1 + int(rng() % 3));
        VariableRef e2 = VariableRef::odd(1 + int(rng() % 3));
        if (e1 == e2)
            continue;
        CHECK(partial_odd(partial_odd(f, e1), e2) ==
              -partial_odd(partial_odd(f, e2), e1));
    }
}

TEST_CASE("chain rule through substitution") {
    testgen::Rng rng(909);
    Signature outer(1, 0), inner(2, 2);
    for (int i = 0; i < 60; ++i) {
        SuperPoly f = testgen::random_poly(rng, outer, 5, 4);
        SuperPoly g = testgen::random_homogeneous_poly(rng, inner, Parity::Even, 4, 3);
        VariableRef xi = VariableRef::even(1 + int(rng() % 2));
        SuperPoly fprime = partial_even(f, VariableRef::even(1));
        CHECK(partial_even(substitute(f, {g}, {}), xi) ==
              substitute(fprime, {g}, {}) * partial_even(g, xi));
    }
}

TEST_CASE("taylor_coefficients") {
    Signature sig(1, 1);
    auto coeffs = taylor_coefficients(parse_superpoly("x1^3", sig), VariableRef::even(1), 3);
    REQUIRE(coeffs.size() == 4);
    CHECK(coeffs[0] == parse_superpoly("x1^3", sig));
    CHECK(coeffs[1] == parse_superpoly("3*x1^2", sig));
    CHECK(coeffs[2] == parse_superpoly("6*x1", sig));
    CHECK(coeffs[3] == parse_superpoly("6", sig));

    auto odd = taylor_coefficients(parse_superpoly("xi1", sig), VariableRef::even(1), 1);
    CHECK(odd[0] == parse_superpoly("xi1", sig));
    CHECK(odd[1].is_zero());

    auto high = taylor_coefficients(parse_superpoly("x1^2", sig), VariableRef::even(1), 5);
    REQUIRE(high.size() == 6);
    CHECK(high[2] == parse_superpoly("2", sig));
    CHECK(high[3].is_zero());
    CHECK(high[4].is_zero());
    CHECK(high[5].is_zero());
}
