#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superfermat/superpoly.hpp"
#include "random_gen.hpp"

using namespace superfermat;

namespace {

SuperPoly gen_even(Signature sig, int i) { return SuperPoly::generator(sig, VariableRef::even(i)); }
SuperPoly gen_odd(Signature sig, int i) { return SuperPoly::generator(sig, VariableRef::odd(i)); }

std::vector<SuperPoly> identity_even_args(Signature sig) {
    std::vector<SuperPoly> v;
    for (int i = 1; i <= sig.evens; ++i)
        v.push_back(gen_even(sig, i));
    return v;
}

std::vector<SuperPoly> identity_odd_args(Signature sig) {
    std::vector<SuperPoly> v;
    for (int i = 1; i <= sig.odds; ++i)
        v.push_back(gen_odd(sig, i));
    return v;
}

} // namespace

TEST_CASE("mono_mul applies the Koszul sign") {
    Signature sig(1, 3);
    SuperMonomial xi1({0}, 0b001), xi2({0}, 0b010), xi3({0}, 0b100);

    auto [s1, p1] = mono_mul(xi2, xi1);
    CHECK(s1 == -1);
    CHECK(p1 == SuperMonomial({0}, 0b011));

    auto [s2, p2] = mono_mul(xi1, xi1);
    CHECK(s2 == 0);

    SuperMonomial x1sq({2}, 0), x1xi3({1}, 0b100);
    auto [s3, p3] = mono_mul(x1sq, x1xi3);
    CHECK(s3 == 1);
    CHECK(p3 == SuperMonomial({3}, 0b100));
    (void)sig;

    CHECK_THROWS_AS(mono_mul(SuperMonomial({1}, 0), SuperMonomial({1, 2}, 0)),
                    SignatureMismatch);
}

TEST_CASE("addition cancels and prunes") {
    Signature sig(1, 1);
    SuperPoly x = gen_even(sig, 1), xi = gen_odd(sig, 1);
    CHECK(to_string((x + xi) + (x - xi)) == "2*x1");
    SuperPoly f = x * x + xi;
    CHECK(f + SuperPoly::zero(sig) == f);

    Signature s2(0, 2);
    SuperPoly a = gen_odd(s2, 1) * gen_odd(s2, 2);
    SuperPoly b = gen_odd(s2, 2) * gen_odd(s2, 1);
    CHECK((a + b).is_zero());
}

TEST_CASE("multiplication follows the sign law") {
    Signature sig(1, 2);
    SuperPoly x = gen_even(sig, 1), xi1 = gen_odd(sig, 1), xi2 = gen_odd(sig, 2);
    CHECK(to_string(xi1 * xi2) == "xi1*xi2");
    CHECK(to_string(xi2 * xi1) == "-xi1*xi2");

    SuperPoly one = SuperPoly::constant(sig, Rational(1));
    // (1 + xi1 xi2)(1 - xi1 xi2) = 1, since (xi1 xi2)^2 = 0
    CHECK((one + xi1 * xi2) * (one - xi1 * xi2) == one);
    // (x + xi1)(x - xi1) = x^2
    CHECK((x + xi1) * (x - xi1) == x * x);
}

TEST_CASE("substitute") {
    SUBCASE("even binomial against a nilpotent shift") {
        Signature src(1, 0), tgt(1, 2);
        SuperPoly f = gen_even(src, 1).pow(2);
        SuperPoly y = gen_even(tgt, 1);
        SuperPoly arg = y + gen_odd(tgt, 1) * gen_odd(tgt, 2);
        SuperPoly got = substitute(f, {arg}, {});
        SuperPoly want = y * y + (y * gen_odd(tgt, 1) * gen_odd(tgt, 2)).scaled(Rational(2));
        CHECK(got == want);
    }
    SUBCASE("generator relabeling") {
        Signature src(0, 1), tgt(0, 1);
        SuperPoly f = gen_odd(src, 1);
        CHECK(substitute(f, {}, {gen_odd(tgt, 1)}) == gen_odd(tgt, 1));
    }
    SUBCASE("odd swap picks up the sign") {
        Signature src(0, 2), tgt(0, 2);
        SuperPoly f = gen_odd(src, 1) * gen_odd(src, 2);
        SuperPoly got = substitute(f, {}, {gen_odd(tgt, 2), gen_odd(tgt, 1)});
        CHECK(got == -(gen_odd(tgt, 1) * gen_odd(tgt, 2)));
    }
    SUBCASE("parity violations are rejected") {
        Signature src(1, 1), tgt(1, 1);
        SuperPoly mixed = gen_even(tgt, 1) + gen_odd(tgt, 1);
        CHECK_THROWS_AS(substitute(gen_even(src, 1), {mixed}, {gen_odd(tgt, 1)}), ParityMismatch);
        CHECK_THROWS_AS(substitute(gen_even(src, 1), {gen_odd(tgt, 1)}, {gen_odd(tgt, 1)}),
                        ParityMismatch);
        CHECK_THROWS_AS(substitute(gen_even(src, 1), {gen_even(tgt, 1)}, {gen_even(tgt, 1)}),
                        ParityMismatch);
    }
    SUBCASE("zero is accepted for either parity") {
        Signature src(1, 1), tgt(1, 0);
        SuperPoly f = gen_even(src, 1) + gen_odd(src, 1);
        SuperPoly got = substitute(f, {gen_even(tgt, 1)}, {SuperPoly::zero(tgt)});
        CHECK(got == gen_even(tgt, 1));
    }
}

TEST_CASE("decompose_odd splits along xi-monomials") {
    Signature sig(1, 3);
    SuperPoly x = gen_even(sig, 1);
    SuperPoly f = x.pow(2) + (x * gen_odd(sig, 1) * gen_odd(sig, 2)).scaled(Rational(3));
    OddDecomposition dec = decompose_odd(f);
    CHECK(dec.components.size() == 2);
    CHECK(dec.components.at(0) == x.pow(2));
    CHECK(dec.components.at(0b011) == x.scaled(Rational(3)));
    CHECK(dec.reassemble() == f);

    CHECK(decompose_odd(SuperPoly::zero(sig)).components.empty());

    SuperPoly g = x * gen_odd(sig, 3);
    OddDecomposition dg = decompose_odd(g);
    CHECK(dg.components.size() == 1);
    CHECK(dg.components.at(0b100) == x);
}

TEST_CASE("parity classification") {
    Signature sig(1, 2);
    CHECK(parity_of(gen_odd(sig, 1) * gen_odd(sig, 2)) == ParityClass::Even);
    CHECK(parity_of(gen_even(sig, 1) + gen_odd(sig, 1)) == ParityClass::Mixed);
    CHECK(parity_of(SuperPoly::zero(sig)) == ParityClass::Even);
}

TEST_CASE("even and odd part extraction") {
    Signature sig(1, 2);
    SuperPoly x = gen_even(sig, 1), xi1 = gen_odd(sig, 1), xi2 = gen_odd(sig, 2);
    SuperPoly f = x + xi1;
    CHECK(f.even_part() == x);
    CHECK(f.odd_part() == xi1);
    SuperPoly g = xi1 * xi2;
    CHECK(g.even_part() == g);
    CHECK(g.odd_part().is_zero());
    CHECK(SuperPoly::zero(sig).even_part().is_zero());
    CHECK(f.even_part() + f.odd_part() == f);
}

TEST_CASE("signature mismatch is rejected") {
    SuperPoly a = gen_even(Signature(1, 0), 1);
    SuperPoly b = gen_even(Signature(2, 0), 1);
    CHECK_THROWS_AS(a + b, SignatureMismatch);
    CHECK_THROWS_AS(a * b, SignatureMismatch);
}

TEST_CASE("supercommutativity and odd squares on random homogeneous pairs") {
    testgen::Rng rng(42);
    Signature sig(2, 3);
    for (int i = 0; i < 300; ++i) {
        Parity pf = (rng() & 1) ? Parity::Odd : Parity::Even;
        Parity pg = (rng() & 1) ? Parity::Odd : Parity::Even;
        SuperPoly f = testgen::random_homogeneous_poly(rng, sig, pf);
        SuperPoly g = testgen::random_homogeneous_poly(rng, sig, pg);
        SuperPoly lhs = f * g;
        SuperPoly rhs = g * f;
        if (pf == Parity::Odd && pg == Parity::Odd)
            rhs = -rhs;
        CHECK(lhs == rhs);
        if (pf == Parity::Odd)
            CHECK((f * f).is_zero());
    }
}

TEST_CASE("ring axioms on random triples") {
    testgen::Rng rng(43);
    Signature sig(2, 2);
    for (int i = 0; i < 200; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        SuperPoly g = testgen::random_poly(rng, sig);
        SuperPoly h = testgen::random_poly(rng, sig);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + g) + h == f + (g + h));
    }
}

TEST_CASE("substitution is a parity-preserving homomorphism") {
    testgen::Rng rng(44);
    Signature src(2, 2), tgt(2, 3);
    for (int i = 0; i < 150; ++i) {
        std::vector<SuperPoly> evens = {
            testgen::random_homogeneous_poly(rng, tgt, Parity::Even, 3, 2),
            testgen::random_homogeneous_poly(rng, tgt, Parity::Even, 3, 2)};
        std::vector<SuperPoly> odds = {
            testgen::random_homogeneous_poly(rng, tgt, Parity::Odd, 3, 2),
            testgen::random_homogeneous_poly(rng, tgt, Parity::Odd, 3, 2)};
        SuperPoly f = testgen::random_poly(rng, src, 4, 3);
        SuperPoly g = testgen::random_poly(rng, src, 4, 3);
        auto sub = [&](const SuperPoly &p) { return substitute(p, evens, odds); };
        CHECK(sub(f * g) == sub(f) * sub(g));
        CHECK(sub(f + g) == sub(f) + sub(g));
        CHECK(sub(SuperPoly::constant(src, Rational(1))) ==
              SuperPoly::constant(tgt, Rational(1)));

        SuperPoly hom = testgen::random_homogeneous_poly(rng, src, Parity::Odd, 4, 3);
        CHECK(sub(hom).is_odd());
    }
}

TEST_CASE("decompose_odd reassembly is the identity both ways") {
    testgen::Rng rng(45);
    Signature sig(2, 3);
    for (int i = 0; i < 150; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        OddDecomposition dec = decompose_odd(f);
        CHECK(dec.reassemble() == f);
        for (const auto &[oddset, comp] : dec.components) {
            CHECK(!comp.is_zero());
            for (const auto &[m, c] : comp.terms())
                CHECK(m.odd == 0);
        }
        OddDecomposition again = decompose_odd(dec.reassemble());
        CHECK(again.components == dec.components);

        if (f.is_homogeneous() && !f.is_zero()) {
            for (const auto &[oddset, comp] : dec.components)
                CHECK(Parity(__builtin_popcountll(oddset) % 2) ==
                      (f.is_odd() ? Parity::Odd : Parity::Even));
        }
    }
}

TEST_CASE("canonical form: different routes, identical term maps") {
    testgen::Rng rng(46);
    Signature sig(2, 2);
    for (int i = 0; i < 100; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        SuperPoly g = testgen::random_poly(rng, sig);
        SuperPoly h = testgen::random_poly(rng, sig);
        SuperPoly a = (f + g) * h;
        SuperPoly b = f * h + g * h;
        CHECK(a.terms() == b.terms());
    }

    // identity substitution is the identity on the nose
    Signature sig2(2, 2);
    for (int i = 0; i < 50; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig2);
        CHECK(substitute(f, identity_even_args(sig2), identity_odd_args(sig2)) == f);
    }
}

TEST_CASE("printing") {
    Signature sig(2, 2);
    SuperPoly x1 = gen_even(sig, 1), x2 = gen_even(sig, 2);
    SuperPoly xi1 = gen_odd(sig, 1), xi2 = gen_odd(sig, 2);
    CHECK(to_string(SuperPoly::zero(sig)) == "0");
    CHECK(to_string(x1.pow(2) + x1 * x2 + x2.pow(2) + xi1 * xi2) ==
          "x1^2 + x1*x2 + x2^2 + xi1*xi2");
    CHECK(to_string(-xi1) == "-xi1");
    CHECK(to_string(x1.scaled(Rational(3, 2)) - SuperPoly::constant(sig, Rational(1))) ==
          "3/2*x1 - 1");
}
