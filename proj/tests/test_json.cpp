#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superfermat/json_io.hpp"
#include "superfermat/parser.hpp"
#include "random_gen.hpp"

using namespace superfermat;

TEST_CASE("superpoly JSON shape") {
    Signature sig(1, 2);
    SuperPoly f = parse_superpoly("x1^2 - 3/2*xi1*xi2", sig);
    Json j = to_json(f);
    CHECK(j.at("sig") == Json({1, 2}));
    REQUIRE(j.at("terms").size() == 2);
    CHECK(j["terms"][0]["even"] == Json({2}));
    CHECK(j["terms"][0]["odd"] == Json::array());
    CHECK(j["terms"][0]["coef"] == "1");
    CHECK(j["terms"][1]["odd"] == Json({1, 2}));
    CHECK(j["terms"][1]["coef"] == "-3/2");
}

TEST_CASE("superpoly JSON round trip on random polynomials") {
    testgen::Rng rng(606);
    Signature sig(2, 3);
    for (int i = 0; i < 200; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig, 8, 5);
        Json j = to_json(f);
        CHECK(superpoly_from_json(j) == f);
        // serialized text parses back too
        CHECK(superpoly_from_json(Json::parse(j.dump())) == f);
    }
}

TEST_CASE("bad monomial JSON is rejected") {
    Signature sig(1, 2);
    Json good = to_json(parse_superpoly("x1*xi1", sig));
    Json bad = good;
    bad["terms"][0]["odd"] = Json({2, 1});
    CHECK_THROWS_AS(superpoly_from_json(bad), Error);
    bad = good;
    bad["terms"][0]["odd"] = Json({9});
    CHECK_THROWS_AS(superpoly_from_json(bad), Error);
    bad = good;
    bad["terms"][0]["even"] = Json({-1});
    CHECK_THROWS_AS(superpoly_from_json(bad), Error);
}

TEST_CASE("presentation JSON round trip") {
    Signature sig(1, 2);
    FinitePresentation p(sig, {parse_superpoly("x1^2 - xi1*xi2", sig),
                               parse_superpoly("x1*xi1", sig)});
    Json j = to_json(p);
    CHECK(j.at("theory") == "Poly");
    FinitePresentation back = presentation_from_json(j);
    CHECK(back.signature == p.signature);
    CHECK(back.relations == p.relations);
}

TEST_CASE("text and JSON renderings agree") {
    testgen::Rng rng(607);
    Signature sig(2, 2);
    for (int i = 0; i < 100; ++i) {
        SuperPoly f = testgen::random_poly(rng, sig);
        SuperPoly via_text = parse_superpoly(to_string(f), sig);
        SuperPoly via_json = superpoly_from_json(to_json(f));
        CHECK(via_text == via_json);
    }
}
