// Parser / printer / JSON round trips and rejection diagnostics.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dcl/io.hpp"

#include <random>

using namespace dcl;

namespace {

LatticePolynomial random_poly(std::mt19937_64& rng, int n, const Rational& h, FamilySign fam) {
    LatticePolynomial p(n, h, fam);
    int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        int deg = static_cast<int>(rng() % 5);
        auto alphas = MultiIndex::all_of_degree(n, deg);
        const MultiIndex& a = alphas[rng() % alphas.size()];
        Blade b = static_cast<Blade>(rng() % (1u << n));
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 6);
        if (num == 0) num = 1;
        p.add_term(a, CliffordElement::basis_blade(n, b, Rational(num, den)));
    }
    return p;
}

}  // namespace

TEST_CASE("print/parse round trip on 500 random polynomials") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 500; ++rep) {
        int n = 1 + static_cast<int>(rng() % 3);
        Rational h(1, 1 + static_cast<long>(rng() % 4));
        FamilySign fam = rng() % 2 ? FamilySign::Minus : FamilySign::Plus;
        auto p = random_poly(rng, n, h, fam);
        CHECK(parse_polynomial(print_polynomial(p), n, h, fam) == p);
    }
}

TEST_CASE("JSON round trip on 500 random polynomials") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 500; ++rep) {
        int n = 1 + static_cast<int>(rng() % 3);
        Rational h(1, 1 + static_cast<long>(rng() % 4));
        FamilySign fam = rng() % 2 ? FamilySign::Minus : FamilySign::Plus;
        auto p = random_poly(rng, n, h, fam);
        CHECK(polynomial_from_json(to_json(p)) == p);
        // and the JSON text itself is stable through a serialize/parse cycle
        CHECK(polynomial_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("frozen grammar examples") {
    Rational h(1);
    auto p = parse_polynomial("X1^(2) e0", 1, h, FamilySign::Minus);
    CHECK(p.evaluate({Rational(3)}) == CliffordElement::scalar(1, Rational(6)));
    auto q = parse_polynomial("-1/2 X2^(1) e12 + 1/2 X1^(1) e0", 2, h, FamilySign::Minus);
    CHECK(print_polynomial(q) == "-1/2 X2^(1) e12 + 1/2 X1^(1) e0");
    // blank and "0" both denote the zero polynomial
    CHECK(parse_polynomial("0", 2, h, FamilySign::Minus).is_zero());
}

TEST_CASE("parse rejections carry line/column diagnostics") {
    Rational h(1);
    CHECK_THROWS_AS(parse_polynomial("X3^(1) e0", 2, h, FamilySign::Minus), ParseError);
    CHECK_THROWS_AS(parse_polynomial("X1^(1) e5", 2, h, FamilySign::Minus), ParseError);
    CHECK_THROWS_AS(parse_polynomial("X1^(", 2, h, FamilySign::Minus), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0 e0", 2, h, FamilySign::Minus), ParseError);
    try {
        parse_polynomial("X3^(1) e0", 2, h, FamilySign::Minus);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 1, column 3: axis 3 exceeds dimension 2");
    }
}

TEST_CASE("json rejection: malformed document") {
    CHECK_THROWS(polynomial_from_json(nlohmann::json{{"bogus", 1}}));
}
