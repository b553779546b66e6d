#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "brauer/bipoly.hpp"

using namespace brauer;

namespace {

BiPoly U() { return BiPoly::variable(Var::U); }
BiPoly V() { return BiPoly::variable(Var::V); }

// random polynomial, a handful of small terms
BiPoly random_poly(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 4);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> imag(0, 3);
    BiPoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        GaussRat c(make_rat(coeff(rng), 1), imag(rng) == 0 ? make_rat(coeff(rng), 1) : Rat(0));
        p += BiPoly::monomial(Mono{deg(rng), deg(rng)}, c);
    }
    if (!allow_zero && p.is_zero()) p = BiPoly(1) + U();
    return p;
}

// random product of linear factors with exponents <= 3
BiPoly random_linear_product(std::mt19937& rng, GaussRat* cst_out = nullptr) {
    std::vector<BiPoly> factors = {U(), V(), U() - BiPoly(1), U() + BiPoly(1),
                                   V() - BiPoly(1), V() + BiPoly(1), U() - V(), U() + V(),
                                   U() - BiPoly(2), V() + BiPoly(2)};
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<long> cnum(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    BiPoly p(1);
    for (const BiPoly& f : factors) p *= f.pow(static_cast<unsigned>(expo(rng)));
    GaussRat c(make_rat((sign(rng) ? 1 : -1) * cnum(rng), cnum(rng)));
    if (cst_out != nullptr) *cst_out = c;
    return p.scaled(c);
}

} // namespace

TEST_CASE("canonical string form, lex order with u > v") {
    BiPoly p = U() * U() * V() - U().scaled(GaussRat(3)) + BiPoly(make_rat(1, 2));
    CHECK(p.str() == "u^2*v - 3*u + 1/2");
    CHECK(BiPoly().str() == "0");
    CHECK((U() + V()).str() == "u + v");
    CHECK((U() - V()).str() == "u - v");
    BiPoly q = U().scaled(GaussRat(Rat(0), Rat(2))) + BiPoly(GaussRat(Rat(-1), Rat(1)));
    CHECK(q.str() == "(2*i)*u + (-1+i)");
}

TEST_CASE("gcd on known pairs") {
    BiPoly a = U() * U() - BiPoly(1);
    BiPoly b = U() * U() - U().scaled(GaussRat(2)) + BiPoly(1);
    CHECK(poly_gcd(a, b) == U() - BiPoly(1));

    CHECK(poly_gcd(U() * V(), U() + V()).is_one());

    BiPoly c = U() * U() - V() * V();
    CHECK(poly_gcd(c, U() - V()) == U() - V());
}

TEST_CASE("gcd rejects two zeros, handles one zero") {
    CHECK_THROWS_AS(poly_gcd(BiPoly(), BiPoly()), ZeroInput);
    BiPoly p = (U() + V()).scaled(GaussRat(3));
    CHECK(poly_gcd(p, BiPoly()) == U() + V());
    CHECK(poly_gcd(BiPoly(), p) == U() + V());
}

TEST_CASE("gcd divides both inputs and absorbs common factors") {
    std::mt19937 rng(7);
    for (int k = 0; k < 60; ++k) {
        BiPoly f = random_poly(rng, false);
        BiPoly g = random_poly(rng, false);
        BiPoly h = random_poly(rng, false);
        BiPoly gc = poly_gcd(f * h, g * h);
        CHECK((f * h).divide_exact(gc).has_value());
        CHECK((g * h).divide_exact(gc).has_value());
        CHECK(gc.divide_exact(poly_gcd(h, h)).has_value());  // h | gcd
    }
}

TEST_CASE("odd_part on the normalization examples") {
    // u(1-u)(u^2-1)(u^2-2u) = -1 * [(u+1)(u-2)] * [u(u-1)]^2
    BiPoly f = U() * (BiPoly(1) - U()) * (U() * U() - BiPoly(1)) *
               (U() * U() - U().scaled(GaussRat(2)));
    OddPartResult r = odd_part(f);
    CHECK(r.odd == (U() + BiPoly(1)) * (U() - BiPoly(2)));
    CHECK(r.cst == GaussRat(-1));
    CHECK(r.even_witness == U() * (U() - BiPoly(1)));
    CHECK(r.odd.scaled(r.cst) * r.even_witness.pow(2) == f);

    // (u-1)^2
    OddPartResult r2 = odd_part((U() - BiPoly(1)).pow(2));
    CHECK(r2.odd.is_one());
    CHECK(r2.cst == GaussRat(1));
    CHECK(r2.even_witness == U() - BiPoly(1));

    // u(u^2-2u)(1-2u) = -2 * [(u-2)(u-1/2)] * u^2
    BiPoly f3 = U() * (U() * U() - U().scaled(GaussRat(2))) *
                (BiPoly(1) - U().scaled(GaussRat(2)));
    OddPartResult r3 = odd_part(f3);
    CHECK(r3.odd == (U() - BiPoly(2)) * (U() - BiPoly(make_rat(1, 2))));
    CHECK(r3.cst == GaussRat(-2));
    CHECK(r3.even_witness == U());
    CHECK(r3.odd.scaled(r3.cst) * r3.even_witness.pow(2) == f3);
}

TEST_CASE("odd_part rejects zero") {
    CHECK_THROWS_AS(odd_part(BiPoly()), ZeroInput);
}

TEST_CASE("odd_part reconstruction on 200 random factor products") {
    std::mt19937 rng(42);
    for (int k = 0; k < 200; ++k) {
        BiPoly f = random_linear_product(rng);
        OddPartResult r = odd_part(f);
        CHECK(r.odd.scaled(r.cst) * r.even_witness.pow(2) == f);
        if (!r.odd.is_one()) {
            CHECK(r.odd.leading_coeff() == GaussRat(1));
            CHECK(squarefree_part(r.odd) == r.odd);
        }
    }
}

TEST_CASE("ring laws on random samples") {
    std::mt19937 rng(13);
    for (int k = 0; k < 200; ++k) {
        BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("exact division and substitution") {
    BiPoly f = (U() + V()).pow(3) * (U() - BiPoly(1));
    auto q = f.divide_exact((U() + V()).pow(2));
    REQUIRE(q.has_value());
    CHECK(*q == (U() + V()) * (U() - BiPoly(1)));
    CHECK_FALSE(f.divide_exact(U() + BiPoly(1)).has_value());

    BiPoly g = U() * U() + V();
    CHECK(g.substitute(Var::U, V()) == V() * V() + V());
    CHECK(g.evaluate(GaussRat(2), GaussRat(3)) == GaussRat(7));
}

TEST_CASE("degree and leading data") {
    BiPoly p = U() * U() * V() + V().pow(5);
    CHECK(p.degree(Var::U) == 2);
    CHECK(p.degree(Var::V) == 5);
    CHECK(p.leading_mono() == Mono{2, 1});  // lex u > v
    CHECK(BiPoly().degree(Var::U) == -1);
    CHECK(p.coeff_of(Var::U, 0) == V().pow(5));
}
