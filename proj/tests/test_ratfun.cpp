#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brauer/ratfun.hpp"

using namespace brauer;

namespace {

BiPoly U() { return BiPoly::variable(Var::U); }
BiPoly V() { return BiPoly::variable(Var::V); }
RatFun ru() { return RatFun::variable(Var::U); }
RatFun rv() { return RatFun::variable(Var::V); }

// the two entries of the bundle's symbol
RatFun alpha_a() {
    return RatFun(U() * V() * (U() * U() - BiPoly(1)) * (V() * V() - BiPoly(1)));
}
RatFun alpha_b() {
    return RatFun(U() * (V() * V() - BiPoly(1)) * (V() * V() - U() * U()));
}

BiPoly random_poly(std::mt19937& rng, bool nonzero) {
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, 3);
    std::uniform_int_distribution<long> coeff(-3, 3);
    BiPoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        p += BiPoly::monomial(Mono{deg(rng), deg(rng)}, GaussRat(make_rat(coeff(rng), 1)));
    if (nonzero && p.is_zero()) p = U() + BiPoly(1);
    return p;
}

RatFun random_ratfun(std::mt19937& rng) {
    return RatFun(random_poly(rng, false), random_poly(rng, true));
}

} // namespace

TEST_CASE("rational functions are stored reduced with monic denominator") {
    RatFun f(U() * U() - BiPoly(1), (U() - BiPoly(1)).scaled(GaussRat(2)));
    CHECK(f.num() == (U() + BiPoly(1)).scaled(GaussRat(make_rat(1, 2))));
    CHECK(f.den().is_one());

    RatFun g(U(), U() * V());
    CHECK(g.num() == BiPoly(1));
    CHECK(g.den() == V());
    CHECK(g.str() == "(1) / (v)");

    CHECK_THROWS_AS(RatFun(U(), BiPoly()), CalcError);
}

TEST_CASE("substitution along the line v = 1-u reproduces the restriction") {
    ParamCurve d(Var::U, BiPoly(1) - U());

    UniRat ra = substitute(alpha_a(), d);
    BiPoly expect_a = U() * (BiPoly(1) - U()) * (U() * U() - BiPoly(1)) *
                      (U() * U() - U().scaled(GaussRat(2)));
    CHECK(ra.fn == RatFun(expect_a));

    UniRat rb = substitute(alpha_b(), d);
    BiPoly expect_b = U() * (U() * U() - U().scaled(GaussRat(2))) *
                      (BiPoly(1) - U().scaled(GaussRat(2)));
    CHECK(rb.fn == RatFun(expect_b));

    UniRat rc = substitute(RatFun(5), d);
    CHECK(rc.fn == RatFun(5));
}

TEST_CASE("substitution with a denominator dying on the curve") {
    ParamCurve d(Var::U, BiPoly(1) - U());  // v = 1-u
    RatFun f(BiPoly(1), U() + V() - BiPoly(1));
    CHECK_THROWS_AS(substitute(f, d), IdenticallyZeroDenominator);
}

TEST_CASE("substitute is a ring homomorphism on samples") {
    std::mt19937 rng(11);
    ParamCurve d(Var::U, BiPoly(1) - U());
    for (int k = 0; k < 200; ++k) {
        BiPoly f = random_poly(rng, false), g = random_poly(rng, false);
        UniRat sf = substitute(RatFun(f), d);
        UniRat sg = substitute(RatFun(g), d);
        UniRat sfg = substitute(RatFun(f * g), d);
        CHECK(sfg.fn == sf.fn * sg.fn);
        UniRat sfpg = substitute(RatFun(f + g), d);
        CHECK(sfpg.fn == sf.fn + sg.fn);
    }
}

TEST_CASE("reduce_mod at the divisor u = 0") {
    PrimeDivisor p(Var::U, BiPoly(0));

    UniRat rv_img = reduce_mod(rv(), p);
    CHECK(rv_img.fn == rv());
    CHECK(rv_img.var == Var::V);

    RatFun f((U() + BiPoly(1)) * (U() - BiPoly(2)));
    UniRat rf = reduce_mod(f, p);
    CHECK(rf.fn == RatFun(-2));

    CHECK_THROWS_AS(reduce_mod(ru(), p), NonUnitAtDivisor);
}

TEST_CASE("reduce_mod agrees with evaluate on points of the divisor") {
    std::mt19937 rng(5);
    PrimeDivisor p(Var::U, BiPoly(0));  // u = 0
    int done = 0;
    while (done < 200) {
        RatFun f = random_ratfun(rng);
        if (f.is_zero()) continue;
        int val;
        try {
            val = valuation(f, p);
        } catch (const CalcError&) {
            continue;
        }
        if (val != 0) continue;
        UniRat image = reduce_mod(f, p);
        GaussRat v0(make_rat(done % 7 - 3, 1 + done % 3));
        PlanePoint pt{GaussRat(0), v0};
        GaussRat direct;
        try {
            direct = evaluate(f, pt);
        } catch (const PoleAtPoint&) {
            continue;
        }
        CHECK(image.evaluate_at(v0) == direct);
        ++done;
    }
}

TEST_CASE("evaluation at plane points") {
    PlanePoint m{GaussRat(2), GaussRat(3)};
    CHECK(evaluate(alpha_a(), m) == GaussRat(144));
    CHECK(evaluate(alpha_b(), m) == GaussRat(80));
    CHECK(evaluate(ru(), PlanePoint{GaussRat(0), GaussRat(1)}) == GaussRat(0));

    RatFun pole(BiPoly(1), U());
    CHECK_THROWS_AS(evaluate(pole, PlanePoint{GaussRat(0), GaussRat(0)}), PoleAtPoint);
}

TEST_CASE("prime divisors reject unsupported shapes") {
    CHECK_THROWS_AS(PrimeDivisor(Var::U, U() + BiPoly(1)), UnsupportedDivisor);
    // u*v - 1 is linear in each variable but never with a constant lead
    CHECK_THROWS_AS(PrimeDivisor::from_poly(U() * V() - BiPoly(1)), UnsupportedDivisor);
    CHECK_THROWS_AS(PrimeDivisor::from_poly(U().pow(2) - V().pow(3)), UnsupportedDivisor);
    // v - u^2 is monic-linear in v (also when entered as u^2 - v)
    PrimeDivisor p = PrimeDivisor::from_poly(U() * U() - V());
    CHECK(p.solved() == Var::V);
    CHECK(p.residue_var() == Var::U);
    CHECK(p == PrimeDivisor::from_poly(V() - U() * U()));

    PrimeDivisor q = PrimeDivisor::from_poly(U() + V());
    CHECK(q.solved() == Var::U);
    CHECK(q.str() == "u + v");
}

TEST_CASE("field laws for rational functions") {
    std::mt19937 rng(23);
    for (int k = 0; k < 100; ++k) {
        RatFun f = random_ratfun(rng), g = random_ratfun(rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        if (!g.is_zero()) CHECK((f / g) * g == f);
        CHECK(f - f == RatFun(0));
    }
}
