#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "brauer/brclass.hpp"
#include "brauer/residues.hpp"

using namespace brauer;

namespace {

BiPoly U() { return BiPoly::variable(Var::U); }
BiPoly V() { return BiPoly::variable(Var::V); }

RatFun alpha_a() {
    return RatFun(U() * V() * (U() * U() - BiPoly(1)) * (V() * V() - BiPoly(1)));
}
RatFun alpha_b() {
    return RatFun(U() * (V() * V() - BiPoly(1)) * (V() * V() - U() * U()));
}
BrClass alpha() { return BrClass(QSymbol(alpha_a(), alpha_b())); }
BrClass uv_symbol() {
    return BrClass(QSymbol(RatFun::variable(Var::U), RatFun::variable(Var::V)));
}

// the eight divisors of the bundle computation
std::vector<PrimeDivisor> basis_divisors() {
    return {
        PrimeDivisor(Var::U, BiPoly(0)),   // u
        PrimeDivisor(Var::V, BiPoly(0)),   // v
        PrimeDivisor(Var::U, BiPoly(1)),   // u - 1
        PrimeDivisor(Var::U, BiPoly(-1)),  // u + 1
        PrimeDivisor(Var::V, BiPoly(1)),   // v - 1
        PrimeDivisor(Var::V, BiPoly(-1)),  // v + 1
        PrimeDivisor(Var::U, V()),         // u - v
        PrimeDivisor(Var::U, -V()),        // u + v
    };
}

// ---- independent tame-symbol oracle ----------------------------------------
//
// Symbols are kept in factored form over the divisor basis. The residue at a
// basis divisor P is computed by bilinear expansion into elementary symbols,
// each resolved by the hand rules
//   d_P(P, P) = [-1],  d_P(P, G) = d_P(G, P) = [G mod P],  d_P(G, H) = [1],
//   d_P(P, c) = d_P(c, P) = [c],  d_P(c, d) = [1],
// with the representative accumulated as one product and canonicalized once.

struct FactoredEntry {
    GaussRat cst = GaussRat(1);
    std::vector<int> exps;  // exponent per basis divisor
};

RatFun entry_value(const std::vector<PrimeDivisor>& basis, const FactoredEntry& e) {
    RatFun out{e.cst};
    for (std::size_t i = 0; i < basis.size(); ++i)
        out = out * RatFun(basis[i].poly()).pow(e.exps[i]);
    return out;
}

SquareClass oracle_residue(const std::vector<PrimeDivisor>& basis, int k,
                           const FactoredEntry& a, const FactoredEntry& b) {
    const PrimeDivisor& p = basis[k];
    Var rv = p.residue_var();
    RatFun rep{GaussRat(1)};

    auto reduce_basis = [&](int j) {
        BiPoly image = basis[j].poly().substitute(p.solved(), p.rhs());
        return RatFun(image);
    };

    // (P, P) pairs contribute [-1]^{e_k f_k}
    if ((a.exps[k] * b.exps[k]) % 2 != 0) rep = rep * RatFun(-1);
    // (P, G) and (G, P) pairs
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (static_cast<int>(j) == k) continue;
        if ((a.exps[k] * b.exps[j]) % 2 != 0) rep = rep * reduce_basis(static_cast<int>(j));
        if ((b.exps[k] * a.exps[j]) % 2 != 0) rep = rep * reduce_basis(static_cast<int>(j));
    }
    // constants against P
    if (a.exps[k] % 2 != 0) rep = rep * RatFun(b.cst);
    if (b.exps[k] % 2 != 0) rep = rep * RatFun(a.cst);

    return SquareClass::from(UniRat(rv, rep));
}

// exponents in {0, .., max_exp}, nonzero on a small random subset of the
// basis so degrees stay moderate
FactoredEntry random_entry(std::mt19937& rng, int max_exp) {
    std::uniform_int_distribution<int> expo(1, max_exp);
    std::uniform_int_distribution<int> pick_cst(0, 4);
    std::uniform_int_distribution<int> pick_idx(0, 7);
    std::uniform_int_distribution<int> nfac(1, 3);
    static const GaussRat csts[5] = {GaussRat(1), GaussRat(2), GaussRat(-1), GaussRat(3),
                                     GaussRat(make_rat(1, 2))};
    FactoredEntry e;
    e.cst = csts[pick_cst(rng)];
    e.exps.assign(8, 0);
    int n = nfac(rng);
    for (int k = 0; k < n; ++k) e.exps[pick_idx(rng)] = expo(rng);
    return e;
}

} // namespace

TEST_CASE("valuations at divisors") {
    PrimeDivisor pu(Var::U, BiPoly(0));
    PrimeDivisor pv1(Var::V, BiPoly(1));

    CHECK(valuation(alpha_a(), pu) == 1);
    CHECK(valuation(alpha_b(), pv1) == 1);
    CHECK(valuation(RatFun(U() * U(), V()), pu) == 2);
    CHECK(valuation(RatFun(U() * U(), V()), PrimeDivisor(Var::V, BiPoly(0))) == -1);
    CHECK_THROWS_AS(valuation(RatFun(0), pu), ZeroInput);
}

TEST_CASE("valuation additivity on 200 random pairs") {
    std::mt19937 rng(42);
    auto basis = basis_divisors();
    std::uniform_int_distribution<int> pick(0, 7);
    for (int k = 0; k < 200; ++k) {
        FactoredEntry fa = random_entry(rng, 2), fb = random_entry(rng, 2);
        RatFun f = entry_value(basis, fa), g = entry_value(basis, fb);
        const PrimeDivisor& p = basis[pick(rng)];
        CHECK(valuation(f * g, p) == valuation(f, p) + valuation(g, p));
        CHECK(valuation(f / g, p) == valuation(f, p) - valuation(g, p));
    }
}

TEST_CASE("residue of the bundle symbol at u = 0 is the class of v") {
    PrimeDivisor pu(Var::U, BiPoly(0));
    SquareClass r = residue_symbol(QSymbol(alpha_a(), alpha_b()), pu);
    CHECK(r.var == Var::V);
    CHECK(r.str() == "v");
    CHECK_FALSE(r.trivial());
}

TEST_CASE("residue of the bundle symbol at v + 1 = 0 is -1, trivial over Q(i)") {
    PrimeDivisor p(Var::V, BiPoly(-1));
    SquareClass r = residue_symbol(QSymbol(alpha_a(), alpha_b()), p);
    CHECK(r.var == Var::U);
    CHECK(r.str() == "-1");
    CHECK(r.trivial());
    CHECK(r.canonical().str() == "1");
}

TEST_CASE("residue of sym(u, v) at u = 0 is the class of v") {
    PrimeDivisor pu(Var::U, BiPoly(0));
    SquareClass r = residue_symbol(QSymbol(RatFun::variable(Var::U), RatFun::variable(Var::V)), pu);
    CHECK(r.str() == "v");
}

TEST_CASE("residue of sym(u, u) at u = 0 is -1, trivial") {
    PrimeDivisor pu(Var::U, BiPoly(0));
    SquareClass r = residue_symbol(QSymbol(RatFun::variable(Var::U), RatFun::variable(Var::U)), pu);
    CHECK(r.str() == "-1");
    CHECK(r.trivial());
}

TEST_CASE("residue table of the bundle symbol: all eight rows") {
    std::vector<ResidueRow> rows = residue_rows(alpha());
    REQUIRE(rows.size() == 8);

    std::map<std::string, std::pair<std::string, bool>> expect = {
        {"u", {"v", false}},      {"v", {"u", false}},
        {"u - 1", {"1", true}},   {"u + 1", {"-1", true}},
        {"v - 1", {"1", true}},   {"v + 1", {"-1", true}},
        {"u - v", {"1", true}},   {"u + v", {"-1", true}},
    };
    for (const ResidueRow& row : rows) {
        auto it = expect.find(row.divisor.str());
        REQUIRE(it != expect.end());
        CHECK(row.cls.str() == it->second.first);
        CHECK(row.trivial == it->second.second);
        expect.erase(it);
    }
    CHECK(expect.empty());

    ResidueProfile profile = residue_profile(alpha());
    REQUIRE(profile.size() == 2);
    CHECK(profile.at(PrimeDivisor(Var::U, BiPoly(0))).str() == "v");
    CHECK(profile.at(PrimeDivisor(Var::V, BiPoly(0))).str() == "u");
}

TEST_CASE("difference with sym(u, v) is everywhere unramified") {
    BrClass diff = alpha() + uv_symbol();
    CHECK(residue_profile(diff).empty());
    CHECK(is_unramified(diff));
    CHECK_FALSE(is_unramified(alpha()));
    CHECK_FALSE(is_unramified(uv_symbol()));
}

TEST_CASE("constant symbols have empty profiles") {
    BrClass c(QSymbol(RatFun(2), RatFun(3)));
    CHECK(residue_profile(c).empty());
    CHECK(residue_rows(c).empty());
}

TEST_CASE("oracle equivalence: residue formula vs tame-symbol expansion") {
    std::mt19937 rng(2024);
    auto basis = basis_divisors();
    for (int n = 0; n < 200; ++n) {
        FactoredEntry fa = random_entry(rng, 2), fb = random_entry(rng, 2);
        QSymbol s(entry_value(basis, fa), entry_value(basis, fb));
        for (int k = 0; k < 8; ++k) {
            SquareClass via_formula = residue_symbol(s, basis[k]);
            SquareClass via_oracle = oracle_residue(basis, k, fa, fb);
            CHECK(via_formula.same_class(via_oracle));
        }
    }
}

TEST_CASE("residue is bilinear: sym(a,b) + sym(a,c) matches sym(a, b*c)") {
    std::mt19937 rng(99);
    auto basis = basis_divisors();
    std::uniform_int_distribution<int> pick(0, 7);
    for (int n = 0; n < 200; ++n) {
        FactoredEntry fa = random_entry(rng, 1), fb = random_entry(rng, 1),
                      fc = random_entry(rng, 1);
        RatFun a = entry_value(basis, fa), b = entry_value(basis, fb),
               c = entry_value(basis, fc);
        const PrimeDivisor& p = basis[pick(rng)];
        SquareClass sum = residue_symbol(QSymbol(a, b), p) * residue_symbol(QSymbol(a, c), p);
        SquareClass merged = residue_symbol(QSymbol(a, b * c), p);
        CHECK(sum.same_class(merged));
    }
}

TEST_CASE("residue is symmetric in the symbol entries") {
    std::mt19937 rng(7);
    auto basis = basis_divisors();
    std::uniform_int_distribution<int> pick(0, 7);
    for (int n = 0; n < 200; ++n) {
        FactoredEntry fa = random_entry(rng, 2), fb = random_entry(rng, 2);
        RatFun a = entry_value(basis, fa), b = entry_value(basis, fb);
        // half the samples have poles, so negative valuations are covered
        if (n % 2 == 0) {
            a = a / entry_value(basis, random_entry(rng, 1));
            b = b / entry_value(basis, random_entry(rng, 1));
        }
        const PrimeDivisor& p = basis[pick(rng)];
        CHECK(residue_symbol(QSymbol(a, b), p).same_class(residue_symbol(QSymbol(b, a), p)));
    }
}

TEST_CASE("residue with a pole entry") {
    PrimeDivisor pu(Var::U, BiPoly(0));
    // (1/u, v) at u = 0: the formula gives the class of v
    QSymbol s(RatFun(BiPoly(1), U()), RatFun::variable(Var::V));
    SquareClass r = residue_symbol(s, pu);
    CHECK(r.str() == "v");
    CHECK_FALSE(r.trivial());
}

TEST_CASE("the residue of sym(u, 2) at u is the class of 2") {
    // the hand-rule expansion gives [2] directly; the formula must agree
    auto basis = basis_divisors();
    FactoredEntry fa;
    fa.cst = GaussRat(1);
    fa.exps.assign(8, 0);
    fa.exps[0] = 1;  // u
    FactoredEntry fb;
    fb.cst = GaussRat(2);
    fb.exps.assign(8, 0);
    SquareClass via_oracle = oracle_residue(basis, 0, fa, fb);
    SquareClass via_formula =
        residue_symbol(QSymbol(RatFun::variable(Var::U), RatFun(2)), basis[0]);
    CHECK(via_formula.same_class(via_oracle));
    CHECK(via_formula.str() == "2");
    CHECK_FALSE(via_formula.trivial());
}

TEST_CASE("multiplying an entry by a square changes no residue") {
    std::mt19937 rng(31);
    auto basis = basis_divisors();
    std::uniform_int_distribution<int> pick(0, 7);
    for (int n = 0; n < 200; ++n) {
        FactoredEntry fa = random_entry(rng, 1), fb = random_entry(rng, 1),
                      fg = random_entry(rng, 1);
        RatFun a = entry_value(basis, fa), b = entry_value(basis, fb),
               g = entry_value(basis, fg);
        QSymbol plain(a, b);
        QSymbol scaled(a * g * g, b);
        for (int reps = 0; reps < 2; ++reps) {
            const PrimeDivisor& p = basis[pick(rng)];
            CHECK(residue_symbol(plain, p).same_class(residue_symbol(scaled, p)));
        }
    }
}

TEST_CASE("steinberg pairs (f, 1-f) are fully unramified") {
    std::mt19937 rng(55);
    auto basis = basis_divisors();
    std::uniform_int_distribution<int> pick(0, 7);
    std::uniform_int_distribution<long> lam(-3, 3);
    int done = 0;
    while (done < 200) {
        // f = c * P / Q keeps every entry of (f, 1-f) inside the linear
        // divisor family, so the whole profile is computable
        long l = lam(rng);
        if (l == 0) continue;
        int ip = pick(rng), iq = pick(rng);
        RatFun f = RatFun(basis[ip].poly()).pow(pick(rng) % 2) * RatFun(GaussRat(l)) /
                   RatFun(basis[iq].poly()).pow(pick(rng) % 2);
        RatFun one_minus = RatFun(1) - f;
        if (f.is_zero() || one_minus.is_zero() || f.is_constant()) continue;
        BrClass steinberg(QSymbol(f, one_minus));
        CHECK(is_unramified(steinberg));
        ++done;
    }

    // richer entries, checked divisor by divisor at every named divisor
    for (int n = 0; n < 200; ++n) {
        FactoredEntry fa = random_entry(rng, 2);
        RatFun f = entry_value(basis, fa);
        RatFun one_minus = RatFun(1) - f;
        if (f.is_constant() || one_minus.is_zero()) continue;
        QSymbol s(f, one_minus);
        for (int k = 0; k < 8; ++k) CHECK(residue_symbol(s, basis[k]).trivial());
    }
}

TEST_CASE("explicit divisors of higher-degree shape are accepted") {
    // v = u^2 is monic-linear in v; residues there work even though the
    // automatic support extraction does not produce such divisors
    PrimeDivisor p(Var::V, U() * U());
    QSymbol s(RatFun(V() - U() * U()), RatFun::variable(Var::U));
    SquareClass r = residue_symbol(s, p);
    CHECK(r.var == Var::U);
    CHECK(r.str() == "u");

    BrClass c(s);
    CHECK_THROWS_AS(residue_profile(c), UnsupportedDivisor);
    // but the profile over explicitly supplied divisors is fine
    ResidueProfile profile;
    CHECK_NOTHROW(profile = residue_profile(BrClass(QSymbol(RatFun::variable(Var::U),
                                                            RatFun::variable(Var::V))),
                                            {p}));
}

TEST_CASE("support splitting handles general linear plane divisors") {
    // (2u - v + 2)(v - 3)(u + (1+i)v) has a fractional slope, a pure-v
    // factor, and a Gaussian slope
    BiPoly f1 = U().scaled(GaussRat(2)) - V() + BiPoly(2);
    BiPoly f2 = V() - BiPoly(3);
    BiPoly f3 = U() + V().scaled(GaussRat(Rat(1), Rat(1)));
    auto divisors = split_linear_divisors((f1 * f2 * f3).monic());
    REQUIRE(divisors.size() == 3);

    bool saw_frac = false, saw_v = false, saw_gauss = false;
    for (const PrimeDivisor& p : divisors) {
        if (p == PrimeDivisor(Var::V, BiPoly(3))) saw_v = true;
        // 2u - v + 2 = 0  <=>  u = v/2 - 1
        if (p == PrimeDivisor(Var::U, V().scaled(GaussRat(make_rat(1, 2))) - BiPoly(1)))
            saw_frac = true;
        // u + (1+i)v = 0  <=>  u = -(1+i)v
        if (p == PrimeDivisor(Var::U, V().scaled(GaussRat(Rat(-1), Rat(-1))))) saw_gauss = true;
    }
    CHECK(saw_frac);
    CHECK(saw_v);
    CHECK(saw_gauss);

    // each recovered divisor divides the product exactly
    BiPoly prod = (f1 * f2 * f3).monic();
    for (const PrimeDivisor& p : divisors)
        CHECK(prod.divide_exact(p.poly()).has_value());

    // huge coefficients overflow the divisor scan and raise a clear error
    BiPoly big = U() - BiPoly(GaussRat(Rat(1000003) * Rat(1000003)));
    CHECK_THROWS_AS(split_linear_divisors(big * (U() - V())), UnsupportedDivisor);
}

TEST_CASE("square class canonicalization and equality") {
    UniRat half(Var::V, RatFun(BiPoly(1), BiPoly(2)));
    SquareClass c = SquareClass::from(half);
    CHECK(c.str() == "2");  // 1/2 ~ 2 modulo squares, integral representative
    CHECK_FALSE(c.trivial());

    UniRat eight(Var::V, RatFun(BiPoly(8)));
    CHECK(c.same_class(SquareClass::from(eight)));  // 2*8 = 16 is a square

    UniRat v_over_cube(Var::V, RatFun(BiPoly(1), V() * V() * V()));
    SquareClass cv = SquareClass::from(v_over_cube);
    CHECK(cv.str() == "v");
}
