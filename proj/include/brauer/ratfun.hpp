#pragma once

#include <string>

#include "brauer/bipoly.hpp"

namespace brauer {

// Reduced fraction of bivariate polynomials: gcd(num, den) = 1, den monic
// in the canonical order, den != 0.
class RatFun {
public:
    RatFun() : num_(0), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}                 // NOLINT
    RatFun(const GaussRat& c) : num_(c), den_(1) {}      // NOLINT
    RatFun(const BiPoly& p) : num_(p), den_(1) {}        // NOLINT
    RatFun(BiPoly num, BiPoly den);

    static RatFun variable(Var x) { return RatFun(BiPoly::variable(x)); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool univariate_in(Var x) const { return num_.univariate_in(x) && den_.univariate_in(x); }
    GaussRat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inv() const;
    RatFun pow(long e) const;

    // "(num)/(den)", or just the numerator when den == 1.
    std::string str() const;

private:
    BiPoly num_;
    BiPoly den_;
};

// Irreducible divisor of the affine plane, cut out by a polynomial monic of
// degree 1 in the designated variable: u - g(v) or v - f(u). Degree-1 forms
// are automatically irreducible; anything else is rejected on construction.
class PrimeDivisor {
public:
    PrimeDivisor(Var solved, BiPoly rhs);

    // Classifies a defining polynomial, preferring the form u - g(v).
    static PrimeDivisor from_poly(const BiPoly& p);

    Var solved() const { return solved_; }
    Var residue_var() const { return other_var(solved_); }
    const BiPoly& rhs() const { return rhs_; }
    BiPoly poly() const { return BiPoly::variable(solved_) - rhs_; }
    std::string str() const { return poly().str(); }

    bool operator==(const PrimeDivisor& o) const {
        return solved_ == o.solved_ && rhs_ == o.rhs_;
    }
    bool operator<(const PrimeDivisor& o) const { return str() < o.str(); }

private:
    Var solved_;
    BiPoly rhs_;  // univariate in the other variable
};

// Parametrized curve (u -> t, v -> phi(t)) or (u -> psi(t), v -> t); the
// parameter keeps the name of the coordinate it replaces.
class ParamCurve {
public:
    ParamCurve(Var param, BiPoly other_rhs);

    Var param() const { return param_; }
    Var replaced() const { return other_var(param_); }
    const BiPoly& other_rhs() const { return other_rhs_; }
    std::string str() const {
        return std::string(var_name(replaced())) + "=" + other_rhs_.str();
    }

private:
    Var param_;
    BiPoly other_rhs_;  // univariate in param_
};

struct PlanePoint {
    GaussRat u0;
    GaussRat v0;
    std::string str() const { return "(" + u0.str() + ", " + v0.str() + ")"; }
};

// Univariate rational function: a RatFun whose entries involve only one
// variable, tagged with that variable.
struct UniRat {
    Var var;
    RatFun fn;

    UniRat(Var x, RatFun f);
    bool is_zero() const { return fn.is_zero(); }
    GaussRat evaluate_at(const GaussRat& t0) const;
    std::string str() const { return fn.str(); }
};

// ---- operations ----------------------------------------------------------

// Exact substitution along a curve; IdenticallyZeroDenominator when the
// denominator vanishes on the whole curve.
UniRat substitute(const RatFun& f, const ParamCurve& c);

// Order of vanishing along the divisor (negative for poles). Rejects 0.
int valuation(const BiPoly& f, const PrimeDivisor& p);
int valuation(const RatFun& f, const PrimeDivisor& p);

// Image in the residue field of p; NonUnitAtDivisor unless valuation is 0.
UniRat reduce_mod(const RatFun& f, const PrimeDivisor& p);

// Exact evaluation; PoleAtPoint when the denominator vanishes.
GaussRat evaluate(const RatFun& f, const PlanePoint& pt);

} // namespace brauer
