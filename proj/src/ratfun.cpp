#include "brauer/ratfun.hpp"

namespace brauer {

RatFun::RatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw CalcError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    BiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    GaussRat lc = den_.leading_coeff();
    if (lc != GaussRat(1)) {
        GaussRat inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun RatFun::operator-() const {
    RatFun out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw CalcError("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inv() const {
    if (is_zero()) throw CalcError("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFun acc(1);
    RatFun base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

PrimeDivisor::PrimeDivisor(Var solved, BiPoly rhs) : solved_(solved), rhs_(std::move(rhs)) {
    if (!rhs_.univariate_in(other_var(solved))) {
        throw UnsupportedDivisor("divisor right-hand side must only involve " +
                                 std::string(var_name(other_var(solved))));
    }
}

PrimeDivisor PrimeDivisor::from_poly(const BiPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw UnsupportedDivisor("divisor polynomial must be non-constant");
    for (Var x : {Var::U, Var::V}) {
        if (p.degree(x) != 1) continue;
        BiPoly lead = p.coeff_of(x, 1);
        if (!lead.is_constant()) continue;
        BiPoly rest = p - BiPoly::variable(x) * lead;
        BiPoly rhs = rest.scaled(-lead.constant_value().inv());
        if (!rhs.univariate_in(other_var(x))) continue;
        return PrimeDivisor(x, rhs);
    }
    throw UnsupportedDivisor("divisor is not monic-linear in one variable: " + p.str());
}

ParamCurve::ParamCurve(Var param, BiPoly other_rhs)
    : param_(param), other_rhs_(std::move(other_rhs)) {
    if (!other_rhs_.univariate_in(param))
        throw CalcError("curve substitution must only involve the parameter variable");
}

UniRat::UniRat(Var x, RatFun f) : var(x), fn(std::move(f)) {
    if (!fn.univariate_in(x))
        throw InternalError("UniRat entries must be univariate in " +
                            std::string(var_name(x)));
}

GaussRat UniRat::evaluate_at(const GaussRat& t0) const {
    GaussRat u0 = var == Var::U ? t0 : GaussRat(0);
    GaussRat v0 = var == Var::V ? t0 : GaussRat(0);
    GaussRat d = fn.den().evaluate(u0, v0);
    if (d.is_zero()) throw PoleAtPoint("pole of " + fn.str() + " at " +
                                       std::string(var_name(var)) + "=" + t0.str());
    return fn.num().evaluate(u0, v0) / d;
}

UniRat substitute(const RatFun& f, const ParamCurve& c) {
    Var t = c.param();
    BiPoly tt = BiPoly::variable(t);
    BiPoly img_u = t == Var::U ? tt : c.other_rhs();
    BiPoly img_v = t == Var::V ? tt : c.other_rhs();
    BiPoly den = f.den().substitute(img_u, img_v);
    if (den.is_zero())
        throw IdenticallyZeroDenominator("denominator of " + f.str() +
                                         " vanishes along " + c.str());
    BiPoly num = f.num().substitute(img_u, img_v);
    return UniRat(t, RatFun(num, den));
}

int valuation(const BiPoly& f, const PrimeDivisor& p) {
    if (f.is_zero()) throw ZeroInput("valuation: zero input");
    BiPoly cur = f;
    BiPoly divisor = p.poly();
    int count = 0;
    while (true) {
        BiPoly image = cur.substitute(p.solved(), p.rhs());
        if (!image.is_zero()) return count;
        auto q = cur.divide_exact(divisor);
        if (!q) throw InternalError("valuation: root without factor");
        cur = *q;
        ++count;
    }
}

int valuation(const RatFun& f, const PrimeDivisor& p) {
    if (f.is_zero()) throw ZeroInput("valuation: zero input");
    // num and den are coprime, so at most one carries a power of p
    return valuation(f.num(), p) - valuation(f.den(), p);
}

UniRat reduce_mod(const RatFun& f, const PrimeDivisor& p) {
    if (f.is_zero()) throw ZeroInput("reduce_mod: zero input");
    if (valuation(f, p) != 0)
        throw NonUnitAtDivisor(f.str() + " is not a unit at " + p.str());
    BiPoly num = f.num().substitute(p.solved(), p.rhs());
    BiPoly den = f.den().substitute(p.solved(), p.rhs());
    return UniRat(p.residue_var(), RatFun(num, den));
}

GaussRat evaluate(const RatFun& f, const PlanePoint& pt) {
    GaussRat d = f.den().evaluate(pt.u0, pt.v0);
    if (d.is_zero())
        throw PoleAtPoint("pole of " + f.str() + " at " + pt.str());
    return f.num().evaluate(pt.u0, pt.v0) / d;
}

} // namespace brauer
