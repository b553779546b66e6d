#include "brauer/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

GaussRat BiPoly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) throw InternalError("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int BiPoly::degree(Var x) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(x));
    return d;
}

Mono BiPoly::leading_mono() const {
    if (terms_.empty()) throw InternalError("leading_mono of zero polynomial");
    return terms_.rbegin()->first;
}

GaussRat BiPoly::leading_coeff() const {
    if (terms_.empty()) throw InternalError("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

GaussRat BiPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

BiPoly BiPoly::coeff_of(Var x, int k) const {
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.deg(x) != k) continue;
        Mono rest = m;
        (x == Var::U ? rest.du : rest.dv) = 0;
        out.set(rest, c);
    }
    return out;
}

void BiPoly::add_term(Mono m, const GaussRat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            out.add_term(Mono{m1.du + m2.du, m1.dv + m2.dv}, c1 * c2);
    return out;
}

BiPoly BiPoly::scaled(const GaussRat& c) const {
    BiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly acc(1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

BiPoly BiPoly::derivative(Var x) const {
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        int d = m.deg(x);
        if (d == 0) continue;
        Mono dm = m;
        (x == Var::U ? dm.du : dm.dv) -= 1;
        out.add_term(dm, c * GaussRat(d));
    }
    return out;
}

BiPoly BiPoly::monic() const {
    return scaled(leading_coeff().inv());
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& d) const {
    if (d.is_zero()) throw CalcError("division by zero polynomial");
    BiPoly rem = *this;
    BiPoly quot;
    const Mono dm = d.leading_mono();
    const GaussRat dc = d.leading_coeff();
    while (!rem.is_zero()) {
        Mono rm = rem.leading_mono();
        if (!dm.divides(rm)) return std::nullopt;
        Mono qm{rm.du - dm.du, rm.dv - dm.dv};
        GaussRat qc = rem.leading_coeff() / dc;
        BiPoly t = monomial(qm, qc);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

BiPoly BiPoly::substitute(const BiPoly& for_u, const BiPoly& for_v) const {
    // powers cached up to the needed degree
    std::vector<BiPoly> pu{BiPoly(1)}, pv{BiPoly(1)};
    auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
        while ((int)cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    BiPoly out;
    for (const auto& [m, c] : terms_)
        out += (power(pu, for_u, m.du) * power(pv, for_v, m.dv)).scaled(c);
    return out;
}

BiPoly BiPoly::substitute(Var x, const BiPoly& image) const {
    if (x == Var::U) return substitute(image, variable(Var::V));
    return substitute(variable(Var::U), image);
}

GaussRat BiPoly::evaluate(const GaussRat& u0, const GaussRat& v0) const {
    GaussRat out(0);
    for (const auto& [m, c] : terms_) out += c * u0.pow(m.du) * v0.pow(m.dv);
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        const GaussRat& c = it->second;

        std::string mono;
        if (m.du > 0) {
            mono += "u";
            if (m.du > 1) mono += "^" + std::to_string(m.du);
        }
        if (m.dv > 0) {
            if (!mono.empty()) mono += "*";
            mono += "v";
            if (m.dv > 1) mono += "^" + std::to_string(m.dv);
        }

        bool negative = false;
        std::string cs;
        if (c.is_rational()) {
            Rat a = c.re;
            negative = a < 0;
            Rat mag = negative ? Rat(-a) : a;
            if (mono.empty()) {
                cs = rat_str(mag);
            } else if (mag != 1) {
                cs = rat_str(mag) + "*";
            }
        } else if (mono.empty()) {
            // a bare constant needs parentheses only mid-expression
            cs = first ? c.str() : "(" + c.str() + ")";
        } else {
            // full Q(i) coefficient: keep it in parentheses, sign inside
            cs = "(" + c.str() + ")*";
        }

        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << cs << mono;
    }
    return os.str();
}

namespace {

// ---- gcd machinery -------------------------------------------------------

// Euclid with monic normalization for polynomials in a single variable.
BiPoly gcd_univariate(BiPoly a, BiPoly b, Var x) {
    while (!b.is_zero()) {
        // remainder of a by b in x, coefficients in Q(i)
        int db = b.degree(x);
        BiPoly r = a;
        while (!r.is_zero() && r.degree(x) >= db) {
            int dr = r.degree(x);
            GaussRat lr = r.coeff_of(x, dr).constant_value();
            GaussRat lb = b.coeff_of(x, db).constant_value();
            Mono shift = x == Var::U ? Mono{dr - db, 0} : Mono{0, dr - db};
            r -= b * BiPoly::monomial(shift, lr / lb);
        }
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

// gcd over Q(i) of all coefficients of f viewed in (k[y])[x]; "content" in
// the main-variable sense, a polynomial in y.
BiPoly content_in(const BiPoly& f, Var x) {
    Var y = other_var(x);
    BiPoly c;
    for (int k = 0; k <= f.degree(x); ++k) {
        BiPoly ck = f.coeff_of(x, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_univariate(c, ck, y);
        if (c.is_constant()) return BiPoly(1);
    }
    return c.monic();
}

// Pseudo-remainder of f by g in the variable x (coefficients in k[y]).
BiPoly pseudo_rem(BiPoly f, const BiPoly& g, Var x) {
    int dg = g.degree(x);
    BiPoly lg = g.coeff_of(x, dg);
    while (!f.is_zero() && f.degree(x) >= dg) {
        int df = f.degree(x);
        BiPoly lf = f.coeff_of(x, df);
        Mono shift = x == Var::U ? Mono{df - dg, 0} : Mono{0, df - dg};
        f = f * lg - g * lf * BiPoly::monomial(shift, GaussRat(1));
    }
    return f;
}

} // namespace

BiPoly poly_gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() && g.is_zero()) throw ZeroInput("poly_gcd: both inputs zero");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return BiPoly(1);

    if (f.univariate_in(Var::U) && g.univariate_in(Var::U))
        return gcd_univariate(f, g, Var::U);
    if (f.univariate_in(Var::V) && g.univariate_in(Var::V))
        return gcd_univariate(f, g, Var::V);

    // general case: primitive PRS in u over Q(i)[v]
    const Var x = Var::U;
    BiPoly cf = content_in(f, x);
    BiPoly cg = content_in(g, x);
    BiPoly cont = (cf.is_constant() || cg.is_constant())
                      ? BiPoly(1)
                      : gcd_univariate(cf, cg, Var::V);

    auto primitive = [&](const BiPoly& p) {
        BiPoly c = content_in(p, x);
        auto q = p.divide_exact(c);
        if (!q) throw InternalError("poly_gcd: content does not divide");
        return *q;
    };

    BiPoly a = primitive(f);
    BiPoly b = primitive(g);
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    while (!b.is_zero() && b.degree(x) > 0) {
        BiPoly r = pseudo_rem(a, b, x);
        a = b;
        b = r.is_zero() ? r : primitive(r);
    }
    BiPoly result = b.is_zero() ? a : BiPoly(1);  // nonzero deg-0 remainder => coprime
    return (cont * result).monic();
}

BiPoly squarefree_part(const BiPoly& f) {
    if (f.is_zero()) throw ZeroInput("squarefree_part: zero input");
    if (f.is_constant()) return BiPoly(1);
    BiPoly fu = f.derivative(Var::U);
    BiPoly fv = f.derivative(Var::V);
    BiPoly g = poly_gcd(poly_gcd(f, fu), fv);
    auto s = f.divide_exact(g);
    if (!s) throw InternalError("squarefree_part: gcd does not divide");
    return s->monic();
}

OddPartResult odd_part(const BiPoly& f) {
    if (f.is_zero()) throw ZeroInput("odd_part: zero input");
    if (f.is_constant()) return {BiPoly(1), BiPoly(1), f.constant_value()};

    // chain F_k = prod a_i^{max(i-k,0)}; s_k = F_k/F_{k+1} = prod_{i>k} a_i
    std::vector<BiPoly> chain{f.monic()};
    while (!chain.back().is_constant()) {
        const BiPoly& fk = chain.back();
        BiPoly g = poly_gcd(poly_gcd(fk, fk.derivative(Var::U)), fk.derivative(Var::V));
        chain.push_back(g);
    }
    std::vector<BiPoly> s;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        auto q = chain[k].divide_exact(chain[k + 1]);
        if (!q) throw InternalError("odd_part: chain division failed");
        s.push_back(q->monic());
    }
    s.push_back(BiPoly(1));

    BiPoly odd(1), wit(1);
    for (std::size_t j = 1; j < s.size(); ++j) {
        auto a = s[j - 1].divide_exact(s[j]);
        if (!a) throw InternalError("odd_part: factor division failed");
        BiPoly aj = a->monic();
        if (j % 2 == 1) odd *= aj;
        wit *= aj.pow(static_cast<unsigned>(j / 2));
    }
    auto cst = f.divide_exact(odd * wit.pow(2));
    if (!cst || !cst->is_constant())
        throw InternalError("odd_part: reconstruction is not constant");
    return {odd, wit, cst->constant_value()};
}

} // namespace brauer
