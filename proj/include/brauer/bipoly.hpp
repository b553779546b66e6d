#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/gaussrat.hpp"

namespace brauer {

enum class Var { U, V };

inline Var other_var(Var x) { return x == Var::U ? Var::V : Var::U; }
inline const char* var_name(Var x) { return x == Var::U ? "u" : "v"; }

// Exponent pair; ordered lexicographically with u > v, so the map's last
// entry is the leading term.
struct Mono {
    int du = 0;
    int dv = 0;
    bool operator<(const Mono& o) const {
        if (du != o.du) return du < o.du;
        return dv < o.dv;
    }
    bool operator==(const Mono& o) const { return du == o.du && dv == o.dv; }
    int deg(Var x) const { return x == Var::U ? du : dv; }
    bool divides(const Mono& o) const { return du <= o.du && dv <= o.dv; }
};

// Sparse bivariate polynomial over Q(i). No zero coefficients are stored;
// the zero polynomial is the empty map.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(long c) { set(Mono{0, 0}, GaussRat(c)); }        // NOLINT
    BiPoly(const GaussRat& c) { set(Mono{0, 0}, c); }       // NOLINT

    static BiPoly variable(Var x) {
        BiPoly p;
        p.set(x == Var::U ? Mono{1, 0} : Mono{0, 1}, GaussRat(1));
        return p;
    }
    static BiPoly monomial(Mono m, const GaussRat& c) {
        BiPoly p;
        p.set(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    GaussRat constant_value() const;  // requires is_constant()
    bool is_one() const { return is_constant() && constant_value() == GaussRat(1); }

    // -1 for the zero polynomial.
    int degree(Var x) const;
    bool univariate_in(Var x) const { return degree(other_var(x)) <= 0; }

    Mono leading_mono() const;        // requires nonzero
    GaussRat leading_coeff() const;   // requires nonzero
    GaussRat coeff(Mono m) const;

    // Coefficient of x^k as a polynomial in the other variable.
    BiPoly coeff_of(Var x, int k) const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly scaled(const GaussRat& c) const;
    BiPoly pow(unsigned e) const;
    BiPoly derivative(Var x) const;

    // Whole polynomial divided by the leading coefficient.
    BiPoly monic() const;  // requires nonzero

    // Exact quotient, or nullopt when the divisor does not divide exactly.
    std::optional<BiPoly> divide_exact(const BiPoly& d) const;

    BiPoly substitute(const BiPoly& for_u, const BiPoly& for_v) const;
    BiPoly substitute(Var x, const BiPoly& image) const;
    GaussRat evaluate(const GaussRat& u0, const GaussRat& v0) const;

    // Canonical rendering: monomials sorted leading-first (lex, u > v).
    std::string str() const;

    const std::map<Mono, GaussRat>& terms() const { return terms_; }

private:
    void set(Mono m, const GaussRat& c) {
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = c;
    }
    void add_term(Mono m, const GaussRat& c);

    std::map<Mono, GaussRat> terms_;
};

// GCD normalized monic in the canonical order; gcd(f, 0) = monic f.
// Rejects two zero inputs. Primitive PRS over one variable at a time.
BiPoly poly_gcd(const BiPoly& f, const BiPoly& g);

// Squarefree/odd decomposition: f = cst * odd * even_witness^2 with odd
// squarefree and monic, even_witness monic. Rejects f == 0.
struct OddPartResult {
    BiPoly odd;
    BiPoly even_witness;
    GaussRat cst;
};
OddPartResult odd_part(const BiPoly& f);

// Product of the distinct non-constant prime factors, monic.
BiPoly squarefree_part(const BiPoly& f);

} // namespace brauer
