#pragma once

#include <map>
#include <vector>

#include "brauer/ratfun.hpp"

namespace brauer {

struct QSymbol;
class BrClass;

// Element of kappa(x)^x / squares for a residue field kappa(x) = Q(i)(var):
// a representative constant times a monic squarefree polynomial. The
// constant keeps the value the computation produced (so "-1" stays visible
// in tables); triviality and equality are decided with gauss_is_square.
struct SquareClass {
    Var var;
    GaussRat cst;   // nonzero representative constant
    BiPoly odd;     // monic squarefree, univariate in var (possibly 1)

    static SquareClass from(const UniRat& f);
    static SquareClass trivial_class(Var v) { return SquareClass{v, GaussRat(1), BiPoly(1)}; }

    bool trivial() const { return odd.is_one() && gauss_is_square(cst).has_value(); }

    // Same class modulo squares: 1 when trivial, else squares stripped
    // from the constant.
    SquareClass canonical() const;

    // Group law in kappa^x/kappa^x2 (same residue variable required).
    SquareClass operator*(const SquareClass& o) const;
    bool same_class(const SquareClass& o) const;

    // Representative printed as a single polynomial expression.
    std::string str() const { return odd.scaled(cst).str(); }
};

// Residue formula on a quaternion symbol at a prime divisor:
// class of (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} reduced into kappa(p).
SquareClass residue_symbol(const QSymbol& s, const PrimeDivisor& p);

// Nontrivial residues only, keyed by divisor.
using ResidueProfile = std::map<PrimeDivisor, SquareClass>;

// All candidate rows, including residues that canonicalize to trivial.
struct ResidueRow {
    PrimeDivisor divisor;
    SquareClass cls;
    bool trivial;
};

// Divisors supporting possible nontrivial residues: the total-degree-1
// factors of every entry's numerator and denominator. Throws
// UnsupportedDivisor when some factor does not split into such forms.
std::vector<PrimeDivisor> support_divisors(const BrClass& c);

std::vector<ResidueRow> residue_rows(const BrClass& c,
                                     const std::vector<PrimeDivisor>& extra = {});
ResidueProfile residue_profile(const BrClass& c,
                               const std::vector<PrimeDivisor>& extra = {});
bool is_unramified(const BrClass& c);

// ---- internals exposed for reuse and testing ------------------------------

// Gaussian-rational roots of a polynomial univariate in x. Exact: candidate
// roots come from divisor enumeration over Z[i] (norm-bounded scan) and are
// verified by substitution. Throws UnsupportedDivisor when coefficients are
// too large for the scan.
std::vector<GaussRat> gaussian_roots(const BiPoly& h, Var x);

// Split a squarefree polynomial into total-degree-1 prime divisors; throws
// UnsupportedDivisor when a non-constant unsplit part remains.
std::vector<PrimeDivisor> split_linear_divisors(const BiPoly& squarefree);

} // namespace brauer
