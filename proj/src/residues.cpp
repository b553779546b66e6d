#include "brauer/residues.hpp"

#include <algorithm>
#include <set>

#include "brauer/brclass.hpp"

namespace brauer {

namespace {

// representative constant with denominators cleared by a square
GaussRat integral_rep(const GaussRat& c) {
    mpz_class l = lcm(c.re.get_den(), c.im.get_den());
    Rat scale(l * l);
    return GaussRat(c.re * scale, c.im * scale);
}

SquareClass make_square_class(Var var, const GaussRat& cst, const BiPoly& odd) {
    return SquareClass{var, integral_rep(cst), odd};
}

} // namespace

SquareClass SquareClass::from(const UniRat& f) {
    if (f.is_zero()) throw ZeroInput("square class of zero");
    // f = num/den ~ num*den modulo squares
    OddPartResult parts = odd_part(f.fn.num() * f.fn.den());
    return make_square_class(f.var, parts.cst, parts.odd);
}

SquareClass SquareClass::canonical() const {
    SquareClass out = *this;
    if (gauss_is_square(out.cst).has_value()) out.cst = GaussRat(1);
    return out;
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (var != o.var) throw InternalError("square classes in different residue fields");
    BiPoly rep = odd.scaled(cst) * o.odd.scaled(o.cst);
    OddPartResult parts = odd_part(rep);
    return make_square_class(var, parts.cst, parts.odd);
}

bool SquareClass::same_class(const SquareClass& o) const {
    if (var != o.var) return false;
    if (odd != o.odd) return false;
    return gauss_is_square(cst * o.cst).has_value();
}

SquareClass residue_symbol(const QSymbol& s, const PrimeDivisor& p) {
    if (s.a.is_zero() || s.b.is_zero()) throw ZeroInput("residue of symbol with zero entry");
    long m = valuation(s.a, p);
    long n = valuation(s.b, p);
    if (m == 0 && n == 0) return SquareClass::trivial_class(p.residue_var());

    // unit = (-1)^{mn} a^n / b^m, kept as an unreduced fraction: full
    // gcd reduction is unnecessary, only the shared p-power must go
    auto up = [](unsigned e, const BiPoly& q) { return q.pow(e); };
    BiPoly num(1), den(1);
    if (n >= 0) {
        num *= up(static_cast<unsigned>(n), s.a.num());
        den *= up(static_cast<unsigned>(n), s.a.den());
    } else {
        num *= up(static_cast<unsigned>(-n), s.a.den());
        den *= up(static_cast<unsigned>(-n), s.a.num());
    }
    if (m >= 0) {
        num *= up(static_cast<unsigned>(m), s.b.den());
        den *= up(static_cast<unsigned>(m), s.b.num());
    } else {
        num *= up(static_cast<unsigned>(-m), s.b.num());
        den *= up(static_cast<unsigned>(-m), s.b.den());
    }
    if ((m * n) % 2 != 0) num = -num;

    BiPoly divisor = p.poly();
    int shared = std::min(valuation(num, p), valuation(den, p));
    for (int k = 0; k < shared; ++k) {
        num = *num.divide_exact(divisor);
        den = *den.divide_exact(divisor);
    }
    BiPoly num_bar = num.substitute(p.solved(), p.rhs());
    BiPoly den_bar = den.substitute(p.solved(), p.rhs());
    if (num_bar.is_zero() || den_bar.is_zero())
        throw NonUnitAtDivisor("residue unit degenerates at " + p.str());
    return SquareClass::from(UniRat(p.residue_var(), RatFun(num_bar, den_bar)));
}

// ---- Gaussian-rational root finding ---------------------------------------

namespace {

constexpr long kDivisorScanLimit = 2'000'000;

struct ZI {
    mpz_class re, im;
    bool operator<(const ZI& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};

// All Gaussian-integer divisors of z (up to the full set, associates
// included), found by a norm-bounded lattice scan.
std::vector<ZI> gaussian_divisors(const ZI& z) {
    mpz_class norm = z.re * z.re + z.im * z.im;
    if (norm == 0) throw InternalError("divisors of zero");
    if (norm > kDivisorScanLimit)
        throw UnsupportedDivisor("coefficient too large for divisor scan (norm " +
                                 norm.get_str() + ")");
    long n = norm.get_si();
    std::vector<ZI> out;
    long bound = 1;
    while (bound * bound < n) ++bound;
    for (long a = -bound; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
            long wn = a * a + b * b;
            if (wn == 0 || wn > n || n % wn != 0) continue;
            // (a+bi) | z  iff  conj(w)*z == 0 mod |w|^2 componentwise
            mpz_class xr = z.re * a + z.im * b;
            mpz_class xi = z.im * a - z.re * b;
            if (xr % wn == 0 && xi % wn == 0) out.push_back(ZI{a, b});
        }
    }
    return out;
}

} // namespace

std::vector<GaussRat> gaussian_roots(const BiPoly& h, Var x) {
    if (h.is_zero()) throw ZeroInput("roots of zero polynomial");
    if (!h.univariate_in(x)) throw InternalError("gaussian_roots: polynomial not univariate");

    std::vector<GaussRat> roots;
    BiPoly cur = h;

    // strip x^k
    while (!cur.is_zero() && cur.coeff_of(x, 0).is_zero()) {
        auto q = cur.divide_exact(BiPoly::variable(x));
        if (!q) throw InternalError("gaussian_roots: x does not divide");
        cur = *q;
        if (roots.empty()) roots.push_back(GaussRat(0));
    }
    int d = cur.degree(x);
    if (d <= 0) return roots;

    // clear denominators: coefficients in Z[i]
    mpz_class mult = 1;
    for (int k = 0; k <= d; ++k) {
        GaussRat c = cur.coeff_of(x, k).constant_value();
        mpz_class l = lcm(c.re.get_den(), c.im.get_den());
        mult = lcm(mult, l);
    }
    auto zcoeff = [&](int k) {
        GaussRat c = cur.coeff_of(x, k).constant_value();
        Rat scaled_re = c.re * Rat(mult);
        Rat scaled_im = c.im * Rat(mult);
        return ZI{scaled_re.get_num(), scaled_im.get_num()};
    };
    ZI trail = zcoeff(0);
    ZI lead = zcoeff(d);

    std::set<std::pair<Rat, Rat>> seen;
    std::vector<GaussRat> coeffs;
    for (int k = 0; k <= d; ++k) coeffs.push_back(cur.coeff_of(x, k).constant_value());
    for (const ZI& p : gaussian_divisors(trail)) {
        for (const ZI& q : gaussian_divisors(lead)) {
            GaussRat cand = GaussRat(Rat(p.re), Rat(p.im)) / GaussRat(Rat(q.re), Rat(q.im));
            if (!seen.insert({cand.re, cand.im}).second) continue;
            GaussRat val(0);
            for (int k = d; k >= 0; --k) val = val * cand + coeffs[k];
            if (val.is_zero()) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end(), gauss_rank_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---- linear divisor splitting ----------------------------------------------

namespace {

// Top homogeneous component.
BiPoly top_form(const BiPoly& p) {
    int total = 0;
    for (const auto& [m, c] : p.terms()) total = std::max(total, m.du + m.dv);
    BiPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.du + m.dv == total) out += BiPoly::monomial(m, c);
    return out;
}

} // namespace

std::vector<PrimeDivisor> split_linear_divisors(const BiPoly& squarefree) {
    BiPoly s = squarefree;
    if (s.is_zero()) throw ZeroInput("split of zero polynomial");
    std::vector<PrimeDivisor> found;
    if (s.is_constant()) return found;
    s = s.monic();

    auto remove_factor = [&](const PrimeDivisor& d) {
        auto q = s.divide_exact(d.poly());
        if (!q) throw InternalError("split: verified factor does not divide");
        s = q->monic();
        found.push_back(d);
    };

    // factors v - gamma (no u): roots of the u-content
    if (s.degree(Var::U) > 0) {
        BiPoly content;
        for (int k = 0; k <= s.degree(Var::U); ++k) {
            BiPoly ck = s.coeff_of(Var::U, k);
            if (ck.is_zero()) continue;
            content = content.is_zero() ? ck : poly_gcd(content, ck);
            if (content.is_constant()) break;
        }
        if (!content.is_constant())
            for (const GaussRat& r : gaussian_roots(content, Var::V))
                remove_factor(PrimeDivisor(Var::V, BiPoly(r)));
    } else {
        for (const GaussRat& r : gaussian_roots(s, Var::V))
            remove_factor(PrimeDivisor(Var::V, BiPoly(r)));
        if (!s.is_constant())
            throw UnsupportedDivisor("unsplit factor remains: " + s.str());
        std::sort(found.begin(), found.end());
        return found;
    }

    if (!s.is_constant() && s.degree(Var::U) == 0)
        throw UnsupportedDivisor("unsplit factor remains: " + s.str());

    if (!s.is_constant()) {
        // candidate slopes beta of factors u - (beta*v + gamma), from the
        // top homogeneous form specialized at v = 1
        if (!s.coeff_of(Var::U, s.degree(Var::U)).is_constant())
            throw UnsupportedDivisor("leading coefficient not constant: " + s.str());
        BiPoly tf = top_form(s).substitute(Var::V, BiPoly(1));
        std::vector<GaussRat> slopes = gaussian_roots(tf, Var::U);
        for (const GaussRat& beta : slopes) {
            if (s.is_constant()) break;
            // shear u -> u + beta*v sends u - (beta*v + gamma) to u - gamma
            BiPoly sheared = s.substitute(
                Var::U, BiPoly::variable(Var::U) + BiPoly::variable(Var::V).scaled(beta));
            BiPoly content;
            for (int k = 0; k <= sheared.degree(Var::V); ++k) {
                BiPoly ck = sheared.coeff_of(Var::V, k);
                if (ck.is_zero()) continue;
                content = content.is_zero() ? ck : poly_gcd(content, ck);
                if (content.is_constant()) break;
            }
            if (content.is_zero() || content.is_constant()) continue;
            for (const GaussRat& gamma : gaussian_roots(content, Var::U)) {
                BiPoly rhs = BiPoly::variable(Var::V).scaled(beta) + BiPoly(gamma);
                PrimeDivisor cand(Var::U, rhs);
                if (s.substitute(Var::U, rhs).is_zero()) remove_factor(cand);
            }
        }
    }

    if (!s.is_constant())
        throw UnsupportedDivisor("unsplit factor remains: " + s.str());
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<PrimeDivisor> support_divisors(const BrClass& c) {
    std::set<PrimeDivisor> divisors;
    for (const QSymbol& s : c.symbols()) {
        for (const RatFun* entry : {&s.a, &s.b}) {
            if (entry->is_zero()) throw ZeroInput("support of class with zero entry");
            for (const BiPoly* part : {&entry->num(), &entry->den()}) {
                if (part->is_constant()) continue;
                for (const PrimeDivisor& p : split_linear_divisors(squarefree_part(*part)))
                    divisors.insert(p);
            }
        }
    }
    return {divisors.begin(), divisors.end()};
}

std::vector<ResidueRow> residue_rows(const BrClass& c, const std::vector<PrimeDivisor>& extra) {
    std::set<PrimeDivisor> divisors;
    for (const PrimeDivisor& p : support_divisors(c)) divisors.insert(p);
    for (const PrimeDivisor& p : extra) divisors.insert(p);

    std::vector<ResidueRow> rows;
    for (const PrimeDivisor& p : divisors) {
        SquareClass total = SquareClass::trivial_class(p.residue_var());
        bool first = true;
        for (const QSymbol& s : c.symbols()) {
            SquareClass r = residue_symbol(s, p);
            total = first ? r : total * r;
            first = false;
        }
        rows.push_back(ResidueRow{p, total, total.trivial()});
    }
    return rows;
}

ResidueProfile residue_profile(const BrClass& c, const std::vector<PrimeDivisor>& extra) {
    ResidueProfile profile;
    for (const ResidueRow& row : residue_rows(c, extra))
        if (!row.trivial) profile.emplace(row.divisor, row.cls);
    return profile;
}

bool is_unramified(const BrClass& c) { return residue_profile(c).empty(); }

} // namespace brauer
