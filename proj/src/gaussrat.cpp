#include "brauer/gaussrat.hpp"

#include <sstream>

namespace brauer {

Rat make_rat(long num, long den) {
    if (den == 0) throw CalcError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw CalcError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

bool rat_is_square(const Rat& r, Rat* root) {
    if (r < 0) return false;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root != nullptr) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = make_rat(rn, rd);
    }
    return true;
}

GaussRat GaussRat::inv() const {
    if (is_zero()) throw CalcError("inverse of zero in Q(i)");
    Rat n = norm();
    return GaussRat(re / n, -im / n);
}

GaussRat GaussRat::operator/(const GaussRat& o) const { return *this * o.inv(); }

GaussRat GaussRat::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    GaussRat acc(1);
    GaussRat base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::string imag;
    if (im == 1) {
        imag = "i";
    } else if (im == -1) {
        imag = "-i";
    } else {
        imag = rat_str(im) + "*i";
    }
    if (re == 0) return imag;
    if (im > 0) return rat_str(re) + "+" + imag;
    // negative imaginary part already carries its sign
    return rat_str(re) + imag;
}

bool gauss_rank_less(const GaussRat& a, const GaussRat& b) {
    if (a == b) return false;
    if (a.is_zero()) return false;  // zero is the maximum
    if (b.is_zero()) return true;
    Rat na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re > b.re;
    return a.im > b.im;
}

std::optional<GaussRat> gauss_is_square(const GaussRat& c) {
    if (c.is_zero()) throw ZeroInput("gauss_is_square: zero input");
    std::optional<GaussRat> w;
    if (c.im == 0) {
        Rat root;
        if (c.re > 0 && rat_is_square(c.re, &root)) {
            w = GaussRat(root, Rat(0));
        } else if (c.re < 0 && rat_is_square(-c.re, &root)) {
            w = GaussRat(Rat(0), root);
        }
    } else {
        Rat n;
        if (!rat_is_square(c.re * c.re + c.im * c.im, &n)) return std::nullopt;
        Rat half = (c.re + n) / 2;
        Rat p;
        if (!rat_is_square(half, &p)) return std::nullopt;
        // half > 0 here: n > |re| whenever im != 0
        Rat q = c.im / (2 * p);
        w = GaussRat(p, q);
    }
    if (!w) return std::nullopt;
    // deterministic sign: re > 0, or re == 0 and im > 0
    if (w->re < 0 || (w->re == 0 && w->im < 0)) *w = -*w;
    if (!(*w * *w == c)) throw InternalError("gauss_is_square: witness check failed");
    return w;
}

} // namespace brauer
