#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "brauer/errors.hpp"

namespace brauer {

// Exact rational; mpq_class keeps the reduced / positive-denominator
// invariant on every operation.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const mpz_class& num, const mpz_class& den);

// Reduced fraction, "p" or "p/q".
std::string rat_str(const Rat& r);

// Exact square test over Q; the root (>= 0) is written to *root when given.
bool rat_is_square(const Rat& r, Rat* root = nullptr);

// Element of Q(i), componentwise reduced.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}        // NOLINT
    GaussRat(const Rat& r) : re(r), im(0) {}  // NOLINT
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat imag_unit() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const;

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    GaussRat inv() const;
    GaussRat pow(long e) const;

    // Canonical text form, e.g. "3", "-1/2", "i", "2*i", "1/2+3/4*i", "2-i".
    std::string str() const;
};

// Total order used wherever a deterministic ranking of Q(i) values is
// needed (witness minimality, canonical sort keys). Not compatible with
// field structure; zero sorts after every nonzero value.
bool gauss_rank_less(const GaussRat& a, const GaussRat& b);

// Exact square decision in Q(i). Returns a witness w with w*w == c, or
// nullopt when c is not a square. Rejects c == 0.
//
// With c = a + bi: for b == 0, c is a square iff a or -a is a rational
// square; for b != 0, c is a square iff a^2 + b^2 is a rational square N
// and (a + sqrt(N))/2 is a rational square.
std::optional<GaussRat> gauss_is_square(const GaussRat& c);

} // namespace brauer
