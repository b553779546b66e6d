#pragma once

#include <array>
#include <map>
#include <string>

#include "brauer/gaussrat.hpp"

namespace brauer {

// Sparse polynomial in the four bundle coordinates s, t, u, v; only what
// the explicit chart needs.
class Poly4 {
public:
    Poly4() = default;
    Poly4(long c) { add({0, 0, 0, 0}, GaussRat(c)); }  // NOLINT
    static Poly4 coordinate(int idx);                  // 0:s 1:t 2:u 3:v

    bool is_zero() const { return terms_.empty(); }
    Poly4 operator+(const Poly4& o) const;
    Poly4 operator-(const Poly4& o) const;
    Poly4 operator*(const Poly4& o) const;
    bool operator==(const Poly4& o) const { return terms_ == o.terms_; }

    // replace one coordinate by a polynomial
    Poly4 substitute(int idx, const Poly4& image) const;
    GaussRat evaluate(const std::array<GaussRat, 4>& x) const;

    std::string str() const;

private:
    void add(std::array<int, 4> m, const GaussRat& c);
    std::map<std::array<int, 4>, GaussRat> terms_;
};

// Explicit chart between affine 3-space with coordinates (s, t, u) and the
// hypersurface s^2 - u*t^2 - v = 1: forward fills in v, backward projects.
struct AffineChart {
    Poly4 v_image;       // s^2 - u*t^2 - 1
    Poly4 hypersurface;  // s^2 - u*t^2 - v - 1

    std::array<GaussRat, 4> forward(const std::array<GaussRat, 3>& a) const;
    std::array<GaussRat, 3> backward(const std::array<GaussRat, 4>& x) const;

    // hypersurface with v replaced by v_image; identically zero
    Poly4 verification_poly() const { return hypersurface.substitute(3, v_image); }

    std::string forward_str() const;
    std::string backward_str() const { return "(s, t, u, v) -> (s, t, u)"; }
    std::string equation_str() const { return hypersurface.str(); }
};

// The chart with both maps and the exact composition identity.
AffineChart model_bundle_chart();

} // namespace brauer
