#pragma once

#include <array>
#include <optional>

#include "brauer/brclass.hpp"

namespace brauer {

using Mat3 = std::array<std::array<RatFun, 3>, 3>;

// Smooth ternary quadratic form as a symmetric Gram matrix with RatFun
// entries (cross coefficients already halved).
class TernaryForm {
public:
    explicit TernaryForm(Mat3 gram);
    static TernaryForm diagonal(RatFun a, RatFun b, RatFun c);

    const Mat3& gram() const { return m_; }
    bool is_diagonal() const;
    bool is_constant() const;
    RatFun determinant() const;

    RatFun apply(const std::array<RatFun, 3>& x) const;

    // Rendering in homogeneous coordinates S, T, R.
    std::string str() const;

private:
    Mat3 m_;
};

struct DiagonalForm {
    std::array<RatFun, 3> d;
    Mat3 basis;  // columns: basis^T * gram * basis == diag(d)
};

// Symmetric Gaussian congruence; exact change of basis. DegenerateForm when
// the determinant vanishes.
DiagonalForm diagonalize(const TernaryForm& q);

// Projective point, not all coordinates zero.
struct ConicPoint {
    std::array<RatFun, 3> coords;
    std::string str() const {
        return "(" + coords[0].str() + ", " + coords[1].str() + ", " + coords[2].str() + ")";
    }
};

// The quaternion symbol of the conic a X^2 + b Y^2 + c T^2 = 0, fixed as
// (-ab, -ac) and normalized. Isotropy of the form is equivalent to
// triviality of the symbol.
QSymbol symbol_of_form(const DiagonalForm& d);
QSymbol symbol_of_form(const RatFun& a, const RatFun& b, const RatFun& c);

// Certified comparison of two conics via their symbols.
EqualityCheck conics_isomorphic(const TernaryForm& q1, const TernaryForm& q2,
                                const ParamCurve& d, const GaussRat& t0,
                                long height_bound);

// Exhaustive search for a projective zero with Gaussian-integer coordinates
// of norm <= height_bound, constant forms only. Returns the minimal witness
// in the fixed total order: shells by max coordinate norm, then
// lexicographic under the Q(i) ranking.
std::optional<ConicPoint> point_search(const TernaryForm& q, long height_bound);

// Pencil-of-lines parametrization through a point of the conic. Each
// coordinate is a homogeneous quadratic in the two parameters (s, t),
// stored as coefficient triples [s^2, s*t, t^2].
struct Parametrization {
    std::array<std::array<RatFun, 3>, 3> coords;
    std::string str() const;
};

// PointNotOnConic when p does not satisfy q exactly. The result is verified:
// substituting into q yields the zero polynomial.
Parametrization parametrize(const TernaryForm& q, const ConicPoint& p);

} // namespace brauer
