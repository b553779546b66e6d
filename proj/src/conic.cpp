#include "brauer/conic.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace brauer {

TernaryForm::TernaryForm(Mat3 gram) : m_(std::move(gram)) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (m_[i][j] != m_[j][i]) throw CalcError("Gram matrix must be symmetric");
    if (determinant().is_zero()) throw DegenerateForm("form has zero determinant");
}

TernaryForm TernaryForm::diagonal(RatFun a, RatFun b, RatFun c) {
    Mat3 m;
    for (auto& row : m) row.fill(RatFun(0));
    m[0][0] = std::move(a);
    m[1][1] = std::move(b);
    m[2][2] = std::move(c);
    return TernaryForm(std::move(m));
}

bool TernaryForm::is_diagonal() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !m_[i][j].is_zero()) return false;
    return true;
}

bool TernaryForm::is_constant() const {
    for (const auto& row : m_)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

RatFun TernaryForm::determinant() const {
    const Mat3& a = m_;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

RatFun TernaryForm::apply(const std::array<RatFun, 3>& x) const {
    RatFun acc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc = acc + m_[i][j] * x[i] * x[j];
    return acc;
}

std::string TernaryForm::str() const {
    static const char* names[3] = {"S", "T", "R"};
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const RatFun& c, const std::string& mono) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << mono;
    };
    for (int i = 0; i < 3; ++i) emit(m_[i][i], std::string(names[i]) + "^2");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            emit(m_[i][j] * RatFun(2), std::string(names[i]) + "*" + names[j]);
    if (first) os << "0";
    return os.str();
}

namespace {

Mat3 identity3() {
    Mat3 p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i][j] = RatFun(i == j ? 1 : 0);
    return p;
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RatFun acc(0);
            for (int k = 0; k < 3; ++k) acc = acc + a[i][k] * b[k][j];
            out[i][j] = acc;
        }
    return out;
}

Mat3 transpose(const Mat3& a) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = a[j][i];
    return out;
}

// column operation col_j += col_i * f, mirrored on rows; P tracks columns
void add_col(Mat3& a, Mat3& p, int j, int i, const RatFun& f) {
    for (int r = 0; r < 3; ++r) a[r][j] = a[r][j] + a[r][i] * f;
    for (int c = 0; c < 3; ++c) a[j][c] = a[j][c] + a[i][c] * f;
    for (int r = 0; r < 3; ++r) p[r][j] = p[r][j] + p[r][i] * f;
}

void swap_cols(Mat3& a, Mat3& p, int i, int j) {
    for (int r = 0; r < 3; ++r) std::swap(a[r][i], a[r][j]);
    for (int c = 0; c < 3; ++c) std::swap(a[i][c], a[j][c]);
    for (int r = 0; r < 3; ++r) std::swap(p[r][i], p[r][j]);
}

} // namespace

DiagonalForm diagonalize(const TernaryForm& q) {
    Mat3 a = q.gram();
    Mat3 p = identity3();

    for (int k = 0; k < 3; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int l = k + 1; l < 3; ++l)
                if (!a[l][l].is_zero()) { pivot = l; break; }
            if (pivot >= 0) {
                swap_cols(a, p, k, pivot);
            } else {
                // all remaining diagonal entries vanish; use the smallest
                // off-diagonal entry in index order (char != 2 move)
                int bi = -1, bj = -1;
                for (int i = k; i < 3 && bi < 0; ++i)
                    for (int j = i + 1; j < 3 && bi < 0; ++j)
                        if (!a[i][j].is_zero()) { bi = i; bj = j; }
                if (bi < 0) throw DegenerateForm("form collapses during diagonalization");
                add_col(a, p, bi, bj, RatFun(1));  // a[bi][bi] becomes 2*a[bi][bj]
                if (bi != k) swap_cols(a, p, k, bi);
            }
        }
        for (int j = k + 1; j < 3; ++j) {
            if (a[k][j].is_zero()) continue;
            add_col(a, p, j, k, -(a[k][j] / a[k][k]));
        }
    }

    DiagonalForm out;
    out.d = {a[0][0], a[1][1], a[2][2]};
    out.basis = p;

    Mat3 check = matmul(matmul(transpose(p), q.gram()), p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const RatFun& want = i == j ? out.d[i] : RatFun(0);
            if (check[i][j] != want)
                throw InternalError("diagonalize: congruence check failed");
        }
    return out;
}

QSymbol symbol_of_form(const RatFun& a, const RatFun& b, const RatFun& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw ZeroInput("diagonal form with zero coefficient");
    return normalize_symbol(QSymbol(-(a * b), -(a * c)));
}

QSymbol symbol_of_form(const DiagonalForm& d) {
    return symbol_of_form(d.d[0], d.d[1], d.d[2]);
}

EqualityCheck conics_isomorphic(const TernaryForm& q1, const TernaryForm& q2,
                                const ParamCurve& d, const GaussRat& t0,
                                long height_bound) {
    QSymbol s1 = symbol_of_form(diagonalize(q1));
    QSymbol s2 = symbol_of_form(diagonalize(q2));
    return class_equal_certified(BrClass(s1), BrClass(s2), d, t0, height_bound);
}

namespace {

struct RankedGauss {
    GaussRat value;
    long norm;
    GaussRat square;
};

// Nonzero Gaussian integers of norm <= bound in ranking order, then zero.
std::vector<RankedGauss> ranked_gaussians(long bound) {
    std::vector<RankedGauss> out;
    long edge = 1;
    while (edge * edge < bound) ++edge;
    for (long a = -edge; a <= edge; ++a)
        for (long b = -edge; b <= edge; ++b) {
            long n = a * a + b * b;
            if (n == 0 || n > bound) continue;
            GaussRat g(make_rat(a), make_rat(b));
            out.push_back(RankedGauss{g, n, g * g});
        }
    std::sort(out.begin(), out.end(), [](const RankedGauss& x, const RankedGauss& y) {
        return gauss_rank_less(x.value, y.value);
    });
    out.push_back(RankedGauss{GaussRat(0), 0, GaussRat(0)});
    return out;
}

} // namespace

std::optional<ConicPoint> point_search(const TernaryForm& q, long height_bound) {
    if (!q.is_constant())
        throw CalcError("point search requires a constant form");
    if (height_bound <= 0) throw CalcError("height bound must be positive");

    GaussRat g[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g[i][j] = q.gram()[i][j].constant_value();
    const bool diag = q.is_diagonal();

    std::vector<RankedGauss> all = ranked_gaussians(height_bound);

    auto value = [&](const RankedGauss& x, const RankedGauss& y, const RankedGauss& t) {
        if (diag)
            return g[0][0] * x.square + g[1][1] * y.square + g[2][2] * t.square;
        GaussRat acc(0);
        const GaussRat c[3] = {x.value, y.value, t.value};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += g[i][j] * c[i] * c[j];
        return acc;
    };

    for (long shell = 1; shell <= height_bound; ++shell) {
        for (const RankedGauss& x : all) {
            if (x.norm > shell) continue;
            for (const RankedGauss& y : all) {
                if (y.norm > shell) continue;
                for (const RankedGauss& t : all) {
                    if (t.norm > shell) continue;
                    long top = std::max({x.norm, y.norm, t.norm});
                    if (top != shell) continue;  // earlier shell already covered it
                    if (value(x, y, t).is_zero())
                        return ConicPoint{{RatFun(x.value), RatFun(y.value), RatFun(t.value)}};
                }
            }
        }
    }
    return std::nullopt;
}

std::string Parametrization::str() const {
    static const char* names[3] = {"S", "T", "R"};
    static const char* monos[3] = {"s^2", "s*t", "t^2"};
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        if (i > 0) os << "; ";
        os << names[i] << "(s,t) = ";
        bool first = true;
        for (int k = 0; k < 3; ++k) {
            if (coords[i][k].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coords[i][k].str() << ")*" << monos[k];
        }
        if (first) os << "0";
    }
    return os.str();
}

Parametrization parametrize(const TernaryForm& q, const ConicPoint& p) {
    bool all_zero = true;
    for (const auto& c : p.coords) all_zero = all_zero && c.is_zero();
    if (all_zero) throw CalcError("projective point must be nonzero");
    if (!q.apply(p.coords).is_zero())
        throw PointNotOnConic("point " + p.str() + " does not lie on " + q.str());

    // complete the point with the two standard basis vectors away from its
    // first nonzero coordinate
    int skip = 0;
    while (p.coords[skip].is_zero()) ++skip;
    std::array<std::array<RatFun, 3>, 2> basis;
    int pos = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == skip) continue;
        basis[pos] = {RatFun(0), RatFun(0), RatFun(0)};
        basis[pos][i] = RatFun(1);
        ++pos;
    }

    auto bilinear = [&](const std::array<RatFun, 3>& x, const std::array<RatFun, 3>& y) {
        RatFun acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc = acc + q.gram()[i][j] * x[i] * y[j];
        return acc;
    };

    RatFun q1 = bilinear(basis[0], basis[0]);
    RatFun q2 = bilinear(basis[1], basis[1]);
    RatFun q12 = bilinear(basis[0], basis[1]);
    RatFun bp1 = bilinear(p.coords, basis[0]);
    RatFun bp2 = bilinear(p.coords, basis[1]);
    RatFun two(2);

    Parametrization out;
    for (int i = 0; i < 3; ++i) {
        const RatFun& pi = p.coords[i];
        const RatFun& e1 = basis[0][i];
        const RatFun& e2 = basis[1][i];
        out.coords[i][0] = q1 * pi - two * bp1 * e1;
        out.coords[i][1] = two * q12 * pi - two * bp1 * e2 - two * bp2 * e1;
        out.coords[i][2] = q2 * pi - two * bp2 * e2;
    }

    // verification: substituting into q gives the zero quartic in (s, t)
    std::array<RatFun, 5> total;
    total.fill(RatFun(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int ki = 0; ki < 3; ++ki)
                for (int kj = 0; kj < 3; ++kj)
                    total[ki + kj] = total[ki + kj] +
                                     q.gram()[i][j] * out.coords[i][ki] * out.coords[j][kj];
    for (const RatFun& c : total)
        if (!c.is_zero()) throw InternalError("parametrize: verification polynomial nonzero");

    // nonproportional coordinates: some 2x2 minor between two coordinate rows
    bool nonprop = false;
    for (int i = 0; i < 3 && !nonprop; ++i)
        for (int j = i + 1; j < 3 && !nonprop; ++j)
            for (int k = 0; k < 3 && !nonprop; ++k)
                for (int l = k + 1; l < 3 && !nonprop; ++l)
                    nonprop = out.coords[i][k] * out.coords[j][l] !=
                              out.coords[i][l] * out.coords[j][k];
    if (!nonprop) throw InternalError("parametrize: degenerate parametrization");
    return out;
}

} // namespace brauer
