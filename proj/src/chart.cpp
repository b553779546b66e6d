#include "brauer/chart.hpp"

#include <sstream>

namespace brauer {

namespace {
const char* kNames[4] = {"s", "t", "u", "v"};
}

Poly4 Poly4::coordinate(int idx) {
    Poly4 p;
    std::array<int, 4> m{0, 0, 0, 0};
    m[idx] = 1;
    p.add(m, GaussRat(1));
    return p;
}

void Poly4::add(std::array<int, 4> m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly4 Poly4::operator+(const Poly4& o) const {
    Poly4 out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c);
    return out;
}

Poly4 Poly4::operator-(const Poly4& o) const {
    Poly4 out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, -c);
    return out;
}

Poly4 Poly4::operator*(const Poly4& o) const {
    Poly4 out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::array<int, 4> m;
            for (int i = 0; i < 4; ++i) m[i] = m1[i] + m2[i];
            out.add(m, c1 * c2);
        }
    return out;
}

Poly4 Poly4::substitute(int idx, const Poly4& image) const {
    Poly4 out;
    for (const auto& [m, c] : terms_) {
        std::array<int, 4> rest = m;
        rest[idx] = 0;
        Poly4 term;
        term.add(rest, c);
        for (int k = 0; k < m[idx]; ++k) term = term * image;
        out = out + term;
    }
    return out;
}

GaussRat Poly4::evaluate(const std::array<GaussRat, 4>& x) const {
    GaussRat acc(0);
    for (const auto& [m, c] : terms_) {
        GaussRat t = c;
        for (int i = 0; i < 4; ++i) t *= x[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

std::string Poly4::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kNames[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        bool neg = c.is_rational() && c.re < 0;
        std::string cs;
        if (!c.is_rational()) {
            cs = "(" + c.str() + ")";
            if (!mono.empty()) cs += "*";
        } else {
            Rat mag = neg ? Rat(-c.re) : c.re;
            if (mono.empty())
                cs = rat_str(mag);
            else if (mag != 1)
                cs = rat_str(mag) + "*";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << cs << mono;
    }
    return os.str();
}

std::array<GaussRat, 4> AffineChart::forward(const std::array<GaussRat, 3>& a) const {
    std::array<GaussRat, 4> x{a[0], a[1], a[2], GaussRat(0)};
    x[3] = v_image.evaluate(x);
    return x;
}

std::array<GaussRat, 3> AffineChart::backward(const std::array<GaussRat, 4>& x) const {
    return {x[0], x[1], x[2]};
}

std::string AffineChart::forward_str() const {
    return "(s, t, u) -> (s, t, u, " + v_image.str() + ")";
}

AffineChart model_bundle_chart() {
    Poly4 s = Poly4::coordinate(0);
    Poly4 t = Poly4::coordinate(1);
    Poly4 u = Poly4::coordinate(2);
    Poly4 v = Poly4::coordinate(3);

    AffineChart chart;
    chart.v_image = s * s - u * t * t - Poly4(1);
    chart.hypersurface = s * s - u * t * t - v - Poly4(1);
    if (!chart.verification_poly().is_zero())
        throw InternalError("chart verification polynomial is nonzero");
    return chart;
}

} // namespace brauer
