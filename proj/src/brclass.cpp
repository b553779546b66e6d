#include "brauer/brclass.hpp"

#include <algorithm>
#include <sstream>

#include "brauer/conic.hpp"

namespace brauer {

QSymbol::QSymbol(RatFun x, RatFun y) : a(std::move(x)), b(std::move(y)) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("symbol entries must be nonzero");
    if (b.str() < a.str()) std::swap(a, b);  // (a,b) = (b,a); store sorted
}

bool QSymbol::operator<(const QSymbol& o) const {
    std::string sa = a.str(), oa = o.a.str();
    if (sa != oa) return sa < oa;
    return b.str() < o.b.str();
}

void BrClass::toggle(QSymbol s) {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it != symbols_.end() && *it == s)
        symbols_.erase(it);  // mod 2: second occurrence cancels
    else
        symbols_.insert(it, std::move(s));
}

BrClass BrClass::sum(std::vector<QSymbol> symbols) {
    BrClass c;
    for (auto& s : symbols) c.toggle(std::move(s));
    return c;
}

BrClass BrClass::operator+(const BrClass& o) const {
    BrClass out = *this;
    for (const QSymbol& s : o.symbols_) out.toggle(s);
    return out;
}

std::string BrClass::str() const {
    if (symbols_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) os << " + ";
        os << symbols_[i].str();
    }
    return os.str();
}

std::string justification_str(const Justification& j) {
    if (std::holds_alternative<EmptyClassJustification>(j)) return "empty class";
    if (const auto* r = std::get_if<RuleJustification>(&j))
        return "rule " + r->rule + " on sym(" + r->a + ", " + r->b + ")";
    const auto& w = std::get<WitnessJustification>(j);
    return "witness (" + w.x.str() + ", " + w.y.str() + ", " + w.t.str() +
           ") on X^2 - (" + w.a.str() + ")*Y^2 - (" + w.b.str() + ")*T^2";
}

std::string TrivialityVerdict::str() const {
    if (!trivial) return "Unknown(bound " + std::to_string(bound) + ")";
    std::string s = "Trivial";
    for (const auto& j : because) s += "; " + justification_str(j);
    return s;
}

namespace {

// f is a square in the rational function field iff both odd parts are 1 and
// the constant is a square in Q(i).
bool ratfun_is_square(const RatFun& f) {
    if (f.is_zero()) return false;
    OddPartResult n = odd_part(f.num());
    if (!n.odd.is_one()) return false;
    OddPartResult d = odd_part(f.den());
    if (!d.odd.is_one()) return false;
    return gauss_is_square(n.cst / d.cst).has_value();
}

// entry ~ constant * odd modulo squares. The constant keeps its sign (so
// evaluation later sees the same literal values); only perfect-square
// magnitudes and denominator squares are stripped.
GaussRat normalize_constant(const GaussRat& c) {
    if (c.is_rational()) {
        Rat mag = c.re < 0 ? Rat(-c.re) : c.re;
        Rat root;
        if (rat_is_square(mag, &root)) return GaussRat(c.re < 0 ? Rat(-1) : Rat(1));
        mpz_class l = mag.get_den();
        return GaussRat(c.re * Rat(l * l));
    }
    mpz_class l = lcm(c.re.get_den(), c.im.get_den());
    Rat scale(l * l);
    return GaussRat(c.re * scale, c.im * scale);
}

RatFun normalize_entry(const RatFun& e) {
    OddPartResult parts = odd_part(e.num() * e.den());
    return RatFun(parts.odd.scaled(normalize_constant(parts.cst)));
}

} // namespace

QSymbol normalize_symbol(const QSymbol& s) {
    return QSymbol(normalize_entry(s.a), normalize_entry(s.b));
}

BrClass normalize_class(const BrClass& c) {
    std::vector<QSymbol> kept;
    for (const QSymbol& s : c.symbols()) {
        QSymbol n = normalize_symbol(s);
        if (n.a == RatFun(1) || n.b == RatFun(1)) continue;  // trivial symbol
        kept.push_back(std::move(n));
    }
    return BrClass::sum(std::move(kept));
}

std::optional<RuleJustification> steinberg_rules(const QSymbol& s) {
    if (ratfun_is_square(s.a) || ratfun_is_square(s.b))
        return RuleJustification{"square-entry", s.a.str(), s.b.str()};
    if (s.b == RatFun(1) - s.a || s.a == RatFun(1) - s.b)
        return RuleJustification{"steinberg", s.a.str(), s.b.str()};
    if (s.b == -s.a)
        return RuleJustification{"b=-a", s.a.str(), s.b.str()};
    return std::nullopt;
}

BrClass restrict_to_curve(const BrClass& c, const ParamCurve& d) {
    std::vector<QSymbol> out;
    for (const QSymbol& s : c.symbols()) {
        RatFun images[2];
        const RatFun* entries[2] = {&s.a, &s.b};
        for (int k = 0; k < 2; ++k) {
            UniRat image = [&] {
                try {
                    return substitute(*entries[k], d);
                } catch (const IdenticallyZeroDenominator&) {
                    throw RamifiedAlongCurve("entry " + entries[k]->str() +
                                             " has a pole along " + d.str());
                }
            }();
            if (image.is_zero())
                throw RamifiedAlongCurve("entry " + entries[k]->str() +
                                         " vanishes along " + d.str());
            images[k] = image.fn;
        }
        out.emplace_back(images[0], images[1]);
    }
    return BrClass::sum(std::move(out));
}

namespace {

GaussRat unit_value(const RatFun& e, const PlanePoint& pt) {
    GaussRat den = e.den().evaluate(pt.u0, pt.v0);
    if (den.is_zero())
        throw EntryNotUnit("entry " + e.str() + " has a pole at " + pt.str());
    GaussRat num = e.num().evaluate(pt.u0, pt.v0);
    if (num.is_zero())
        throw EntryNotUnit("entry " + e.str() + " vanishes at " + pt.str());
    return num / den;
}

} // namespace

BrClass evaluate_at_point(const BrClass& c, const PlanePoint& pt) {
    std::vector<QSymbol> out;
    for (const QSymbol& s : c.symbols())
        out.emplace_back(RatFun(unit_value(s.a, pt)), RatFun(unit_value(s.b, pt)));
    return BrClass::sum(std::move(out));
}

BrClass evaluate_at_param(const BrClass& c, Var param, const GaussRat& t0) {
    PlanePoint pt = param == Var::U ? PlanePoint{t0, GaussRat(0)} : PlanePoint{GaussRat(0), t0};
    std::vector<QSymbol> out;
    for (const QSymbol& s : c.symbols()) {
        for (const RatFun* e : {&s.a, &s.b})
            if (!e->univariate_in(param))
                throw EntryNotUnit("entry " + e->str() + " is not univariate in " +
                                   var_name(param));
        out.emplace_back(RatFun(unit_value(s.a, pt)), RatFun(unit_value(s.b, pt)));
    }
    return BrClass::sum(std::move(out));
}

TrivialityVerdict decide_constant_triviality(const BrClass& c, long height_bound) {
    if (height_bound <= 0) throw CalcError("height bound must be positive");
    for (const QSymbol& s : c.symbols())
        if (!s.is_constant())
            throw CalcError("decide_constant_triviality: non-constant entry in " + s.str());

    TrivialityVerdict verdict;
    verdict.bound = height_bound;

    if (c.is_zero()) {
        verdict.trivial = true;
        verdict.because.push_back(EmptyClassJustification{});
        return verdict;
    }

    // rules on literal entries, then on normalized ones
    std::vector<QSymbol> work;
    auto admit = [&](const QSymbol& s) -> bool {
        if (auto j = steinberg_rules(s)) {
            verdict.because.push_back(*j);
            return true;
        }
        QSymbol n = normalize_symbol(s);
        if (auto j = steinberg_rules(n)) {
            verdict.because.push_back(*j);
            return true;
        }
        work.push_back(n);
        return false;
    };
    for (const QSymbol& s : c.symbols()) admit(s);

    // greedy bilinear merging on shared entries, canonical order
    bool merged = true;
    while (merged && work.size() >= 2) {
        merged = false;
        std::sort(work.begin(), work.end());
        for (std::size_t i = 0; i < work.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !merged; ++j) {
                const QSymbol &x = work[i], &y = work[j];
                RatFun shared, ox, oy;
                if (x.a == y.a) {
                    shared = x.a; ox = x.b; oy = y.b;
                } else if (x.a == y.b) {
                    shared = x.a; ox = x.b; oy = y.a;
                } else if (x.b == y.a) {
                    shared = x.b; ox = x.a; oy = y.b;
                } else if (x.b == y.b) {
                    shared = x.b; ox = x.a; oy = y.a;
                } else {
                    continue;
                }
                QSymbol m(shared, ox * oy);
                work.erase(work.begin() + j);
                work.erase(work.begin() + i);
                admit(m);
                merged = true;
            }
        }
    }

    // remaining symbols: exhaustive point search, one conic each
    for (const QSymbol& s : work) {
        GaussRat a = s.a.constant_value();
        GaussRat b = s.b.constant_value();
        auto pt = point_search(TernaryForm::diagonal(RatFun(GaussRat(1)),
                                                     RatFun(-a), RatFun(-b)),
                               height_bound);
        if (!pt) {
            verdict.trivial = false;
            verdict.because.clear();
            return verdict;
        }
        verdict.because.push_back(WitnessJustification{
            pt->coords[0].constant_value(), pt->coords[1].constant_value(),
            pt->coords[2].constant_value(), a, b});
    }
    verdict.trivial = true;
    return verdict;
}

ExtractResult extract_constant(const BrClass& c, const ParamCurve& d, const GaussRat& t0) {
    if (!is_unramified(c))
        throw NotUnramified("class " + c.str() + " has nontrivial residues");

    ExtractResult out;
    out.trail.push_back({"unramified", "all residues trivial on the support of " + c.str()});

    BrClass restricted = restrict_to_curve(c, d);
    out.trail.push_back({"restrict", d.str() + " -> " + restricted.str()});

    std::vector<QSymbol> kept;
    for (const QSymbol& s : restricted.symbols()) {
        if (auto j = steinberg_rules(s)) {
            out.dropped.push_back(*j);
            continue;
        }
        QSymbol n = normalize_symbol(s);
        if (n.a == RatFun(1) || n.b == RatFun(1)) {
            out.dropped.push_back(RuleJustification{"square-entry", s.a.str(), s.b.str()});
            continue;
        }
        if (auto j = steinberg_rules(n)) {
            out.dropped.push_back(*j);
            continue;
        }
        kept.push_back(n);
    }
    BrClass normalized = BrClass::sum(kept);
    out.trail.push_back({"normalize", normalized.str()});

    out.constant = evaluate_at_param(normalized, d.param(), t0);
    out.trail.push_back({"evaluate",
                         std::string(var_name(d.param())) + "=" + t0.str() + " -> " +
                         out.constant.str()});
    return out;
}

std::string EqualityCheck::verdict_str() const {
    switch (verdict) {
        case EqualityVerdict::Equal: return "Equal";
        case EqualityVerdict::Unknown: return "Unknown";
        case EqualityVerdict::NotEqualOverPlane: return "NotEqualOverPlane";
    }
    return "?";
}

EqualityCheck class_equal_certified(const BrClass& x, const BrClass& y,
                                    const ParamCurve& d, const GaussRat& t0,
                                    long height_bound) {
    EqualityCheck out;
    out.height_bound = height_bound;
    out.difference = x + y;

    ResidueProfile profile = residue_profile(out.difference);
    if (!profile.empty()) {
        out.verdict = EqualityVerdict::NotEqualOverPlane;
        out.witness_divisor = profile.begin()->first;
        out.witness_class = profile.begin()->second;
        return out;
    }

    out.extraction = extract_constant(out.difference, d, t0);
    out.constant_verdict = decide_constant_triviality(out.extraction->constant, height_bound);
    out.verdict = out.constant_verdict->trivial ? EqualityVerdict::Equal
                                                : EqualityVerdict::Unknown;
    return out;
}

} // namespace brauer
