#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brauer/residues.hpp"

namespace brauer {

// Quaternion symbol (a, b), both entries nonzero. (a,b) and (b,a) define
// the same algebra, so entries are stored in canonical string order.
struct QSymbol {
    RatFun a;
    RatFun b;

    QSymbol(RatFun x, RatFun y);

    bool is_constant() const { return a.is_constant() && b.is_constant(); }
    bool operator==(const QSymbol& o) const { return a == o.a && b == o.b; }
    bool operator<(const QSymbol& o) const;
    std::string str() const { return "sym(" + a.str() + ", " + b.str() + ")"; }
};

// Formal mod-2 sum of quaternion symbols; a symbol appearing twice cancels.
class BrClass {
public:
    BrClass() = default;
    explicit BrClass(QSymbol s) { toggle(std::move(s)); }
    static BrClass sum(std::vector<QSymbol> symbols);

    bool is_zero() const { return symbols_.empty(); }
    const std::vector<QSymbol>& symbols() const { return symbols_; }

    // Mod-2 addition (symmetric difference of symbol multisets).
    BrClass operator+(const BrClass& o) const;
    bool operator==(const BrClass& o) const { return symbols_ == o.symbols_; }

    std::string str() const;

private:
    void toggle(QSymbol s);
    std::vector<QSymbol> symbols_;  // sorted, duplicate-free
};

// ---- triviality bookkeeping ------------------------------------------------

// A re-checkable reason why a symbol (or class) is trivial.
struct RuleJustification {
    std::string rule;  // "square-entry", "steinberg", "b=-a"
    std::string a;     // canonical entries the rule was checked on
    std::string b;
};
struct WitnessJustification {
    GaussRat x, y, t;  // projective point on X^2 - aY^2 - bT^2 = 0
    GaussRat a, b;
};
struct EmptyClassJustification {};
using Justification =
    std::variant<RuleJustification, WitnessJustification, EmptyClassJustification>;

std::string justification_str(const Justification& j);

struct TrivialityVerdict {
    bool trivial = false;                   // false => Unknown, never "nontrivial"
    long bound = 0;                         // exhausted search bound when Unknown
    std::vector<Justification> because;     // nonempty when trivial
    std::string str() const;
};

// ---- operations -------------------------------------------------------------

// Square parts stripped from both entries; the class is unchanged.
QSymbol normalize_symbol(const QSymbol& s);

// Entries that are exact squares normalize to 1; the resulting symbol is
// trivial and gets dropped by this pass.
BrClass normalize_class(const BrClass& c);

// Detects (a, 1-a), (a, -a) and square entries, on the literal entries.
std::optional<RuleJustification> steinberg_rules(const QSymbol& s);

// Entry-wise substitution along the curve; RamifiedAlongCurve when an entry
// vanishes or has a pole along it.
BrClass restrict_to_curve(const BrClass& c, const ParamCurve& d);

// Entry-wise exact evaluation; EntryNotUnit when an entry has a zero or
// pole at the point.
BrClass evaluate_at_point(const BrClass& c, const PlanePoint& pt);
BrClass evaluate_at_param(const BrClass& c, Var param, const GaussRat& t0);

// Semi-decision for a constant class: Trivial with a checkable
// justification, or Unknown after exhausting the height bound. Never
// claims nontriviality.
TrivialityVerdict decide_constant_triviality(const BrClass& c, long height_bound);

// One step of the constant-extraction chain, for the trail.
struct ExtractStep {
    std::string stage;
    std::string detail;
};

struct ExtractResult {
    BrClass constant;                  // class over Q(i)
    std::vector<ExtractStep> trail;
    std::vector<RuleJustification> dropped;  // symbols removed over kappa(D)
};

// Unramified class -> constant representative: restrict to the curve,
// normalize, drop function-field-trivial symbols, evaluate at the point.
ExtractResult extract_constant(const BrClass& c, const ParamCurve& d, const GaussRat& t0);

// ---- certified equality ------------------------------------------------------

enum class EqualityVerdict { Equal, Unknown, NotEqualOverPlane };

struct EqualityCheck {
    EqualityVerdict verdict;
    // NotEqualOverPlane: the certifying divisor and residue class
    std::optional<PrimeDivisor> witness_divisor;
    std::optional<SquareClass> witness_class;
    // Equal/Unknown path data
    BrClass difference;
    std::optional<ExtractResult> extraction;
    std::optional<TrivialityVerdict> constant_verdict;
    long height_bound = 0;
    std::string verdict_str() const;
};

EqualityCheck class_equal_certified(const BrClass& x, const BrClass& y,
                                    const ParamCurve& d, const GaussRat& t0,
                                    long height_bound);

} // namespace brauer
