#include "brauer/certificate.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace brauer {

std::string conclusion_str(Conclusion c) {
    switch (c) {
        case Conclusion::Rational: return "Rational";
        case Conclusion::Unknown: return "Unknown";
        case Conclusion::NotEqualOverPlane: return "NotEqualOverPlane";
    }
    return "?";
}

namespace {

Conclusion conclusion_from_str(const std::string& s) {
    if (s == "Rational") return Conclusion::Rational;
    if (s == "NotEqualOverPlane") return Conclusion::NotEqualOverPlane;
    return Conclusion::Unknown;
}

std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

} // namespace

Json Certificate::to_json() const {
    Json j;
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    j["path"] = path;
    j["height_bound"] = height_bound;
    j["input_form"] = input_form;
    j["diagonal"] = diagonal;
    j["alpha"] = alpha;
    j["target"] = target;
    Json rows = Json::array();
    for (const Row& r : residue_table) {
        Json row;
        row["divisor"] = r.divisor;
        row["residue_var"] = r.residue_var;
        row["class"] = r.cls;
        row["constant"] = r.constant;
        row["odd_poly"] = r.odd_poly;
        row["trivial"] = r.trivial;
        rows.push_back(row);
    }
    j["residue_table"] = rows;
    j["difference_unramified"] = difference_unramified;
    j["curve"] = curve;
    j["restricted_class"] = restricted_class;
    j["evaluation_point"] = evaluation_point;
    j["constant_class"] = constant_class;
    j["constant_justifications"] = constant_justifications;
    j["dropped_symbols"] = dropped_symbols;
    j["check_point"] = check_point;
    j["alpha_at_point"] = alpha_at_point;
    j["alpha_square_witness"] = alpha_square_witness;
    j["target_at_point"] = target_at_point;
    j["check_justifications"] = check_justifications;
    j["witness_divisor"] = witness_divisor;
    j["witness_class"] = witness_class;
    j["chart"] = Json{{"forward", chart.forward},
                      {"backward", chart.backward},
                      {"equation", chart.equation},
                      {"verification", chart.verification}};
    Json verds = Json::array();
    for (const StepVerdict& v : verdicts)
        verds.push_back(Json{{"step", v.step}, {"pass", v.pass}, {"detail", v.detail}});
    j["verdicts"] = verds;
    j["conclusion"] = conclusion_str(conclusion);
    return j;
}

Certificate Certificate::from_json(const Json& j) {
    Certificate c;
    c.tool_version = j.value("tool_version", "");
    c.timestamp = j.value("timestamp", "");
    c.path = j.value("path", "main");
    c.height_bound = j.value("height_bound", kDefaultHeightBound);
    c.input_form = j.value("input_form", "");
    c.diagonal = j.value("diagonal", std::vector<std::string>{});
    c.alpha = j.value("alpha", "");
    c.target = j.value("target", "");
    for (const Json& row : j.value("residue_table", Json::array()))
        c.residue_table.push_back(Row{row.value("divisor", ""), row.value("residue_var", ""),
                                      row.value("class", ""), row.value("constant", ""),
                                      row.value("odd_poly", ""), row.value("trivial", false)});
    c.difference_unramified = j.value("difference_unramified", false);
    c.curve = j.value("curve", "");
    c.restricted_class = j.value("restricted_class", "");
    c.evaluation_point = j.value("evaluation_point", "");
    c.constant_class = j.value("constant_class", "");
    c.constant_justifications = j.value("constant_justifications", std::vector<std::string>{});
    c.dropped_symbols = j.value("dropped_symbols", std::vector<std::string>{});
    c.check_point = j.value("check_point", "");
    c.alpha_at_point = j.value("alpha_at_point", "");
    c.alpha_square_witness = j.value("alpha_square_witness", "");
    c.target_at_point = j.value("target_at_point", "");
    c.check_justifications = j.value("check_justifications", std::vector<std::string>{});
    c.witness_divisor = j.value("witness_divisor", "");
    c.witness_class = j.value("witness_class", "");
    if (j.contains("chart")) {
        const Json& ch = j["chart"];
        c.chart = Chart{ch.value("forward", ""), ch.value("backward", ""),
                        ch.value("equation", ""), ch.value("verification", "")};
    }
    for (const Json& v : j.value("verdicts", Json::array()))
        c.verdicts.push_back(
            StepVerdict{v.value("step", ""), v.value("pass", false), v.value("detail", "")});
    c.conclusion = conclusion_from_str(j.value("conclusion", "Unknown"));
    return c;
}

TernaryForm builtin_bundle_form() {
    // v(v^2-1) S^2 - u(u^2-1) T^2 + uv(u^2-v^2) R^2
    RatFun u = RatFun::variable(Var::U);
    RatFun v = RatFun::variable(Var::V);
    RatFun one(1);
    return TernaryForm::diagonal(v * (v * v - one), -(u * (u * u - one)),
                                 u * v * (u * u - v * v));
}

BrClass builtin_target() {
    return BrClass(QSymbol(RatFun::variable(Var::U), RatFun::variable(Var::V)));
}

Certificate certify_cot(const CertifyOptions& opts) {
    if (opts.path != "main" && opts.path != "remark")
        throw CalcError("path must be 'main' or 'remark'");

    Certificate cert;
    cert.timestamp = now_iso8601();
    cert.path = opts.path;
    cert.height_bound = opts.height_bound;

    auto step = [&](const std::string& name, bool pass, const std::string& detail) {
        cert.verdicts.push_back(StepVerdict{name, pass, detail});
        return pass;
    };

    bool all_pass = true;

    // form and symbol
    TernaryForm form = builtin_bundle_form();
    cert.input_form = form.str();
    all_pass &= step("build-form", true, cert.input_form);

    DiagonalForm diag = diagonalize(form);  // throws on failure
    for (const RatFun& d : diag.d) cert.diagonal.push_back(d.str());
    all_pass &= step("diagonalize", true,
                     "<" + cert.diagonal[0] + ", " + cert.diagonal[1] + ", " +
                         cert.diagonal[2] + ">");

    QSymbol alpha = symbol_of_form(diag);
    BrClass alpha_class(alpha);
    cert.alpha = alpha_class.str();
    all_pass &= step("symbol", true, cert.alpha);

    BrClass target =
        opts.target_override.empty() ? builtin_target() : parse_class(opts.target_override);
    cert.target = target.str();

    // residue table of alpha over its full support
    std::vector<ResidueRow> rows = residue_rows(alpha_class);
    for (const ResidueRow& r : rows)
        cert.residue_table.push_back(Certificate::Row{
            r.divisor.str(), var_name(r.divisor.residue_var()), r.cls.str(),
            r.cls.cst.str(), r.cls.odd.str(), r.trivial});
    all_pass &= step("residue-table", true,
                     std::to_string(rows.size()) + " divisors on the support");

    // difference profile
    BrClass difference = alpha_class + target;
    ResidueProfile diff_profile = residue_profile(difference);
    cert.difference_unramified = diff_profile.empty();
    if (!cert.difference_unramified) {
        cert.witness_divisor = diff_profile.begin()->first.str();
        cert.witness_class = diff_profile.begin()->second.str();
        step("difference-unramified", false,
             "nontrivial residue " + cert.witness_class + " at " + cert.witness_divisor);
        cert.conclusion = Conclusion::NotEqualOverPlane;
        return cert;
    }
    all_pass &= step("difference-unramified", true, "profile of alpha + target is empty");

    ParamCurve curve(Var::U, BiPoly(1) - BiPoly::variable(Var::U));  // v = 1-u
    GaussRat eval_at(0);                                             // u = 0
    PlanePoint check_point{GaussRat(2), GaussRat(3)};                // direct evaluation

    if (opts.path == "main") {
        cert.curve = curve.str();
        cert.evaluation_point = "u=" + eval_at.str();

        // restriction of alpha itself, for the record
        BrClass restricted = normalize_class(restrict_to_curve(alpha_class, curve));
        cert.restricted_class = restricted.str();
        all_pass &= step("restrict", true, cert.restricted_class);

        ExtractResult extraction = extract_constant(difference, curve, eval_at);
        cert.constant_class = extraction.constant.str();
        for (const RuleJustification& r : extraction.dropped)
            cert.dropped_symbols.push_back(justification_str(Justification(r)));
        all_pass &= step("extract-constant", true, cert.constant_class);

        TrivialityVerdict tv = decide_constant_triviality(extraction.constant, opts.height_bound);
        for (const Justification& ju : tv.because)
            cert.constant_justifications.push_back(justification_str(ju));
        all_pass &= step("decide-constant", tv.trivial, tv.str());
        if (!tv.trivial) {
            cert.conclusion = Conclusion::Unknown;
            return cert;
        }
    } else {
        cert.evaluation_point = check_point.str();
        BrClass at_point = evaluate_at_point(difference, check_point);
        cert.constant_class = at_point.str();
        all_pass &= step("evaluate-difference", true, cert.constant_class);

        TrivialityVerdict tv = decide_constant_triviality(at_point, opts.height_bound);
        for (const Justification& ju : tv.because)
            cert.constant_justifications.push_back(justification_str(ju));
        all_pass &= step("decide-constant", tv.trivial, tv.str());
        if (!tv.trivial) {
            cert.conclusion = Conclusion::Unknown;
            return cert;
        }
    }

    // direct evaluation cross-check at (2, 3)
    cert.check_point = check_point.str();
    BrClass alpha_at = evaluate_at_point(alpha_class, check_point);
    cert.alpha_at_point = alpha_at.str();
    bool cross_ok = true;
    {
        // first entry of the evaluated symbol is an exact square
        GaussRat a_val = alpha_at.symbols().at(0).a.constant_value();
        GaussRat b_val = alpha_at.symbols().at(0).b.constant_value();
        auto w = gauss_is_square(a_val);
        if (!w) w = gauss_is_square(b_val);
        if (w)
            cert.alpha_square_witness = w->str();
        else
            cross_ok = false;

        BrClass target_at = evaluate_at_point(target, check_point);
        cert.target_at_point = target_at.str();
        TrivialityVerdict tv = decide_constant_triviality(target_at, opts.height_bound);
        for (const Justification& ju : tv.because)
            cert.check_justifications.push_back(justification_str(ju));
        cross_ok &= tv.trivial;
    }
    all_pass &= step("cross-check-evaluation", cross_ok,
                     "alpha -> " + cert.alpha_at_point + ", target -> " + cert.target_at_point);

    // explicit chart for the final model
    AffineChart chart = model_bundle_chart();
    cert.chart.forward = chart.forward_str();
    cert.chart.backward = chart.backward_str();
    cert.chart.equation = chart.equation_str();
    cert.chart.verification = chart.verification_poly().str();
    bool chart_ok = chart.verification_poly().is_zero();
    {
        std::array<GaussRat, 3> sample{GaussRat(1), GaussRat(2), GaussRat(3)};
        chart_ok &= chart.backward(chart.forward(sample)) == sample;
    }
    all_pass &= step("model-chart", chart_ok, cert.chart.forward);

    cert.conclusion = all_pass ? Conclusion::Rational : Conclusion::Unknown;
    return cert;
}

// ---- verification -------------------------------------------------------------

namespace {

// the compact justification strings are parsed back for re-checking
bool recheck_justification(const std::string& text, VerifyReport& report) {
    if (text == "empty class") return true;
    if (text.rfind("rule ", 0) == 0) {
        auto on = text.find(" on sym(");
        if (on == std::string::npos) {
            report.fail("malformed rule justification: " + text);
            return false;
        }
        std::string rule = text.substr(5, on - 5);
        std::string args = text.substr(on + 8);
        if (args.size() < 2 || args.back() != ')') {
            report.fail("malformed rule justification: " + text);
            return false;
        }
        args.pop_back();
        // entries are canonical, so the separator is unambiguous
        auto comma = args.find(", ");
        if (comma == std::string::npos) {
            report.fail("malformed rule justification: " + text);
            return false;
        }
        RatFun a = parse_scalar(args.substr(0, comma));
        RatFun b = parse_scalar(args.substr(comma + 2));
        QSymbol sym(a, b);
        auto found = steinberg_rules(sym);
        if (!found) {
            QSymbol n = normalize_symbol(sym);
            if (n.a == RatFun(1) || n.b == RatFun(1))
                found = RuleJustification{"square-entry", a.str(), b.str()};
            else
                found = steinberg_rules(n);
        }
        if (!found) {
            report.fail("rule precondition fails for " + text);
            return false;
        }
        return true;
    }
    if (text.rfind("witness (", 0) == 0) {
        auto close = text.find(") on X^2 - (");
        if (close == std::string::npos) {
            report.fail("malformed witness justification: " + text);
            return false;
        }
        std::string coords = text.substr(9, close - 9);
        std::string rest = text.substr(close + 12);
        auto c1 = coords.find(", ");
        auto c2 = coords.find(", ", c1 + 2);
        GaussRat x = parse_gauss(coords.substr(0, c1));
        GaussRat y = parse_gauss(coords.substr(c1 + 2, c2 - c1 - 2));
        GaussRat t = parse_gauss(coords.substr(c2 + 2));
        auto mid = rest.find(")*Y^2 - (");
        auto end = rest.find(")*T^2");
        if (mid == std::string::npos || end == std::string::npos) {
            report.fail("malformed witness justification: " + text);
            return false;
        }
        GaussRat a = parse_gauss(rest.substr(0, mid));
        GaussRat b = parse_gauss(rest.substr(mid + 9, end - mid - 9));
        if (x.is_zero() && y.is_zero() && t.is_zero()) {
            report.fail("witness is the zero triple: " + text);
            return false;
        }
        if (!(x * x - a * y * y - b * t * t).is_zero()) {
            report.fail("witness does not satisfy the conic: " + text);
            return false;
        }
        return true;
    }
    report.fail("unrecognized justification: " + text);
    return false;
}

} // namespace

VerifyReport verify_certificate(const Json& j) {
    VerifyReport report;
    Certificate cert = Certificate::from_json(j);

    try {
        // form, diagonal, symbol
        TernaryForm form = parse_form(cert.input_form);
        DiagonalForm diag = diagonalize(form);
        QSymbol alpha_sym = symbol_of_form(diag);
        BrClass alpha(alpha_sym);
        if (alpha.str() != cert.alpha)
            report.fail("alpha does not match the input form: " + alpha.str() + " vs " +
                        cert.alpha);

        BrClass target = parse_class(cert.target);
        BrClass difference = alpha + target;

        // residue rows, one by one, and support completeness
        std::vector<PrimeDivisor> support = support_divisors(alpha);
        if (support.size() != cert.residue_table.size())
            report.fail("residue table size " + std::to_string(cert.residue_table.size()) +
                        " does not match support size " + std::to_string(support.size()));
        for (const Certificate::Row& row : cert.residue_table) {
            PrimeDivisor p = PrimeDivisor::from_poly(parse_scalar(row.divisor).num());
            SquareClass got = residue_symbol(alpha_sym, p);
            UniRat claimed(p.residue_var(), parse_scalar(row.cls));
            if (!got.same_class(SquareClass::from(claimed)))
                report.fail("residue at " + row.divisor + " is " + got.str() + ", certificate says " +
                            row.cls);
            if (got.trivial() != row.trivial)
                report.fail("trivial flag mismatch at " + row.divisor);
            if (!row.constant.empty() &&
                (got.cst.str() != row.constant || got.odd.str() != row.odd_poly))
                report.fail("structured class fields mismatch at " + row.divisor);
            bool in_support = false;
            for (const PrimeDivisor& q : support) in_support |= q == p;
            if (!in_support) report.fail("divisor " + row.divisor + " is not in the support");
        }

        // unramifiedness of the difference
        bool unramified = is_unramified(difference);
        if (unramified != cert.difference_unramified)
            report.fail("difference_unramified flag does not re-check");

        if (cert.conclusion == Conclusion::NotEqualOverPlane) {
            if (unramified)
                report.fail("NotEqualOverPlane claimed but the difference is unramified");
            else {
                ResidueProfile profile = residue_profile(difference);
                PrimeDivisor p = profile.begin()->first;
                if (p.str() != cert.witness_divisor)
                    report.fail("witness divisor mismatch: " + p.str() + " vs " +
                                cert.witness_divisor);
            }
        }

        if (cert.conclusion == Conclusion::Rational) {
            if (cert.path == "main") {
                ParamCurve curve = parse_curve(cert.curve);
                BrClass restricted = normalize_class(restrict_to_curve(alpha, curve));
                if (restricted.str() != cert.restricted_class)
                    report.fail("restricted class mismatch: " + restricted.str() + " vs " +
                                cert.restricted_class);
                auto [pvar, pval] = parse_param_point(cert.evaluation_point);
                if (pvar != curve.param()) report.fail("evaluation point is not on the curve parameter");
                ExtractResult extraction = extract_constant(difference, curve, pval);
                if (extraction.constant.str() != cert.constant_class)
                    report.fail("constant class mismatch: " + extraction.constant.str() +
                                " vs " + cert.constant_class);
            } else {
                BrClass constant = parse_class(cert.constant_class);
                // the recorded evaluation must match an exact re-evaluation
                GaussRat u0 = parse_gauss("2"), v0 = parse_gauss("3");
                BrClass again = evaluate_at_point(difference, PlanePoint{u0, v0});
                if (again.str() != cert.constant_class)
                    report.fail("constant class mismatch: " + again.str() + " vs " +
                                cert.constant_class);
                (void)constant;
            }
            for (const std::string& ju : cert.constant_justifications)
                recheck_justification(ju, report);
            for (const std::string& ju : cert.dropped_symbols) recheck_justification(ju, report);
            for (const std::string& ju : cert.check_justifications)
                recheck_justification(ju, report);

            // cross-check data
            if (!cert.alpha_square_witness.empty()) {
                GaussRat w = parse_gauss(cert.alpha_square_witness);
                BrClass alpha_at = parse_class(cert.alpha_at_point);
                GaussRat a_val = alpha_at.symbols().at(0).a.constant_value();
                GaussRat b_val = alpha_at.symbols().at(0).b.constant_value();
                if (w * w != a_val && w * w != b_val)
                    report.fail("square witness does not square to an entry of " +
                                cert.alpha_at_point);
            }

            // chart identity
            AffineChart chart = model_bundle_chart();
            if (chart.forward_str() != cert.chart.forward ||
                chart.equation_str() != cert.chart.equation)
                report.fail("chart does not match");
            if (cert.chart.verification != "0" || !chart.verification_poly().is_zero())
                report.fail("chart verification polynomial is not zero");
        }

        // conclusion consistency
        bool all_pass = true;
        for (const StepVerdict& v : cert.verdicts) all_pass &= v.pass;
        if (cert.conclusion == Conclusion::Rational && !all_pass)
            report.fail("conclusion Rational but some step verdict failed");
    } catch (const CalcError& e) {
        report.fail(std::string("verification error: ") + e.what());
    }
    return report;
}

} // namespace brauer
