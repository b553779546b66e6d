#include "brauer/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "brauer/certificate.hpp"

namespace brauer::cli {

namespace {

long env_height_bound() {
    const char* env = std::getenv("BRAUER_HEIGHT_BOUND");
    if (env == nullptr) return kDefaultHeightBound;
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end == env || parsed <= 0) return kDefaultHeightBound;
    return parsed;
}

void print_rows(const std::vector<ResidueRow>& rows, bool as_json, std::ostream& out) {
    std::size_t nontrivial = 0;
    for (const ResidueRow& r : rows) nontrivial += r.trivial ? 0 : 1;
    if (as_json) {
        Json j;
        Json arr = Json::array();
        for (const ResidueRow& r : rows)
            arr.push_back(Json{{"divisor", r.divisor.str()},
                               {"residue_var", var_name(r.divisor.residue_var())},
                               {"class", r.cls.str()},
                               {"constant", r.cls.cst.str()},
                               {"odd_poly", r.cls.odd.str()},
                               {"trivial", r.trivial}});
        j["rows"] = arr;
        j["profile_empty"] = nontrivial == 0;
        out << j.dump(2) << "\n";
        return;
    }
    for (const ResidueRow& r : rows) {
        out << "at " << r.divisor.str() << ": class " << r.cls.str() << " in Q(i)("
            << var_name(r.divisor.residue_var()) << ")";
        if (r.trivial) out << "  [trivial over Q(i)]";
        out << "\n";
    }
    if (nontrivial == 0)
        out << "profile: empty (all residues trivial)\n";
    else
        out << "profile: " << nontrivial << " nontrivial residue"
            << (nontrivial == 1 ? "" : "s") << "\n";
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact residues of quaternion symbols over Q(i)(u,v) and a "
                 "conic-bundle rationality certifier"};
    app.require_subcommand(1);

    long height_bound = env_height_bound();

    // residues <class>
    std::string residues_expr;
    bool residues_json = false;
    CLI::App* residues_cmd = app.add_subcommand("residues", "residue table of a class");
    residues_cmd->add_option("class", residues_expr, "class expression")->required();
    residues_cmd->add_flag("--json", residues_json, "machine-readable output");

    // compare <x> <y> --curve --point
    std::string cmp_x, cmp_y, cmp_curve = "v=1-u", cmp_point = "u=0";
    CLI::App* compare_cmd = app.add_subcommand("compare", "certified class comparison");
    compare_cmd->add_option("x", cmp_x, "first class")->required();
    compare_cmd->add_option("y", cmp_y, "second class")->required();
    compare_cmd->add_option("--curve", cmp_curve, "restriction curve, e.g. v=1-u");
    compare_cmd->add_option("--point", cmp_point, "evaluation point on the curve, e.g. u=0");
    compare_cmd->add_option("--height-bound", height_bound, "point search bound");

    // conic symbol/param <form>
    CLI::App* conic_cmd = app.add_subcommand("conic", "quadratic form utilities");
    conic_cmd->require_subcommand(1);
    std::string form_expr;
    CLI::App* conic_symbol_cmd = conic_cmd->add_subcommand("symbol", "symbol of a conic");
    conic_symbol_cmd->add_option("form", form_expr, "quadratic form in S,T,R or X,Y,T")
        ->required();
    std::string param_form_expr;
    CLI::App* conic_param_cmd =
        conic_cmd->add_subcommand("param", "parametrize a constant conic through a found point");
    conic_param_cmd->add_option("form", param_form_expr, "constant quadratic form")->required();
    conic_param_cmd->add_option("--height-bound", height_bound, "point search bound");

    // certify-cot
    std::string path = "main", target_override, out_file;
    CLI::App* certify_cmd =
        app.add_subcommand("certify-cot", "replay the built-in bundle certification");
    certify_cmd->add_option("--path", path, "main or remark")
        ->check(CLI::IsMember({"main", "remark"}));
    certify_cmd->add_option("--height-bound", height_bound, "point search bound");
    certify_cmd->add_option("--target", target_override, "comparison class (default sym(u, v))");
    certify_cmd->add_option("--out", out_file, "write the certificate to a file");

    // verify <file>
    std::string verify_file;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a certificate file");
    verify_cmd->add_option("file", verify_file, "certificate JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << "\n";
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    if (residues_cmd->parsed()) {
        BrClass c = parse_class(residues_expr);
        print_rows(residue_rows(c), residues_json, out);
        return kExitOk;
    }

    if (compare_cmd->parsed()) {
        BrClass x = parse_class(cmp_x);
        BrClass y = parse_class(cmp_y);
        ParamCurve curve = parse_curve(cmp_curve);
        auto [pvar, pval] = parse_param_point(cmp_point);
        if (pvar != curve.param())
            throw CalcError("point variable must be the curve parameter " +
                            std::string(var_name(curve.param())));
        EqualityCheck check = class_equal_certified(x, y, curve, pval, height_bound);
        Json j;
        j["x"] = x.str();
        j["y"] = y.str();
        j["curve"] = curve.str();
        j["point"] = cmp_point;
        j["verdict"] = check.verdict_str();
        if (check.verdict == EqualityVerdict::NotEqualOverPlane) {
            j["witness_divisor"] = check.witness_divisor->str();
            j["witness_class"] = check.witness_class->str();
        } else {
            j["difference"] = check.difference.str();
            if (check.extraction) {
                j["constant_class"] = check.extraction->constant.str();
                Json dropped = Json::array();
                for (const RuleJustification& r : check.extraction->dropped)
                    dropped.push_back(justification_str(Justification(r)));
                j["dropped_symbols"] = dropped;
            }
            if (check.constant_verdict) j["constant_verdict"] = check.constant_verdict->str();
        }
        out << j.dump(2) << "\n";
        switch (check.verdict) {
            case EqualityVerdict::Equal: return kExitOk;
            case EqualityVerdict::Unknown: return kExitUnknown;
            case EqualityVerdict::NotEqualOverPlane: return kExitNotEqual;
        }
    }

    if (conic_symbol_cmd->parsed()) {
        TernaryForm form = parse_form(form_expr);
        DiagonalForm diag = diagonalize(form);
        QSymbol sym = symbol_of_form(diag);
        Json j;
        j["form"] = form.str();
        j["diagonal"] = Json::array({diag.d[0].str(), diag.d[1].str(), diag.d[2].str()});
        j["symbol"] = sym.str();
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    if (conic_param_cmd->parsed()) {
        TernaryForm form = parse_form(param_form_expr);
        if (!form.is_constant())
            throw CalcError("conic param requires a constant form; point search over "
                            "function fields is unsupported");
        auto pt = point_search(form, height_bound);
        if (!pt) {
            out << "no point with coordinate norm <= " << height_bound << "\n";
            return kExitUnknown;
        }
        Parametrization par = parametrize(form, *pt);
        Json j;
        j["form"] = form.str();
        j["point"] = pt->str();
        j["parametrization"] = par.str();
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    if (certify_cmd->parsed()) {
        CertifyOptions opts;
        opts.path = path;
        opts.height_bound = height_bound;
        opts.target_override = target_override;
        Certificate cert = certify_cot(opts);
        Json j = cert.to_json();
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            if (!f) throw CalcError("cannot write " + out_file);
            f << j.dump(2) << "\n";
            out << "certificate written to " << out_file << "\n";
        } else {
            out << j.dump(2) << "\n";
        }
        switch (cert.conclusion) {
            case Conclusion::Rational: return kExitOk;
            case Conclusion::Unknown: return kExitUnknown;
            case Conclusion::NotEqualOverPlane: return kExitNotEqual;
        }
    }

    if (verify_cmd->parsed()) {
        std::ifstream f(verify_file);
        if (!f) throw CalcError("cannot read " + verify_file);
        Json j;
        try {
            f >> j;
        } catch (const std::exception& e) {
            err << "error: malformed certificate: " << e.what() << "\n";
            return kExitInput;
        }
        VerifyReport report = verify_certificate(j);
        if (report.ok) {
            out << "certificate verifies: every row and justification re-checked\n";
            return kExitOk;
        }
        for (const std::string& f2 : report.failures) err << "FAIL: " << f2 << "\n";
        return kExitInternal;
    }

    return kExitInput;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const CalcError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace brauer::cli
