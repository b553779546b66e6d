#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "brauer/chart.hpp"
#include "brauer/conic.hpp"
#include "brauer/expr.hpp"

namespace brauer {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr long kDefaultHeightBound = 50;

enum class Conclusion { Rational, Unknown, NotEqualOverPlane };
std::string conclusion_str(Conclusion c);

struct StepVerdict {
    std::string step;
    bool pass;
    std::string detail;
};

// Serializable record of the full certification pipeline for the built-in
// conic bundle: every claim carries enough data to be re-checked from the
// file alone.
struct Certificate {
    std::string tool_version = kToolVersion;
    std::string timestamp;
    std::string path;  // "main" or "remark"
    long height_bound = kDefaultHeightBound;

    std::string input_form;
    std::vector<std::string> diagonal;
    std::string alpha;   // normalized symbol of the form
    std::string target;  // comparison class

    struct Row {
        std::string divisor;
        std::string residue_var;
        std::string cls;       // constant * odd_poly, as one expression
        std::string constant;
        std::string odd_poly;
        bool trivial;
    };
    std::vector<Row> residue_table;

    bool difference_unramified = false;
    std::string curve;             // main path
    std::string restricted_class;  // normalized restriction of alpha (main path)
    std::string evaluation_point;
    std::string constant_class;
    std::vector<std::string> constant_justifications;
    std::vector<std::string> dropped_symbols;  // function-field-trivial parts

    // direct evaluation cross-check
    std::string check_point;
    std::string alpha_at_point;
    std::string alpha_square_witness;
    std::string target_at_point;
    std::vector<std::string> check_justifications;

    // negative outcome data
    std::string witness_divisor;
    std::string witness_class;

    struct Chart {
        std::string forward;
        std::string backward;
        std::string equation;
        std::string verification;
    } chart;

    std::vector<StepVerdict> verdicts;
    Conclusion conclusion = Conclusion::Unknown;

    Json to_json() const;
    static Certificate from_json(const Json& j);
};

// The built-in bundle: s^2 v(v^2-1) - t^2 u(u^2-1) + uv(u^2-v^2) = 0 over
// the (u,v)-plane, compared against sym(u, v).
TernaryForm builtin_bundle_form();
BrClass builtin_target();

struct CertifyOptions {
    std::string path = "main";  // "main" or "remark"
    long height_bound = kDefaultHeightBound;
    std::string target_override;  // class expression; empty = sym(u, v)
};

Certificate certify_cot(const CertifyOptions& opts);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

// Re-checks every residue row, every triviality justification, the chart
// identity and the conclusion, using only the certificate contents.
VerifyReport verify_certificate(const Json& j);

} // namespace brauer
