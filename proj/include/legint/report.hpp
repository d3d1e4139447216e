#pragma once

#include <string>
#include <vector>

namespace legint {

struct QuadDiag {
    std::string kind = "tanh-sinh";
    int levels = 0;
    double err_est = 0.0;
};

// One verified identity (or property) instance. pass holds iff
// abs_err < tol * max(1, |rhs_value|), i.e. relative error with an absolute
// fallback at scale 1.
struct VerificationReport {
    std::string case_id;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    QuadDiag quad;
    std::string note;
};

VerificationReport make_report(std::string case_id, double lhs, double rhs, double tol,
                               QuadDiag quad = {}, std::string note = {});

// Serialization (used by the CLI; deterministic output).
std::string report_text(const VerificationReport& r);
std::string report_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv(const VerificationReport& r);

struct SweepRow {
    double nu = 0.0;
    double phi_l = 0.0;
    double phi_r = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool ok = true;
    std::string note;
};

std::string sweep_text(const SweepRow& r);
std::string sweep_json(const SweepRow& r);
std::string sweep_csv_header();
std::string sweep_csv(const SweepRow& r);

}  // namespace legint
