#include "legint/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace legint {

namespace {

std::string fmt(double v, const char* spec = "%.15g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

VerificationReport make_report(std::string case_id, double lhs, double rhs, double tol,
                               QuadDiag quad, std::string note) {
    VerificationReport r;
    r.case_id = std::move(case_id);
    r.lhs_value = lhs;
    r.rhs_value = rhs;
    r.abs_err = std::fabs(lhs - rhs);
    r.rel_err = rhs != 0.0 ? r.abs_err / std::fabs(rhs)
                           : (r.abs_err == 0.0 ? 0.0 : INFINITY);
    r.tol = tol;
    r.pass = r.abs_err < tol * std::max(1.0, std::fabs(rhs));
    r.quad = std::move(quad);
    r.note = std::move(note);
    return r;
}

std::string report_text(const VerificationReport& r) {
    std::string line = r.pass ? "PASS " : "FAIL ";
    line += r.case_id;
    line += "  lhs=" + fmt(r.lhs_value) + " rhs=" + fmt(r.rhs_value);
    line += " abs_err=" + fmt(r.abs_err, "%.3g") + " rel_err=" + fmt(r.rel_err, "%.3g");
    line += " tol=" + fmt(r.tol, "%.3g");
    line += " [" + r.quad.kind + " L" + std::to_string(r.quad.levels) +
            " err=" + fmt(r.quad.err_est, "%.2g") + "]";
    if (!r.note.empty()) line += " (" + r.note + ")";
    return line;
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j{{"case_id", r.case_id},
                             {"lhs", r.lhs_value},
                             {"rhs", r.rhs_value},
                             {"abs_err", r.abs_err},
                             {"rel_err", r.rel_err},
                             {"tol", r.tol},
                             {"pass", r.pass},
                             {"quad",
                              {{"kind", r.quad.kind},
                               {"levels", r.quad.levels},
                               {"err_est", r.quad.err_est}}}};
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

std::string report_csv_header() {
    return "case_id,lhs,rhs,abs_err,rel_err,tol,pass,quad_kind,quad_levels,quad_err_est";
}

std::string report_csv(const VerificationReport& r) {
    return r.case_id + "," + fmt(r.lhs_value, "%.17g") + "," + fmt(r.rhs_value, "%.17g") +
           "," + fmt(r.abs_err, "%.17g") + "," + fmt(r.rel_err, "%.17g") + "," +
           fmt(r.tol, "%.17g") + "," + (r.pass ? "1" : "0") + "," + r.quad.kind + "," +
           std::to_string(r.quad.levels) + "," + fmt(r.quad.err_est, "%.17g");
}

std::string sweep_text(const SweepRow& r) {
    std::string line = "nu=" + fmt(r.nu, "%.10g");
    line += "  phi_L=" + fmt(r.phi_l) + "  phi_R=" + fmt(r.phi_r);
    line += "  abs_err=" + fmt(r.abs_err, "%.3g") + "  rel_err=" + fmt(r.rel_err, "%.3g");
    if (!r.ok) line += "  ERROR(" + r.note + ")";
    return line;
}

std::string sweep_json(const SweepRow& r) {
    nlohmann::ordered_json j{{"nu", r.nu},       {"phi_L", r.phi_l},
                             {"phi_R", r.phi_r}, {"abs_err", r.abs_err},
                             {"rel_err", r.rel_err}, {"ok", r.ok}};
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

std::string sweep_csv_header() { return "nu,phi_L,phi_R,abs_err,rel_err,ok,note"; }

std::string sweep_csv(const SweepRow& r) {
    return fmt(r.nu, "%.17g") + "," + fmt(r.phi_l, "%.17g") + "," + fmt(r.phi_r, "%.17g") +
           "," + fmt(r.abs_err, "%.17g") + "," + fmt(r.rel_err, "%.17g") + "," +
           (r.ok ? "1" : "0") + "," + r.note;
}

}  // namespace legint
