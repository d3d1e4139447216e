#pragma once

#include <functional>
#include <string>
#include <vector>

#include "legint/quadrature.hpp"
#include "legint/report.hpp"
#include "legint/specfun.hpp"

namespace legint {

enum class SignPattern { PPP, PPM };

// One integral of the triple-Legendre-product family:
//   int_{-1}^1 [x]^{x_weight} (1-x^2)^{(nu-1)/2 + weight_shift}
//              [P_{nu+degree_shift}(x)]^2 {P_{nu+degree_shift}(x) or
//               P_{nu+degree_shift}(-x)} dx
struct TripleIntegralSpec {
    double nu = 0.0;
    SignPattern pattern = SignPattern::PPM;
    bool x_weight = false;
    double weight_shift = 0.0;
    int degree_shift = 0;
};

double triple_integral(const TripleIntegralSpec& s, const QuadratureRule& rule,
                       QuadDiag* diag = nullptr);

// Phi_L(nu) = int (1-x^2)^{(nu-1)/2} [P_nu(x)]^2 P_nu(-x) dx  (quadrature)
double phi_L(const Degree& d, const QuadratureRule& rule, QuadDiag* diag = nullptr);

// Phi_R(nu) = (1/pi) (cos(nu pi/2)/2^nu)^3 [Gamma((1+nu)/2)/Gamma(1+nu/2)]^4
double phi_R(const Degree& d);

// int (1-x^2)^{(nu-1)/2} [P_nu(x)]^3 dx
double triple_cube(const Degree& d, const QuadratureRule& rule, QuadDiag* diag = nullptr);

// int x (1-x^2)^{(nu-1)/2} [P_{nu+1}(x)]^2 {P_{nu+1}(x) | P_{nu+1}(-x)} dx
double x_weighted(const Degree& d, SignPattern pattern, const QuadratureRule& rule,
                  QuadDiag* diag = nullptr);

// Identity verifications; each report's pass uses abs_err < tol*max(1,|rhs|).
VerificationReport verify_eq1(const Degree& d, double tol, const QuadratureRule& rule);
VerificationReport verify_eq2(const Degree& d, double tol, const QuadratureRule& rule);
VerificationReport verify_recursion(const Degree& d, double tol, const QuadratureRule& rule);
VerificationReport verify_raise(const Degree& d, double tol, const QuadratureRule& rule);
VerificationReport verify_plus2(const Degree& d, double tol, const QuadratureRule& rule);
VerificationReport verify_pzero_form(const Degree& d, double tol, const QuadratureRule& rule);
VerificationReport verify_intermediate(const Degree& d, double tol,
                                       const QuadratureRule& rule);

// Log-log slope of |Phi_L(n + eps)| over the eps grid; n in {1, 3}.
// Values below 1e-12 are excluded from the fit.
double triple_zero_order(int n, const std::vector<double>& eps_grid,
                         const QuadratureRule& rule);

// One catalog entry: a quadrature recipe against a Gamma-expression value.
struct IdentityCase {
    std::string id;
    std::string description;
    std::function<double(const QuadratureRule&, QuadDiag*)> lhs;
    std::function<double()> rhs_closed;
    double tol = 1e-6;
    bool expect_fail = false;  // harness-soundness entry
};

// The full closed-form catalog: the nu=-1/2 chain (nine forms), the twelve
// fractional-degree identities with their elliptic-substitution forms, the
// nu=+-1/2 x-weighted family, and a perturbed self-test entry.
std::vector<IdentityCase> corollary_catalog();

VerificationReport run_case(const IdentityCase& c, const QuadratureRule& rule);

// The 13-point verification grid.
const std::vector<double>& nu_grid13();

}  // namespace legint
