#pragma once

#include "legint/errors.hpp"

namespace legint {

// ---------------------------------------------------------------------------
// Elementary special functions (double precision throughout).
// All functions are pure and safe for concurrent use.
// ---------------------------------------------------------------------------

// cos(pi*x) and sin(pi*x) with argument reduction, exact zeros at
// (half-)integers.
double cospi(double x);
double sinpi(double x);

// Gamma function. Lanczos (g=7, 9 terms) with reflection for x < 0.5.
// Poles at x = 0, -1, -2, ... raise std::domain_error.
double gamma(double x);

// log |Gamma(x)| for x > 0 (no overflow for large x).
double lgamma_pos(double x);

// Digamma psi(x) = d/dx log Gamma(x). Recurrence to x >= 10, then the
// asymptotic Bernoulli series; reflection for x < 0.
double digamma(double x);

struct Hyp2f1Result {
    double value = 0.0;
    int terms = 0;        // series terms consumed
    bool degraded = false;  // direct series used with z > 1 - 1e-6
};

// Gauss hypergeometric 2F1(a,b;c;z) for z in [0,1). When c-a-b = 0 and
// z >= 1/2 the logarithmic connection formula (AMS55 15.3.10) is used;
// otherwise the defining series. Terminating cases (a or b a non-positive
// integer) are summed exactly for any z.
double hyp2f1(double a, double b, double c, double z);
Hyp2f1Result hyp2f1_eval(double a, double b, double c, double z);

// ---------------------------------------------------------------------------
// Legendre functions of fractional degree on (-1, 1].
// ---------------------------------------------------------------------------

// A Legendre degree nu > -1 with its cached trigonometric/Gamma companions.
class Degree {
public:
    explicit Degree(double nu);

    double nu() const { return nu_; }
    double cos_pi_nu() const { return cos_pi_nu_; }
    double sin_pi_nu() const { return sin_pi_nu_; }
    double cos_half_pi_nu() const { return cos_half_pi_nu_; }
    // Gamma((1+nu)/2) / Gamma(1+nu/2)
    double gamma_ratio() const { return gamma_ratio_; }

    bool is_integer() const { return is_integer_; }
    long integer_value() const { return n_; }

private:
    double nu_;
    double cos_pi_nu_;
    double sin_pi_nu_;
    double cos_half_pi_nu_;
    double gamma_ratio_;
    bool is_integer_;
    long n_;
};

// Legendre function of the first kind P_nu(x), -1 < x <= 1.
// P_nu(1-2z) = 2F1(-nu, nu+1; 1; z): direct series for x >= 0, the
// logarithmic connection formula for x < 0 (P_nu diverges like log(1+x)
// at x = -1 for fractional nu).
double legendre_p(const Degree& d, double x);

// Endpoint-stable overload: one_minus_x and one_plus_x are the exact
// distances to the endpoints, allowed to be far below DBL_EPSILON relative
// to 1 (quadrature nodes cluster exponentially close to +-1).
double legendre_p(const Degree& d, double x, double one_minus_x, double one_plus_x);

// Legendre function of the second kind on (-1,1),
//   Q_nu(x) = pi/(2 sin(nu pi)) [cos(nu pi) P_nu(x) - P_nu(-x)].
// Near integer degree (|sin nu pi| < 1e-8) the n = 0, 1 closed forms are
// used; other integer degrees raise std::domain_error.
double legendre_q(const Degree& d, double x);
double legendre_q(const Degree& d, double x, double one_minus_x, double one_plus_x);

// P_nu(0) = cos(nu pi/2) Gamma((1+nu)/2) / (sqrt(pi) Gamma(1+nu/2)).
double p_nu_zero(const Degree& d);

// ---------------------------------------------------------------------------
// Complete elliptic integrals (AGM).
// ---------------------------------------------------------------------------

// K(k), 0 <= k < 1 (domain error at k >= 1 - 1e-16) and E(k), 0 <= k <= 1.
double ellip_k(double k);
double ellip_e(double k);

// Parameter forms K(sqrt(m)), E(sqrt(m)) with the complement mc = 1 - m
// supplied exactly by the caller; this keeps full accuracy when m -> 1
// (K diverges like log(1/mc)).
double ellip_k_m(double m, double mc);
double ellip_e_m(double m, double mc);

// ---------------------------------------------------------------------------
// Conical (Mehler) functions of degree -1/2 + i*eta.
// ---------------------------------------------------------------------------

struct ConicalParam {
    ConicalParam(double eta, double theta);
    double eta;    // >= 0
    double theta;  // in [0, pi/2]
};

// P_{-1/2+i eta}(cos theta) = 1 + sum_k [prod_n (4 eta^2+(2n-1)^2)/(4n^2)] sin^{2k}(theta/2)
double conical_p(const ConicalParam& p);
// P_{-1/2+i eta}(-cos theta): the same series at angle pi - theta.
double conical_p_reflected(const ConicalParam& p);

// ---------------------------------------------------------------------------
// Modified Bessel functions of order zero.
// ---------------------------------------------------------------------------

double bessel_i0(double x);         // power series / asymptotic, x in [0, ~709]
double bessel_i0_scaled(double x);  // e^{-x} I0(x), any x >= 0
double bessel_k0(double x);         // series for x <= 4, continued fraction beyond

}  // namespace legint
