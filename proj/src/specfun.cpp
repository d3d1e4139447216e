#include "legint/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace legint {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kSeriesCap = 10000;
constexpr double kIntegerTol = 1e-12;

}  // namespace

double cospi(double x) {
    double r = std::remainder(x, 2.0);  // r in [-1, 1]
    double a = std::fabs(r);
    if (a <= 0.25) return std::cos(kPi * a);
    if (a <= 0.75) return std::sin(kPi * (0.5 - a));
    return -std::cos(kPi * (1.0 - a));
}

double sinpi(double x) {
    double r = std::remainder(x, 2.0);
    double sign = r < 0 ? -1.0 : 1.0;
    double a = std::fabs(r);
    if (a > 0.5) a = 1.0 - a;  // exact (Sterbenz)
    double v = a <= 0.25 ? std::sin(kPi * a) : std::cos(kPi * (0.5 - a));
    return sign * v;
}

// ---------------------------------------------------------------------------
// Gamma, digamma
// ---------------------------------------------------------------------------

namespace {

// Lanczos g=7, n=9 coefficient set (Godfrey); ~15 significant digits.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
    double a = kLanczos[0];
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z - 1.0 + k);
    return a;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::fabs(x - std::nearbyint(x)) < kIntegerTol;
}

}  // namespace

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma: pole at non-positive integer x=" + std::to_string(x));
    if (x < 0.5) return kPi / (sinpi(x) * gamma(1.0 - x));
    double t = x + 6.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

double lgamma_pos(double x) {
    if (x <= 0.0) throw std::domain_error("lgamma_pos: requires x > 0");
    if (x < 0.5) return std::log(kPi / sinpi(x)) - lgamma_pos(1.0 - x);
    double t = x + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("digamma: pole at non-positive integer x=" + std::to_string(x));
    if (x < 0.0)  // reflection: psi(x) = psi(1-x) - pi cot(pi x)
        return digamma(1.0 - x) - kPi * cospi(x) / sinpi(x);
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double i2 = 1.0 / (x * x);
    // psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
    double tail = i2 * (1.0 / 12 - i2 * (1.0 / 120 - i2 * (1.0 / 252 - i2 * (1.0 / 240 -
                  i2 * (1.0 / 132 - i2 * (691.0 / 32760 - i2 / 12))))));
    return acc + std::log(x) - 0.5 / x - tail;
}

// ---------------------------------------------------------------------------
// Gauss hypergeometric series
// ---------------------------------------------------------------------------

namespace {

// Defining power series; terminates exactly when a or b is a non-positive
// integer (factor hits zero).
Hyp2f1Result hyp2f1_series(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    double ratio = 0.0;
    for (int k = 0; k < kSeriesCap; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0) return {sum, k + 2, false};
        ratio = std::fabs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2.0)) * z);
        if (std::fabs(term) <= 1e-17 * std::fabs(sum) && ratio < 1.0)
            return {sum, k + 2, false};
    }
    // graceful degradation very close to z = 1: accept a small estimated tail
    if (ratio < 1.0) {
        double tail = std::fabs(term) * ratio / (1.0 - ratio);
        if (tail <= 1e-5 * std::fabs(sum)) return {sum, kSeriesCap, true};
    }
    throw NonConvergenceError("hyp2f1: series cap reached", sum, std::fabs(term), kSeriesCap);
}

// 2F1(a,b;a+b;z) for z in [1/2, 1) via AMS55 15.3.10:
//   Gamma(a+b)/(Gamma(a)Gamma(b)) * sum_n (a)_n (b)_n / (n!)^2
//     * [2 psi(n+1) - psi(a+n) - psi(b+n) - ln w] w^n,  w = 1 - z.
// `prefactor` = Gamma(a+b)/(Gamma(a)Gamma(b)), supplied by the caller (the
// Legendre case computes it as -sin(nu pi)/pi, avoiding Gamma poles).
Hyp2f1Result hyp2f1_log_case(double a, double b, double w, double log_w, double prefactor) {
    double psi_n1 = digamma(1.0);
    double psi_an = digamma(a);
    double psi_bn = digamma(b);
    double coef = 1.0, sum = 0.0;
    for (int n = 0; n < kSeriesCap; ++n) {
        double term = coef * (2.0 * psi_n1 - psi_an - psi_bn - log_w);
        sum += term;
        if (n > 2 && std::fabs(term) <= 1e-17 * std::fabs(sum))
            return {prefactor * sum, n + 1, false};
        coef *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * w;
        psi_n1 += 1.0 / (n + 1.0);
        psi_an += 1.0 / (a + n);
        psi_bn += 1.0 / (b + n);
    }
    throw NonConvergenceError("hyp2f1: log-case series cap reached", prefactor * sum, 0.0,
                              kSeriesCap);
}

}  // namespace

Hyp2f1Result hyp2f1_eval(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c))
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    if (z == 0.0) return {1.0, 0, false};
    bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminating && (z < 0.0 || z >= 1.0))
        throw std::domain_error("hyp2f1: z outside [0, 1)");
    if (terminating) return hyp2f1_series(a, b, c, z);
    double d = c - a - b;
    if (std::fabs(d) < kIntegerTol && z >= 0.5) {
        double w = 1.0 - z;
        return hyp2f1_log_case(a, b, w, std::log(w), gamma(c) / (gamma(a) * gamma(b)));
    }
    Hyp2f1Result r = hyp2f1_series(a, b, c, z);
    r.degraded = r.degraded || z > 1.0 - 1e-6;
    return r;
}

double hyp2f1(double a, double b, double c, double z) { return hyp2f1_eval(a, b, c, z).value; }

// ---------------------------------------------------------------------------
// Legendre P, Q
// ---------------------------------------------------------------------------

Degree::Degree(double nu) : nu_(nu) {
    if (!(nu > -1.0))
        throw std::domain_error("Degree: requires nu > -1, got " + std::to_string(nu));
    cos_pi_nu_ = cospi(nu);
    sin_pi_nu_ = sinpi(nu);
    cos_half_pi_nu_ = cospi(0.5 * nu);
    gamma_ratio_ = gamma(0.5 * (1.0 + nu)) / gamma(1.0 + 0.5 * nu);
    n_ = std::lround(nu);
    is_integer_ = std::fabs(nu - static_cast<double>(n_)) < kIntegerTol;
}

namespace {

// sum_{k} ((-nu)_k (nu+1)_k / (k!)^2) z^k; exact polynomial for integer nu.
double legendre_series(double nu, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < kSeriesCap; ++k) {
        term *= (k - nu) * (nu + 1.0 + k) / ((k + 1.0) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0 || std::fabs(term) <= 1e-17 * std::fabs(sum)) return sum;
    }
    throw NonConvergenceError("legendre_p: series cap reached", sum, std::fabs(term),
                              kSeriesCap);
}

}  // namespace

double legendre_p(const Degree& d, double x, double one_minus_x, double one_plus_x) {
    if (!(one_plus_x > 0.0) || one_minus_x < 0.0)
        throw std::domain_error("legendre_p: requires -1 < x <= 1");
    if (d.is_integer() || x >= 0.0)
        return legendre_series(d.nu(), 0.5 * one_minus_x);
    // x < 0, fractional nu: logarithmic connection at w = (1+x)/2.
    double w = 0.5 * one_plus_x;
    double log_w = std::log(one_plus_x) - std::log(2.0);
    // Gamma(1)/(Gamma(-nu)Gamma(1+nu)) = -sin(nu pi)/pi
    double pref = -d.sin_pi_nu() / kPi;
    return hyp2f1_log_case(-d.nu(), d.nu() + 1.0, w, log_w, pref).value;
}

double legendre_p(const Degree& d, double x) {
    return legendre_p(d, x, 1.0 - x, 1.0 + x);
}

double legendre_q(const Degree& d, double x, double one_minus_x, double one_plus_x) {
    if (!(one_minus_x > 0.0 && one_plus_x > 0.0))
        throw std::domain_error("legendre_q: requires -1 < x < 1");
    double s = d.sin_pi_nu();
    if (std::fabs(s) < 1e-8) {
        // Eq. defining Q_nu is 0/0 at integer degree; closed forms for n = 0, 1.
        long n = d.integer_value();
        double half_log = 0.5 * (std::log(one_plus_x) - std::log(one_minus_x));
        if (n == 0) return half_log;
        if (n == 1) return x * half_log - 1.0;
        throw std::domain_error("legendre_q: degenerate degree (integer nu, no closed form)");
    }
    double pp = legendre_p(d, x, one_minus_x, one_plus_x);
    double pm = legendre_p(d, -x, one_plus_x, one_minus_x);
    return kPi / (2.0 * s) * (d.cos_pi_nu() * pp - pm);
}

double legendre_q(const Degree& d, double x) {
    return legendre_q(d, x, 1.0 - x, 1.0 + x);
}

double p_nu_zero(const Degree& d) {
    return d.cos_half_pi_nu() * d.gamma_ratio() / std::sqrt(kPi);
}

// ---------------------------------------------------------------------------
// Complete elliptic integrals
// ---------------------------------------------------------------------------

double ellip_k_m(double m, double mc) {
    if (m < 0.0 || !(mc > 0.0))
        throw std::domain_error("ellip_k_m: requires m >= 0 and mc > 0");
    if (m == 0.0) return 0.5 * kPi;
    double a = 1.0, b = std::sqrt(mc);
    for (int i = 0; i < 64; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        if (std::fabs(a - b) <= 4e-16 * a) return 0.5 * kPi / a;
    }
    throw NonConvergenceError("ellip_k_m: AGM did not converge");
}

double ellip_e_m(double m, double mc) {
    if (m < 0.0 || mc < 0.0)
        throw std::domain_error("ellip_e_m: requires m, mc >= 0");
    if (mc == 0.0) return 1.0;
    if (m == 0.0) return 0.5 * kPi;
    double a = 1.0, b = std::sqrt(mc);
    double csum = 0.5 * m;  // 2^{-1} c_0^2, c_0 = sqrt(m)
    double pow2 = 0.5;
    for (int i = 0; i < 64; ++i) {
        double c = 0.5 * (a - b);
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        csum += pow2 * c * c;
        if (std::fabs(c) <= 4e-16 * a)
            return 0.5 * kPi / a * (1.0 - csum);
    }
    throw NonConvergenceError("ellip_e_m: AGM did not converge");
}

double ellip_k(double k) {
    if (!(k >= 0.0) || k > 1.0 - 1e-16)
        throw std::domain_error("ellip_k: requires 0 <= k < 1");
    return ellip_k_m(k * k, (1.0 - k) * (1.0 + k));
}

double ellip_e(double k) {
    if (!(k >= 0.0) || k > 1.0)
        throw std::domain_error("ellip_e: requires 0 <= k <= 1");
    if (k == 1.0) return 1.0;
    return ellip_e_m(k * k, (1.0 - k) * (1.0 + k));
}

// ---------------------------------------------------------------------------
// Conical functions
// ---------------------------------------------------------------------------

ConicalParam::ConicalParam(double eta, double theta) : eta(eta), theta(theta) {
    if (!(eta >= 0.0) || !std::isfinite(eta))
        throw std::domain_error("ConicalParam: requires finite eta >= 0");
    if (!(theta >= 0.0 && theta <= 0.5 * kPi + 1e-12))
        throw std::domain_error("ConicalParam: requires theta in [0, pi/2]");
}

namespace {

double conical_series(double eta, double theta) {
    double s = std::sin(0.5 * theta);
    double s2 = s * s;
    double eta4 = 4.0 * eta * eta;
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < kSeriesCap; ++k) {
        double odd = 2.0 * k - 1.0;
        double ratio = (eta4 + odd * odd) / (4.0 * static_cast<double>(k) * k) * s2;
        term *= ratio;
        sum += term;
        // once the term ratio is below 1 it stays below 1; geometric tail bound
        if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-13 * sum) return sum;
    }
    throw NonConvergenceError("conical_p: series cap reached", sum, term, kSeriesCap);
}

}  // namespace

double conical_p(const ConicalParam& p) { return conical_series(p.eta, p.theta); }

double conical_p_reflected(const ConicalParam& p) {
    return conical_series(p.eta, kPi - p.theta);
}

// ---------------------------------------------------------------------------
// Modified Bessel I0, K0
// ---------------------------------------------------------------------------

namespace {

double i0_series(double x) {
    double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < kSeriesCap; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term <= 1e-17 * sum) return sum;
    }
    throw NonConvergenceError("bessel_i0: series cap reached", sum, term, kSeriesCap);
}

// Asymptotic sum for e^{-x} I0(x) sqrt(2 pi x): 1 + sum_k prod_j (2j-1)^2 / (k! (8x)^k)
double i0_asym_scaled(double x) {
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
        double odd = 2.0 * k - 1.0;
        double next = term * odd * odd / (8.0 * k * x);
        if (next >= term) break;  // optimal truncation
        term = next;
        sum += term;
        if (term <= 1e-17 * sum) break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

// K0 via the Steed/Thompson-Barnett continued fraction (order 0), x > 2.
double k0_cf2(double x) {
    constexpr double eps = 4e-16;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kSeriesCap; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) <= eps)
            return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    }
    throw NonConvergenceError("bessel_k0: continued fraction cap reached");
}

}  // namespace

double bessel_i0(double x) {
    x = std::fabs(x);
    if (x < 18.0) return i0_series(x);
    if (x > 709.0) throw std::domain_error("bessel_i0: overflow; use bessel_i0_scaled");
    return i0_asym_scaled(x) * std::exp(x);
}

double bessel_i0_scaled(double x) {
    x = std::fabs(x);
    if (x < 18.0) return i0_series(x) * std::exp(-x);
    return i0_asym_scaled(x);
}

double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k0: requires x > 0");
    if (x > 4.0) return k0_cf2(x);
    // ascending series: K0 = -(ln(x/2)+gamma) I0(x) + sum_k H_k (x^2/4)^k/(k!)^2
    double q = 0.25 * x * x;
    double term = 1.0, hk = 0.0, sum = 0.0;
    for (int k = 1; k < kSeriesCap; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        double add = term * hk;
        sum += add;
        if (add <= 1e-17 * sum) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0_series(x) + sum;
}

}  // namespace legint
