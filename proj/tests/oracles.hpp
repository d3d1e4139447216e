#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracles {

// K by the arithmetic-geometric mean; checks the hypergeometric route.
// Parameter form takes the complement mc = 1 - m exactly.
inline double agm_k_mc(double mc) {
    double a = 1.0, b = std::sqrt(mc);
    for (int i = 0; i < 64; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        if (std::fabs(a - b) <= 4e-16 * a) return 1.5707963267948966192 / a;
    }
    throw std::runtime_error("agm_k failed");
}

inline double agm_k(double k) { return agm_k_mc((1.0 - k) * (1.0 + k)); }

// Moments M_m = int_{-1}^1 (1-x)^alpha (1+x)^beta x^m dx by the stable
// two-term recursion  (alpha+beta+m+1) M_m = (beta-alpha) M_{m-1} + (m-1) M_{m-2},
// seeded with M_0 = 2^{alpha+beta+1} B(alpha+1, beta+1).
inline std::vector<double> jacobi_moments(double alpha, double beta, int mmax) {
    double m0 = std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                         std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
    std::vector<double> m(mmax + 1);
    m[0] = m0;
    if (mmax >= 1) m[1] = (beta - alpha) * m0 / (alpha + beta + 2.0);
    for (int k = 2; k <= mmax; ++k)
        m[k] = ((beta - alpha) * m[k - 1] + (k - 1) * m[k - 2]) / (alpha + beta + k + 1.0);
    return m;
}

// Plain ascending series for I0 and K0 (small x), independent of the
// library's branch selection.
inline double i0_series(double x) {
    double q = 0.25 * x * x, term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

inline double k0_series(double x) {
    constexpr double euler = 0.57721566490153286061;
    double q = 0.25 * x * x, term = 1.0, hk = 0.0, sum = 0.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        sum += term * hk;
        if (term * hk < 1e-18 * sum) break;
    }
    return -(std::log(0.5 * x) + euler) * i0_series(x) + sum;
}

// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double xb = 0, yb = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xb += x[i];
        yb += y[i];
    }
    xb /= x.size();
    yb /= y.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - xb) * (y[i] - yb);
        den += (x[i] - xb) * (x[i] - xb);
    }
    return num / den;
}

}  // namespace oracles
