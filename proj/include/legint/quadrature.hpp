#pragma once

#include <functional>
#include <string>
#include <vector>

#include "legint/errors.hpp"

namespace legint {

// Algebraic endpoint weight (1-x)^alpha (1+x)^beta on (-1,1), or
// (1-t)^alpha t^beta on (0,1). Integrability needs alpha, beta > -1.
struct JacobiWeight {
    double alpha = 0.0;
    double beta = 0.0;
};

// Integrand callback. Besides the abscissa x (clamped 1e-15 away from the
// endpoints), the engine passes the exact distances to the two interval
// endpoints, which can be exponentially smaller than DBL_EPSILON:
//   f(x, dist_to_right_endpoint, dist_to_left_endpoint)
// On (-1,1) these are (1-x, 1+x); on (0,1) they are (1-t, t).
using EndpointFn = std::function<double(double, double, double)>;

// A weighted integrand: weight handled by the engine (in log space near the
// endpoints), f bounded up to logarithmic factors.
struct Integrand {
    EndpointFn f;
    JacobiWeight weight{};
    bool left_log = false;   // f has a log singularity at the left endpoint
    bool right_log = false;  // ... at the right endpoint
};

// Adapts a plain f(x) (no endpoint bookkeeping needed).
Integrand plain_integrand(std::function<double(double)> f, JacobiWeight w = {},
                          bool left_log = false, bool right_log = false);

enum class QuadKind { TanhSinh, GaussJacobi };

struct QuadratureRule {
    QuadKind kind = QuadKind::TanhSinh;
    int level_or_order = 12;  // tanh-sinh level cap, or Gauss-Jacobi order
    double tol = 1e-10;
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    int levels = 0;
    long evals = 0;
};

// Integral over (-1,1), split at 0 with tanh-sinh per half (or a single
// Gauss-Jacobi rule when the singularity flags are clear). Throws
// NonConvergenceError if the level cap is reached with err_est > tol, and
// std::domain_error for non-integrable weights or flagged Gauss-Jacobi input.
QuadResult integrate(const Integrand& ig, const QuadratureRule& rule);

// Same over (0,1) with weight (1-t)^alpha t^beta.
QuadResult integrate_unit(const Integrand& ig, const QuadratureRule& rule);

// (1/pi) PV int_{-1}^{1} w(xi) f(xi) / (x - xi) dxi by singularity
// subtraction: tanh-sinh on subintervals split at x, the pole log-term added
// in closed form, endpoint weights handled by the engine.
double pv_integrate(const EndpointFn& f, const JacobiWeight& w, double x, double tol,
                    int max_level = 12);
double pv_integrate(const std::function<double(double)>& f, double x, double tol);

// Gauss-Jacobi nodes/weights for int_{-1}^1 (1-x)^alpha (1+x)^beta p(x) dx,
// exact for polynomials p up to degree 2n-1.
struct GaussJacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussJacobiRule gauss_jacobi(int n, double alpha, double beta);

}  // namespace legint
