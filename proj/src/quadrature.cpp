#include "legint/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "legint/specfun.hpp"

namespace legint {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kClamp = 1e-15;     // abscissa clamp distance (callback x only)
constexpr double kMaxMapExp = 353.0;  // cap on s = (pi/2) sinh t; om stays normal
constexpr int kMaxLevels = 12;

// One tanh-sinh node at t > 0 (mirrored by the engine):
//   u = tanh(s), s = (pi/2) sinh t
//   om = 1 - u = 2 e^{-2s} / (1 + e^{-2s}), computed without cancellation
//   log_w = log of the map weight (pi/2) cosh t / cosh^2(s)
struct TsNode {
    double om;
    double log_om;
    double log_w;
};

struct TsLevel {
    double h = 0.0;
    std::vector<TsNode> nodes;  // t = k*h, odd k only for levels >= 1
};

TsNode make_node(double t) {
    double s = 0.5 * kPi * std::sinh(t);
    double e2 = std::exp(-2.0 * s);
    TsNode n;
    n.om = 2.0 * e2 / (1.0 + e2);
    n.log_om = std::log(2.0) - 2.0 * s - std::log1p(e2);
    double log_cosh_s = s + std::log1p(e2) - std::log(2.0);
    n.log_w = std::log(0.5 * kPi * std::cosh(t)) - 2.0 * log_cosh_s;
    return n;
}

const std::vector<TsLevel>& ts_levels() {
    static const std::vector<TsLevel> levels = [] {
        std::vector<TsLevel> ls(kMaxLevels + 1);
        for (int lev = 0; lev <= kMaxLevels; ++lev) {
            double h = std::ldexp(1.0, -lev);
            ls[lev].h = h;
            int step = lev == 0 ? 1 : 2;
            int k = lev == 0 ? 0 : 1;
            for (;; k += step) {
                double t = k * h;
                if (0.5 * kPi * std::sinh(t) > kMaxMapExp) break;
                ls[lev].nodes.push_back(make_node(t));
            }
        }
        return ls;
    }();
    return levels;
}

struct SubResult {
    double value = 0.0;
    double err = 0.0;
    int levels = 0;
    long evals = 0;
    bool converged = false;
};

// Tanh-sinh over [a,b] of (b-x)^{alpha_b} (x-a)^{alpha_a} g(x, b-x, x-a),
// with the endpoint distances passed to g exactly.
SubResult ts_subinterval(double a, double b, double alpha_b, double alpha_a,
                         const std::function<double(double, double, double)>& g,
                         double tol, int max_level) {
    const auto& levels = ts_levels();
    max_level = std::clamp(max_level, 2, kMaxLevels);
    double r = 0.5 * (b - a);
    double log_r = std::log(r);
    double acc = 0.0;  // sum of node contributions (without h)
    long evals = 0;

    auto add_node = [&](const TsNode& n, bool positive_side) {
        // positive side: u -> +1, small distance at b; negative side mirrored.
        double d_small = r * n.om;
        double d_big = r * (2.0 - n.om);
        double db = positive_side ? d_small : d_big;
        double da = positive_side ? d_big : d_small;
        double log_db = positive_side ? log_r + n.log_om : std::log(db);
        double log_da = positive_side ? std::log(da) : log_r + n.log_om;
        double lw = n.log_w + log_r + alpha_b * log_db + alpha_a * log_da;
        if (lw < -745.0) return;  // contribution underflows
        double x = positive_side ? b - db : a + da;
        double v = std::exp(lw) * g(x, db, da);
        ++evals;
        acc += v;
    };

    SubResult res;
    double prev = 0.0;
    for (int lev = 0; lev <= max_level; ++lev) {
        const TsLevel& L = levels[lev];
        for (std::size_t i = 0; i < L.nodes.size(); ++i) {
            if (lev == 0 && i == 0) {
                // center node t = 0 (u = 0): appears once
                double x = 0.5 * (a + b);
                double lw = L.nodes[0].log_w + log_r + alpha_b * std::log(r) +
                            alpha_a * std::log(r);
                acc += std::exp(lw) * g(x, r, r);
                ++evals;
                continue;
            }
            add_node(L.nodes[i], true);
            add_node(L.nodes[i], false);
        }
        double s = L.h * acc;
        res.levels = lev;
        res.evals = evals;
        if (lev >= 3) {
            double diff = std::fabs(s - prev);
            res.err = diff;
            res.value = s;
            if (!std::isfinite(s))
                throw NonConvergenceError("tanh-sinh: non-finite sum", s, diff, lev);
            if (diff <= tol * std::max(1.0, std::fabs(s))) {
                res.converged = true;
                return res;
            }
        }
        prev = s;
        res.value = s;
    }
    return res;  // cap reached; caller decides whether to throw
}

void validate_weight(const JacobiWeight& w) {
    if (!(w.alpha > -1.0) || !(w.beta > -1.0))
        throw std::domain_error("quadrature: weight exponents must exceed -1");
}

double clamp_unit(double x) { return std::clamp(x, -1.0 + kClamp, 1.0 - kClamp); }

}  // namespace

Integrand plain_integrand(std::function<double(double)> f, JacobiWeight w, bool left_log,
                          bool right_log) {
    Integrand ig;
    ig.f = [fn = std::move(f)](double x, double, double) { return fn(x); };
    ig.weight = w;
    ig.left_log = left_log;
    ig.right_log = right_log;
    return ig;
}

namespace {

QuadResult integrate_gauss_jacobi(const Integrand& ig, const QuadratureRule& rule,
                                  bool unit_interval) {
    if (ig.left_log || ig.right_log)
        throw std::domain_error(
            "gauss-jacobi: invalid for integrands with logarithmic singularities");
    int n = std::max(2, rule.level_or_order);
    auto eval = [&](int order) {
        GaussJacobiRule r = gauss_jacobi(order, ig.weight.alpha, ig.weight.beta);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            double u = r.nodes[i];
            double om = 1.0 - u, op = 1.0 + u;
            if (unit_interval) {
                // t = (1+u)/2; extra 2^{-(1+alpha+beta)} from the mapping
                double t = 0.5 * op;
                s += r.weights[i] * ig.f(t, 0.5 * om, t);
            } else {
                s += r.weights[i] * ig.f(u, om, op);
            }
        }
        if (unit_interval)
            s *= std::exp2(-(1.0 + ig.weight.alpha + ig.weight.beta));
        return s;
    };
    double v1 = eval(n), v2 = eval(n + 8);
    QuadResult res;
    res.value = v2;
    res.err_est = std::fabs(v2 - v1);
    res.levels = n + 8;
    res.evals = 2L * n + 8;
    if (res.err_est > rule.tol * std::max(1.0, std::fabs(v2)))
        throw NonConvergenceError("gauss-jacobi: order too low for requested tol", res.value,
                                  res.err_est, n + 8);
    return res;
}

QuadResult combine(const SubResult& a, const SubResult& b, double tol) {
    QuadResult res;
    res.value = a.value + b.value;
    res.err_est = a.err + b.err;
    res.levels = std::max(a.levels, b.levels);
    res.evals = a.evals + b.evals;
    if (!a.converged || !b.converged)
        throw NonConvergenceError("tanh-sinh: level cap reached with err_est > tol", res.value,
                                  res.err_est, res.levels);
    (void)tol;
    return res;
}

}  // namespace

QuadResult integrate(const Integrand& ig, const QuadratureRule& rule) {
    validate_weight(ig.weight);
    if (rule.kind == QuadKind::GaussJacobi) return integrate_gauss_jacobi(ig, rule, false);
    double al = ig.weight.alpha, be = ig.weight.beta;
    // left half (-1, 0): (1+x)^beta singular, (1-x)^alpha smooth
    SubResult left = ts_subinterval(
        -1.0, 0.0, 0.0, be,
        [&](double x, double db, double da) {
            double om = 1.0 + db;  // 1 - x, x <= 0
            return std::pow(om, al) * ig.f(clamp_unit(x), om, da);
        },
        0.5 * rule.tol, rule.level_or_order);
    // right half (0, 1): (1-x)^alpha singular, (1+x)^beta smooth
    SubResult right = ts_subinterval(
        0.0, 1.0, al, 0.0,
        [&](double x, double db, double da) {
            double op = 1.0 + da;  // 1 + x, x >= 0
            return std::pow(op, be) * ig.f(clamp_unit(x), db, op);
        },
        0.5 * rule.tol, rule.level_or_order);
    return combine(left, right, rule.tol);
}

QuadResult integrate_unit(const Integrand& ig, const QuadratureRule& rule) {
    validate_weight(ig.weight);
    if (rule.kind == QuadKind::GaussJacobi) return integrate_gauss_jacobi(ig, rule, true);
    double al = ig.weight.alpha, be = ig.weight.beta;
    auto clamp01 = [](double t) { return std::clamp(t, kClamp, 1.0 - kClamp); };
    // (0, 1/2): t^beta singular at 0
    SubResult left = ts_subinterval(
        0.0, 0.5, 0.0, be,
        [&](double t, double db, double da) {
            double omt = 0.5 + db;  // 1 - t
            return std::pow(omt, al) * ig.f(clamp01(t), omt, da);
        },
        0.5 * rule.tol, rule.level_or_order);
    // (1/2, 1): (1-t)^alpha singular at 1
    SubResult right = ts_subinterval(
        0.5, 1.0, al, 0.0,
        [&](double t, double db, double da) {
            double tt = 0.5 + da;  // t
            return std::pow(tt, be) * ig.f(clamp01(t), db, tt);
        },
        0.5 * rule.tol, rule.level_or_order);
    return combine(left, right, rule.tol);
}

double pv_integrate(const EndpointFn& f, const JacobiWeight& w, double x, double tol,
                    int max_level) {
    validate_weight(w);
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("pv_integrate: x must lie in (-1, 1)");
    double omx = 1.0 - x, opx = 1.0 + x;
    double wx = std::pow(omx, w.alpha) * std::pow(opx, w.beta) * f(x, omx, opx);
    double mid_l = x - 0.5 * opx;  // midpoint of (-1, x)
    double mid_r = x + 0.5 * omx;  // midpoint of (x, 1)
    double piece_tol = 0.25 * tol;

    auto weighted = [&](double xi, double om, double op) {
        return std::pow(om, w.alpha) * std::pow(op, w.beta) * f(clamp_unit(xi), om, op);
    };

    // far left (-1, mid_l): full weight on (1+xi)^beta handled by the engine
    SubResult fl = ts_subinterval(
        -1.0, mid_l, 0.0, w.beta,
        [&](double xi, double db, double da) {
            double om = (1.0 - mid_l) + db;
            return std::pow(om, w.alpha) * f(clamp_unit(xi), om, da) / (x - xi);
        },
        piece_tol, max_level);
    // near left (mid_l, x): subtracted quotient; x - xi = db exactly
    SubResult nl = ts_subinterval(
        mid_l, x, 0.0, 0.0,
        [&](double xi, double db, double da) {
            double om = omx + db;
            double op = (1.0 + mid_l) + da;
            return (weighted(xi, om, op) - wx) / db;
        },
        piece_tol, max_level);
    // near right (x, mid_r): xi - x = da exactly
    SubResult nr = ts_subinterval(
        x, mid_r, 0.0, 0.0,
        [&](double xi, double db, double da) {
            double om = (1.0 - mid_r) + db;
            double op = opx + da;
            return (weighted(xi, om, op) - wx) / -da;
        },
        piece_tol, max_level);
    // far right (mid_r, 1)
    SubResult fr = ts_subinterval(
        mid_r, 1.0, w.alpha, 0.0,
        [&](double xi, double db, double da) {
            double op = (1.0 + mid_r) + da;
            return std::pow(op, w.beta) * f(clamp_unit(xi), db, op) / (x - xi);
        },
        piece_tol, max_level);

    if (!(fl.converged && nl.converged && nr.converged && fr.converged))
        throw NonConvergenceError("pv_integrate: level cap reached with err_est > tol",
                                  (fl.value + nl.value + nr.value + fr.value) / kPi,
                                  fl.err + nl.err + nr.err + fr.err,
                                  std::max({fl.levels, nl.levels, nr.levels, fr.levels}));

    double log_term = wx * (std::log(opx) - std::log(omx));
    return (fl.value + nl.value + nr.value + fr.value + log_term) / kPi;
}

double pv_integrate(const std::function<double(double)>& f, double x, double tol) {
    EndpointFn fn = [&](double xi, double, double) { return f(xi); };
    return pv_integrate(fn, JacobiWeight{}, x, tol);
}

// ---------------------------------------------------------------------------
// Gauss-Jacobi nodes and weights
// ---------------------------------------------------------------------------

namespace {

// P_n^{(a,b)}(x) and P_{n-1} by the standard three-term recurrence.
void jacobi_pn(int n, double a, double b, double x, double& pn, double& pnm1) {
    double p0 = 1.0;
    if (n == 0) {
        pn = p0;
        pnm1 = 0.0;
        return;
    }
    double p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= n; ++k) {
        double s = 2.0 * k + a + b;
        double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        double c2 = (s - 1.0) * (a * a - b * b);
        double c3 = (s - 1.0) * s * (s - 2.0);
        double p2 = ((c2 + c3 * x) * p1 - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pnm1 = p0;
}

double jacobi_dpn(int n, double a, double b, double x, double pn, double pnm1) {
    double s = 2.0 * n + a + b;
    return (n * (a - b - s * x) * pn + 2.0 * (n + a) * (n + b) * pnm1) /
           (s * (1.0 - x * x));
}

}  // namespace

GaussJacobiRule gauss_jacobi(int n, double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("gauss_jacobi: weight exponents must exceed -1");
    if (n < 2 || n > 256) throw std::domain_error("gauss_jacobi: order must be in [2, 256]");

    auto pval = [&](double x) {
        double pn, pm;
        jacobi_pn(n, alpha, beta, x, pn, pm);
        return pn;
    };

    // bracket the n simple roots on a dense Chebyshev-style grid
    int m = 8 * n + 1;
    std::vector<double> xs(m), vs(m);
    for (int j = 0; j < m; ++j) {
        xs[j] = -std::cos(kPi * (j + 0.5) / m);
        vs[j] = pval(xs[j]);
    }
    GaussJacobiRule rule;
    for (int j = 0; j + 1 < m; ++j) {
        if (vs[j] == 0.0) {
            rule.nodes.push_back(xs[j]);
            continue;
        }
        if (vs[j] * vs[j + 1] >= 0.0) continue;
        // safeguarded Newton: fall back to bisection when a step leaves the bracket
        double lo = xs[j], hi = xs[j + 1], flo = vs[j];
        double root = 0.5 * (lo + hi);
        for (int it = 0; it < 100; ++it) {
            double pn, pm;
            jacobi_pn(n, alpha, beta, root, pn, pm);
            if (pn == 0.0) break;
            if (flo * pn <= 0.0)
                hi = root;
            else
                lo = root, flo = pn;
            double step = pn / jacobi_dpn(n, alpha, beta, root, pn, pm);
            double next = root - step;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            double moved = std::fabs(next - root);
            root = next;
            if (moved <= 1e-16 * (std::fabs(root) + 1.0)) break;
        }
        rule.nodes.push_back(root);
    }
    if (static_cast<int>(rule.nodes.size()) != n)
        throw NonConvergenceError("gauss_jacobi: failed to bracket all roots");

    double logC = (alpha + beta + 1.0) * std::log(2.0) + lgamma_pos(n + alpha + 1.0) +
                  lgamma_pos(n + beta + 1.0) - lgamma_pos(n + 1.0) -
                  lgamma_pos(n + alpha + beta + 1.0);
    double C = std::exp(logC);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = rule.nodes[i], pn, pm;
        jacobi_pn(n, alpha, beta, x, pn, pm);
        double dp = jacobi_dpn(n, alpha, beta, x, pn, pm);
        rule.weights[i] = C / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace legint
