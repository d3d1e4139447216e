#pragma once

#include <stdexcept>
#include <string>

namespace legint {

// Thrown when an iterative scheme (series, AGM, quadrature refinement) hits
// its cap before reaching the requested tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(const std::string& what, double value = 0.0,
                                 double err_est = 0.0, int levels = 0)
        : std::runtime_error(what), value(value), err_est(err_est), levels(levels) {}

    double value;    // best estimate at the point of failure
    double err_est;  // last error estimate
    int levels;      // refinement levels (or iterations) used
};

}  // namespace legint
