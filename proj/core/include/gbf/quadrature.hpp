#pragma once

#include <functional>

namespace gbf::quad {

struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int subdivisions = 0; // number of panels in the final partition
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxPanels = 100000;

// Adaptive Gauss-Kronrod 7/15 on [a, b]. The rule is open (no endpoint
// evaluations), so integrable endpoint singularities are allowed.
// Throws gbf::numerical_error when the panel budget is exhausted.
IntegralResult integrate_finite(const std::function<double(double)>& f, double a,
                                double b, double tol = kDefaultTol,
                                int max_panels = kDefaultMaxPanels);

// int_a^inf f, via the map t = a + u/(1-u) onto (0,1).
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double a, double tol = kDefaultTol,
                                       int max_panels = kDefaultMaxPanels);

} // namespace gbf::quad
