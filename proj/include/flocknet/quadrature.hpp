#pragma once

#include <functional>

namespace flocknet {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // sum of accepted panel estimates
    int panels = 0;
};

// Adaptive Gaussian quadrature with interval bisection. Each interval is
// integrated with a 7-point Gauss-Legendre rule; the error estimate compares
// the whole-interval rule against the two-half refinement. Subdivision stops
// once the local estimate fits the proportional share of `abs_tol`.
// Throws QuadratureError when `max_subdiv` subdivisions cannot certify the
// tolerance; the exception carries the achieved estimate.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol = 1e-10,
                                    int max_subdiv = 10000);

// Single-panel 7-point Gauss-Legendre rule on [a, b] (no error control).
double gauss7(const std::function<double(double)>& f, double a, double b);

}  // namespace flocknet
