#pragma once

#include <functional>

namespace fpquad {

struct QuadOptions {
    double abs_tol = 1e-12;
    int max_intervals = 40000;
};

// Adaptive Gauss-Kronrod (G7,K15) quadrature on [a,b]: globally adaptive
// bisection of the interval with the largest |K15 - G7| estimate until the
// total estimate drops below abs_tol. Deterministic (fixed tie-breaking).
// Throws ConvergenceError when the interval budget is exhausted while the
// estimate is still above tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadOptions& opt = {});

} // namespace fpquad
