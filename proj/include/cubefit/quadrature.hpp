#pragma once

#include <functional>
#include <vector>

namespace cubefit {

// Gauss-Legendre rule on [-1,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes by Newton iteration on P_n from Chebyshev-angle initial guesses;
// accurate to a few ulp for n up to several thousand.
const GaussRule& gauss_legendre(int n);

// Integral of f over [a,b] with a fixed rule.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const GaussRule& rule);

struct QuadratureResult {
    double value;
    double error_estimate;
};

// Adaptive bisection with a 15-point Gauss rule per panel.  Throws
// NumericalError carrying the achieved tolerance when the depth cap is hit
// before reaching abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth = 36);

}  // namespace cubefit
