#pragma once

#include <vector>

namespace cubefit {

// Positive solutions t_2 < t_3 < ... of cosh(t)cos(t) = 1, the frequency
// equation behind the free-free beam eigenfunctions.  The k-th root lies in
// ((2k-1)pi/2, k*pi) for even k and ((k-1)pi, (2k-1)pi/2) for odd k, and
// approaches (2k-1)pi/2 exponentially fast.

// Residual in the overflow-safe form cos(t) - 1/cosh(t).
double beam_residual(double t);

// Bracketed bisection to width 1e-14 followed by two Newton polish steps.
// Throws NumericalError (carrying the last bracket) if the residual cannot
// be brought below tol.
double solve_tk(int k, double tol = 1e-12);

class EigenRootTable {
public:
    // Roots t_2..t_kmax; tolerance is the guaranteed residual bound.
    explicit EigenRootTable(int kmax, double tol = 1e-12);

    double root(int k) const;          // k >= 2
    int max_index() const { return kmax_; }
    double tolerance() const { return tol_; }
    const std::vector<double>& roots() const { return roots_; }

private:
    int kmax_;
    double tol_;
    std::vector<double> roots_;  // roots_[i] = t_{i+2}
};

// Shared table, grown on demand; thread-safe.
const EigenRootTable& beam_roots(int kmax);

}  // namespace cubefit
