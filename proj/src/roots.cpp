#include "cubefit/roots.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "cubefit/common.hpp"

namespace cubefit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 1/cosh(t) without overflowing cosh for large t.
inline double sech(double t) {
    const double e = std::exp(-std::abs(t));
    return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double beam_residual(double t) { return std::cos(t) - sech(t); }

double solve_tk(int k, double tol) {
    if (k < 2) throw ValidationError("solve_tk: k must be >= 2");
    if (!(tol > 0)) throw ValidationError("solve_tk: tol must be positive");

    // Bracket from the sign pattern of cos against the decaying 1/cosh.
    double lo, hi;
    if (k % 2 == 0) {
        lo = (2 * k - 1) * kPi / 2;
        hi = k * kPi;
    } else {
        lo = (k - 1) * kPi;
        hi = (2 * k - 1) * kPi / 2;
    }

    // On the bracket the residual changes sign: cos passes through 1/cosh.
    double flo = beam_residual(lo);
    double t = 0.5 * (lo + hi);
    while (hi - lo > 1e-14 * hi) {
        t = 0.5 * (lo + hi);
        const double ft = beam_residual(t);
        if ((flo <= 0) == (ft <= 0)) {
            lo = t;
            flo = ft;
        } else {
            hi = t;
        }
    }

    // Newton polish; d/dt [cos t - sech t] = -sin t + sech(t) tanh(t).
    for (int it = 0; it < 2; ++it) {
        const double s = sech(t);
        const double d = -std::sin(t) + s * std::tanh(t);
        if (d != 0.0) t -= beam_residual(t) / d;
    }

    if (std::abs(beam_residual(t)) > tol) {
        std::ostringstream msg;
        msg << "solve_tk: no convergence for k=" << k << ", last bracket ["
            << lo << ", " << hi << "], residual " << beam_residual(t);
        throw NumericalError(msg.str());
    }
    return t;
}

EigenRootTable::EigenRootTable(int kmax, double tol) : kmax_(kmax), tol_(tol) {
    if (kmax < 2) throw ValidationError("EigenRootTable: kmax must be >= 2");
    roots_.reserve(kmax - 1);
    for (int k = 2; k <= kmax; ++k) roots_.push_back(solve_tk(k, tol));
}

double EigenRootTable::root(int k) const {
    if (k < 2 || k > kmax_) throw ValidationError("EigenRootTable: index out of range");
    return roots_[k - 2];
}

const EigenRootTable& beam_roots(int kmax) {
    static std::mutex mtx;
    static std::shared_ptr<const EigenRootTable> table;
    static thread_local std::shared_ptr<const EigenRootTable> local;
    std::lock_guard<std::mutex> lock(mtx);
    if (!table || table->max_index() < kmax)
        table = std::make_shared<const EigenRootTable>(std::max(kmax, 64));
    local = table;  // keep alive for the caller's thread
    return *local;
}

}  // namespace cubefit
