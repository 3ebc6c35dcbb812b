#include "cubefit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "cubefit/common.hpp"

namespace cubefit {

namespace {

GaussRule compute_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    // Roots come in +/- pairs; solve the upper half.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Evaluate P_n and P_n' by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // One clean-up step so the weight uses a consistent derivative.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw ValidationError("gauss_legendre: n must be positive");
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const GaussRule& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * s;
}

namespace {

struct AdaptiveState {
    const std::function<double(double)>& f;
    const GaussRule& rule;
    double achieved = 0.0;
    bool tolerance_met = true;
};

double adapt(AdaptiveState& st, double a, double b, double whole, double tol,
             int depth) {
    const double mid = 0.5 * (a + b);
    const double left = integrate(st.f, a, mid, st.rule);
    const double right = integrate(st.f, mid, b, st.rule);
    const double err = std::abs(left + right - whole);
    if (err <= tol || depth <= 0) {
        st.achieved += err;
        if (err > tol) st.tolerance_met = false;
        return left + right;
    }
    return adapt(st, a, mid, left, 0.5 * tol, depth - 1) +
           adapt(st, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
    if (!(abs_tol > 0)) throw ValidationError("integrate_adaptive: abs_tol must be positive");
    AdaptiveState st{f, gauss_legendre(15)};
    const double whole = integrate(f, a, b, st.rule);
    const double value = adapt(st, a, b, whole, abs_tol, max_depth);
    if (!st.tolerance_met && st.achieved > abs_tol) {
        std::ostringstream msg;
        msg << "integrate_adaptive: depth cap reached, achieved tolerance "
            << st.achieved << " > requested " << abs_tol;
        throw NumericalError(msg.str());
    }
    return {value, st.achieved};
}

}  // namespace cubefit
