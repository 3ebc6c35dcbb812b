#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace cubefit {

// Fixed-order blocked reductions.
//
// Every reduction below partitions its range into blocks whose boundaries
// depend only on the range length, sums each block serially, and folds the
// block partials in index order.  The floating point operation sequence is
// therefore identical for any number of OpenMP threads, and parallel results
// are bitwise equal to the serial reference in kernels::serial.

namespace kernels {

// Block partition used by all deterministic reductions.
std::size_t det_block_count(std::size_t n);

double det_sum(std::span<const double> v);
double det_dot(std::span<const double> a, std::span<const double> b);
// sum_i a[i]*w[i]*b[i]
double det_dot_w(std::span<const double> a, std::span<const double> w,
                 std::span<const double> b);
// sum_i w[i]*r[i]^2
double det_norm_sq_w(std::span<const double> r, std::span<const double> w);

// Plain serial loops, kept as the reference implementations for tests and
// the kernel benchmark.
namespace serial {
double sum(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double dot_w(std::span<const double> a, std::span<const double> w,
             std::span<const double> b);
double norm_sq_w(std::span<const double> r, std::span<const double> w);
}  // namespace serial

}  // namespace kernels

// Error-free transforms.  Require round-to-nearest and no fp contraction.
struct TwoSum {
    double hi, lo;
};

inline TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline TwoSum two_prod(double a, double b) {
    const double p = a * b;
    const double err = std::fma(a, b, -p);
    return {p, err};
}

}  // namespace cubefit
