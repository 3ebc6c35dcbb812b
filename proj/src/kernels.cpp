#include "cubefit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace cubefit::kernels {

namespace {
constexpr std::size_t kMinBlock = 1024;
constexpr std::size_t kMaxBlocks = 256;

inline std::size_t block_size(std::size_t n) {
    const std::size_t b = (n + kMaxBlocks - 1) / kMaxBlocks;
    return std::max(kMinBlock, b);
}
}  // namespace

std::size_t det_block_count(std::size_t n) {
    if (n == 0) return 0;
    const std::size_t b = block_size(n);
    return (n + b - 1) / b;
}

double det_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    const std::size_t b = block_size(n);
    const std::size_t nb = (n + b - 1) / b;
    double partial[kMaxBlocks];
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ib = 0; ib < static_cast<std::ptrdiff_t>(nb); ++ib) {
        const std::size_t lo = static_cast<std::size_t>(ib) * b;
        const std::size_t hi = std::min(lo + b, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        partial[ib] = s;
    }
    double total = 0.0;
    for (std::size_t ib = 0; ib < nb; ++ib) total += partial[ib];
    return total;
}

double det_dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    const std::size_t bs = block_size(n);
    const std::size_t nb = (n + bs - 1) / bs;
    double partial[kMaxBlocks];
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ib = 0; ib < static_cast<std::ptrdiff_t>(nb); ++ib) {
        const std::size_t lo = static_cast<std::size_t>(ib) * bs;
        const std::size_t hi = std::min(lo + bs, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[ib] = s;
    }
    double total = 0.0;
    for (std::size_t ib = 0; ib < nb; ++ib) total += partial[ib];
    return total;
}

double det_dot_w(std::span<const double> a, std::span<const double> w,
                 std::span<const double> b) {
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    const std::size_t bs = block_size(n);
    const std::size_t nb = (n + bs - 1) / bs;
    double partial[kMaxBlocks];
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ib = 0; ib < static_cast<std::ptrdiff_t>(nb); ++ib) {
        const std::size_t lo = static_cast<std::size_t>(ib) * bs;
        const std::size_t hi = std::min(lo + bs, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * w[i] * b[i];
        partial[ib] = s;
    }
    double total = 0.0;
    for (std::size_t ib = 0; ib < nb; ++ib) total += partial[ib];
    return total;
}

double det_norm_sq_w(std::span<const double> r, std::span<const double> w) {
    return det_dot_w(r, w, r);
}

namespace serial {

double sum(std::span<const double> v) {
    // Same block fold as det_sum, single-threaded.
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    const std::size_t b = block_size(n);
    double total = 0.0;
    for (std::size_t lo = 0; lo < n; lo += b) {
        const std::size_t hi = std::min(lo + b, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        total += s;
    }
    return total;
}

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    const std::size_t bs = block_size(n);
    double total = 0.0;
    for (std::size_t lo = 0; lo < n; lo += bs) {
        const std::size_t hi = std::min(lo + bs, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        total += s;
    }
    return total;
}

double dot_w(std::span<const double> a, std::span<const double> w,
             std::span<const double> b) {
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    const std::size_t bs = block_size(n);
    double total = 0.0;
    for (std::size_t lo = 0; lo < n; lo += bs) {
        const std::size_t hi = std::min(lo + bs, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * w[i] * b[i];
        total += s;
    }
    return total;
}

double norm_sq_w(std::span<const double> r, std::span<const double> w) {
    return dot_w(r, w, r);
}

}  // namespace serial

}  // namespace cubefit::kernels
