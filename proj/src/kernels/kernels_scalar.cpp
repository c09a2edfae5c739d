#include "listnet/kernels.hpp"

// Reference kernels. Every SIMD variant is equivalence-tested against these.

namespace listnet::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double factor, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= factor;
}

double max_scalar(const double* x, std::size_t n) {
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (x[i] > m) m = x[i];
    return m;
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

}  // namespace

const Ops& scalar_ops() noexcept {
    static constexpr Ops ops{dot_scalar, axpy_scalar, scale_scalar, max_scalar, sum_scalar};
    return ops;
}

}  // namespace listnet::kernels
