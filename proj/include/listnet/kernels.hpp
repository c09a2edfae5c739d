#pragma once

#include <cstddef>
#include <span>

// Dense double-precision kernels behind the score/gradient inner loops.
// A scalar reference implementation always exists; on x86-64 an AVX2+FMA
// variant is compiled in and selected at runtime when the CPU supports it.
// The environment variable LISTNET_KERNEL (values: scalar, avx2) overrides
// the automatic pick at startup.

namespace listnet::kernels {

enum class Backend { scalar, avx2 };

/// Raw kernel table. Exposed so equivalence tests can pit backends against
/// each other regardless of which one is active.
struct Ops {
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    void (*scale)(double factor, double* x, std::size_t n);
    double (*max_value)(const double* x, std::size_t n);  // n must be > 0
    double (*sum)(const double* x, std::size_t n);
};

const Ops& scalar_ops() noexcept;

/// Table for `backend`, or nullptr when it is not compiled in / not
/// supported by this CPU.
const Ops* ops(Backend backend) noexcept;

bool available(Backend backend) noexcept;
Backend active() noexcept;
const char* name(Backend backend) noexcept;

/// Switch the active backend. Returns false (and changes nothing) when the
/// backend is unavailable.
bool select(Backend backend) noexcept;

double dot(std::span<const double> a, std::span<const double> b) noexcept;
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;
void scale(double factor, std::span<double> x) noexcept;
double max_value(std::span<const double> x) noexcept;
double sum(std::span<const double> x) noexcept;

}  // namespace listnet::kernels
