#include <atomic>
#include <cstdlib>
#include <cstring>

#include "listnet/kernels.hpp"

namespace listnet::kernels {

#if LISTNET_BUILD_AVX2
const Ops& avx2_ops() noexcept;  // defined in kernels_avx2.cpp
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if LISTNET_BUILD_AVX2
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* table_for(Backend backend) noexcept {
    switch (backend) {
        case Backend::scalar:
            return &scalar_ops();
        case Backend::avx2:
#if LISTNET_BUILD_AVX2
            if (cpu_has_avx2()) return &avx2_ops();
#endif
            return nullptr;
    }
    return nullptr;
}

Backend detect() noexcept {
    Backend pick = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("LISTNET_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) {
            pick = Backend::scalar;
        } else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) {
            pick = Backend::avx2;
        }
    }
    return pick;
}

std::atomic<Backend>& current_backend() noexcept {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

std::atomic<const Ops*>& current_ops() noexcept {
    static std::atomic<const Ops*> ops{table_for(detect())};
    return ops;
}

}  // namespace

const Ops* ops(Backend backend) noexcept { return table_for(backend); }

bool available(Backend backend) noexcept { return table_for(backend) != nullptr; }

Backend active() noexcept { return current_backend().load(std::memory_order_relaxed); }

const char* name(Backend backend) noexcept {
    switch (backend) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool select(Backend backend) noexcept {
    const Ops* table = table_for(backend);
    if (table == nullptr) return false;
    current_ops().store(table, std::memory_order_relaxed);
    current_backend().store(backend, std::memory_order_relaxed);
    return true;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return current_ops().load(std::memory_order_relaxed)->dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    current_ops().load(std::memory_order_relaxed)->axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double factor, std::span<double> x) noexcept {
    current_ops().load(std::memory_order_relaxed)->scale(factor, x.data(), x.size());
}

double max_value(std::span<const double> x) noexcept {
    return current_ops().load(std::memory_order_relaxed)->max_value(x.data(), x.size());
}

double sum(std::span<const double> x) noexcept {
    return current_ops().load(std::memory_order_relaxed)->sum(x.data(), x.size());
}

}  // namespace listnet::kernels
