#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "listnet/kernels.hpp"
#include "listnet/rng.hpp"

using namespace listnet;

namespace {

std::vector<double> random_vector(std::mt19937_64& gen, std::size_t n, double magnitude) {
    std::vector<double> out(n);
    for (double& v : out) v = uniform_range(gen, -magnitude, magnitude);
    return out;
}

bool close(double a, double b, double rtol = 1e-12, double atol = 1e-12) {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 32, 33, 46, 100, 1000};

}  // namespace

TEST_CASE("scalar ops exist and the active backend is selectable") {
    CHECK(kernels::available(kernels::Backend::scalar));
    CHECK(kernels::select(kernels::Backend::scalar));
    CHECK(kernels::active() == kernels::Backend::scalar);
    // restore the auto-detected default for the rest of the binary
    if (kernels::available(kernels::Backend::avx2))
        CHECK(kernels::select(kernels::Backend::avx2));
}

TEST_CASE("simd backends match the scalar reference") {
    const kernels::Ops& reference = kernels::scalar_ops();
    const kernels::Ops* simd = kernels::ops(kernels::Backend::avx2);
    if (simd == nullptr) {
        MESSAGE("avx2 backend unavailable on this machine; equivalence skipped");
        return;
    }

    std::mt19937_64 gen(20240813);
    for (std::size_t n : kSizes) {
        for (double magnitude : {1.0, 1e3}) {
            const std::vector<double> a = random_vector(gen, n, magnitude);
            const std::vector<double> b = random_vector(gen, n, magnitude);

            CAPTURE(n);
            CAPTURE(magnitude);
            CHECK(close(reference.dot(a.data(), b.data(), n), simd->dot(a.data(), b.data(), n),
                        1e-12, 1e-9 * magnitude));
            if (n > 0) {
                CHECK(reference.max_value(a.data(), n) == simd->max_value(a.data(), n));
                CHECK(close(reference.sum(a.data(), n), simd->sum(a.data(), n), 1e-12,
                            1e-9 * magnitude));
            }

            std::vector<double> y_ref = b;
            std::vector<double> y_simd = b;
            const double alpha = uniform_range(gen, -2.0, 2.0);
            reference.axpy(alpha, a.data(), y_ref.data(), n);
            simd->axpy(alpha, a.data(), y_simd.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(close(y_ref[i], y_simd[i], 1e-13, 1e-12 * magnitude));

            std::vector<double> s_ref = a;
            std::vector<double> s_simd = a;
            reference.scale(alpha, s_ref.data(), n);
            simd->scale(alpha, s_simd.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(s_ref[i] == s_simd[i]);
        }
    }
}

TEST_CASE("dot agrees with a transparent accumulation") {
    std::mt19937_64 gen(7);
    for (std::size_t n : {1u, 5u, 46u, 129u}) {
        const std::vector<double> a = random_vector(gen, n, 3.0);
        const std::vector<double> b = random_vector(gen, n, 3.0);
        long double expected = 0.0L;
        for (std::size_t i = 0; i < n; ++i)
            expected += static_cast<long double>(a[i]) * static_cast<long double>(b[i]);
        CHECK(close(kernels::dot(a, b), static_cast<double>(expected), 1e-12, 1e-12));
    }
}

TEST_CASE("axpy is the elementwise update it claims to be") {
    std::mt19937_64 gen(11);
    const std::vector<double> x = random_vector(gen, 46, 1.0);
    std::vector<double> y = random_vector(gen, 46, 1.0);
    const std::vector<double> before = y;
    kernels::axpy(0.5, x, y);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(y[i] == before[i] + 0.5 * x[i]);
}

TEST_CASE("max_value picks the largest element") {
    std::vector<double> v{-4.0, 2.5, 2.5, -100.0, 2.4999};
    CHECK(kernels::max_value(v) == 2.5);
    v.assign({-3.0});
    CHECK(kernels::max_value(v) == -3.0);
}
