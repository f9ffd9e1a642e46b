#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rephom/elimination.hpp"
#include "rephom/fq_dense.hpp"
#include "rephom/rng.hpp"
#include "rephom/simd/modq_kernels.hpp"

using namespace rephom;

namespace {

std::vector<std::uint32_t> random_vec(SplitMix64& rng, std::size_t n, std::uint32_t q) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng.next() % q);
    return v;
}

} // namespace

TEST_CASE("every available backend matches the scalar reference") {
    const auto& scalar = simd::scalar_kernels();
    const std::uint32_t primes[] = {3, 5, 13, 257, 65537, 1000003, 2147483647u};
    SplitMix64 rng(99);
    for (std::uint32_t q : primes) {
        for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{8}, std::size_t{33},
                              std::size_t{200}}) {
            auto x = random_vec(rng, n, q);
            auto y = random_vec(rng, n, q);
            const std::uint32_t a = static_cast<std::uint32_t>(rng.next() % q);
            const std::uint32_t b = static_cast<std::uint32_t>(rng.next() % q);

            auto y_ref = y;
            scalar.axpy(y_ref.data(), x.data(), a, n, q);
            if (const auto* avx2 = simd::avx2_kernels()) {
                auto y_avx = y;
                avx2->axpy(y_avx.data(), x.data(), a, n, q);
                CHECK(y_avx == y_ref);
            }

            auto z_ref = y;
            scalar.axpby(z_ref.data(), x.data(), a, b, n, q);
            if (const auto* avx2 = simd::avx2_kernels()) {
                auto z_avx = y;
                avx2->axpby(z_avx.data(), x.data(), a, b, n, q);
                CHECK(z_avx == z_ref);
            }

            auto s_ref = y;
            scalar.scale(s_ref.data(), a, n, q);
            if (const auto* avx2 = simd::avx2_kernels()) {
                auto s_avx = y;
                avx2->scale(s_avx.data(), a, n, q);
                CHECK(s_avx == s_ref);
            }
        }
    }
}

TEST_CASE("q = 2 falls back safely in every backend") {
    SplitMix64 rng(5);
    auto x = random_vec(rng, 20, 2);
    auto y = random_vec(rng, 20, 2);
    auto y_ref = y;
    simd::scalar_kernels().axpy(y_ref.data(), x.data(), 1, 20, 2);
    if (const auto* avx2 = simd::avx2_kernels()) {
        auto y_avx = y;
        avx2->axpy(y_avx.data(), x.data(), 1, 20, 2);
        CHECK(y_avx == y_ref);
    }
}

TEST_CASE("dense F_q elimination equals the generic sparse path") {
    SplitMix64 rng(123);
    const std::uint32_t primes[] = {5, 13, 10007};
    for (std::uint32_t q : primes) {
        PrimeField f(q);
        for (int trial = 0; trial < 25; ++trial) {
            const int rows = 2 + static_cast<int>(rng.below(10));
            const int cols = 2 + static_cast<int>(rng.below(10));
            SparseMat<std::uint32_t> m(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    if (rng.below(10) < 6) m.set(f, r, c, static_cast<std::uint32_t>(rng.next() % q));
            CHECK(fq_rank(f, m) == rank_generic(f, m));
            auto dense_kernel = fq_kernel_basis(f, m);
            auto generic_kernel = kernel_basis_generic(f, m);
            CHECK(dense_kernel == generic_kernel);
        }
    }
}

TEST_CASE("backend forcing produces identical elimination results") {
    PrimeField f(10007);
    SplitMix64 rng(7);
    SparseMat<std::uint32_t> m(12, 17);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (rng.below(2) == 0) m.set(f, r, c, static_cast<std::uint32_t>(rng.next() % 10007));

    REQUIRE(simd::force_backend("scalar"));
    const int rank_scalar = fq_rank(f, m);
    auto kernel_scalar = fq_kernel_basis(f, m);

    for (const auto& name : simd::available_backends()) {
        REQUIRE(simd::force_backend(name));
        CHECK(fq_rank(f, m) == rank_scalar);
        CHECK(fq_kernel_basis(f, m) == kernel_scalar);
    }
    simd::force_backend("auto");
}
