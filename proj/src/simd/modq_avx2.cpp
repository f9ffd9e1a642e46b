// AVX2 backend for the F_q kernels. Montgomery multiplication in 8x32-bit
// lanes: for q odd and a, x < q < 2^31, REDC(aR * x) = a*x mod q exactly, so
// every backend returns the same canonical representatives.

#include "rephom/simd/modq_kernels.hpp"

#if defined(__AVX2__) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

namespace rephom::simd {

namespace {

struct MontCtx {
    std::uint32_t q;
    std::uint32_t qprime; // -q^{-1} mod 2^32
};

inline MontCtx mont_ctx(std::uint32_t q) {
    std::uint32_t inv = q; // Newton iteration, valid for odd q
    for (int i = 0; i < 5; ++i) inv *= 2u - q * inv;
    return MontCtx{q, static_cast<std::uint32_t>(0u - inv)};
}

inline std::uint32_t to_mont(std::uint32_t a, std::uint32_t q) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) << 32) % q);
}

// REDC of the 4 u64 lanes in T; results land in the low 32 bits of each lane.
inline __m256i redc4(__m256i T, __m256i qv64, __m256i qprime_v, __m256i mask32) {
    __m256i tlo = _mm256_and_si256(T, mask32);
    __m256i m = _mm256_and_si256(_mm256_mul_epu32(tlo, qprime_v), mask32);
    __m256i mq = _mm256_mul_epu32(m, qv64);
    __m256i t = _mm256_srli_epi64(_mm256_add_epi64(T, mq), 32);
    __m256i sub = _mm256_sub_epi64(t, qv64);
    __m256i keep = _mm256_cmpgt_epi64(qv64, t); // q > t: no subtraction
    return _mm256_blendv_epi8(sub, t, keep);
}

// (a_mont * v) mod q on 8 u32 lanes.
inline __m256i mont_mul8(__m256i v, __m256i amont_v, __m256i qv64, __m256i qprime_v,
                         __m256i mask32) {
    __m256i even = _mm256_mul_epu32(v, amont_v);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), amont_v);
    __m256i re = redc4(even, qv64, qprime_v, mask32);
    __m256i ro = redc4(odd, qv64, qprime_v, mask32);
    return _mm256_or_si256(re, _mm256_slli_epi64(ro, 32));
}

// Conditional subtract q on 8 u32 lanes; input < 2q.
inline __m256i reduce_once8(__m256i v, __m256i qv32) {
    __m256i ge = _mm256_cmpeq_epi32(_mm256_max_epu32(v, qv32), v);
    return _mm256_sub_epi32(v, _mm256_and_si256(ge, qv32));
}

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
               std::uint32_t q) {
    if ((q & 1u) == 0) {
        scalar_kernels().axpy(y, x, a, n, q);
        return;
    }
    const MontCtx ctx = mont_ctx(q);
    const std::uint32_t am = to_mont(a, q);
    const __m256i amont_v = _mm256_set1_epi32(static_cast<int>(am));
    const __m256i qv64 = _mm256_set1_epi64x(q);
    const __m256i qv32 = _mm256_set1_epi32(static_cast<int>(q));
    const __m256i qprime_v = _mm256_set1_epi32(static_cast<int>(ctx.qprime));
    const __m256i mask32 = _mm256_set1_epi64x(0xFFFFFFFFll);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i ax = mont_mul8(xv, amont_v, qv64, qprime_v, mask32);
        __m256i sum = reduce_once8(_mm256_add_epi32(ax, yv), qv32);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), sum);
    }
    if (i < n) scalar_kernels().axpy(y + i, x + i, a, n - i, q);
}

void axpby_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t b,
                std::size_t n, std::uint32_t q) {
    if ((q & 1u) == 0) {
        scalar_kernels().axpby(y, x, a, b, n, q);
        return;
    }
    const MontCtx ctx = mont_ctx(q);
    const __m256i amont_v = _mm256_set1_epi32(static_cast<int>(to_mont(a, q)));
    const __m256i bmont_v = _mm256_set1_epi32(static_cast<int>(to_mont(b, q)));
    const __m256i qv64 = _mm256_set1_epi64x(q);
    const __m256i qv32 = _mm256_set1_epi32(static_cast<int>(q));
    const __m256i qprime_v = _mm256_set1_epi32(static_cast<int>(ctx.qprime));
    const __m256i mask32 = _mm256_set1_epi64x(0xFFFFFFFFll);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i ax = mont_mul8(xv, amont_v, qv64, qprime_v, mask32);
        __m256i by = mont_mul8(yv, bmont_v, qv64, qprime_v, mask32);
        __m256i sum = reduce_once8(_mm256_add_epi32(ax, by), qv32);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), sum);
    }
    if (i < n) scalar_kernels().axpby(y + i, x + i, a, b, n - i, q);
}

void scale_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t q) {
    if ((q & 1u) == 0) {
        scalar_kernels().scale(y, a, n, q);
        return;
    }
    const MontCtx ctx = mont_ctx(q);
    const __m256i amont_v = _mm256_set1_epi32(static_cast<int>(to_mont(a, q)));
    const __m256i qv64 = _mm256_set1_epi64x(q);
    const __m256i qprime_v = _mm256_set1_epi32(static_cast<int>(ctx.qprime));
    const __m256i mask32 = _mm256_set1_epi64x(0xFFFFFFFFll);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i ay = mont_mul8(yv, amont_v, qv64, qprime_v, mask32);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), ay);
    }
    if (i < n) scalar_kernels().scale(y + i, a, n - i, q);
}

} // namespace

const ModqKernels* avx2_kernels_impl() {
    static const ModqKernels k{axpy_avx2, axpby_avx2, scale_avx2, "avx2"};
    return &k;
}

} // namespace rephom::simd

#else

namespace rephom::simd {
const ModqKernels* avx2_kernels_impl() { return nullptr; }
} // namespace rephom::simd

#endif
