#include "rephom/simd/modq_kernels.hpp"

namespace rephom::simd {

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                 std::uint32_t q) {
    const std::uint64_t a64 = a;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>((y[i] + a64 * x[i]) % q);
}

void axpby_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t b,
                  std::size_t n, std::uint32_t q) {
    const std::uint64_t a64 = a, b64 = b;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>((b64 * y[i] + a64 * x[i] % q) % q);
}

void scale_scalar(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t q) {
    const std::uint64_t a64 = a;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>(a64 * y[i] % q);
}

} // namespace

const ModqKernels& scalar_kernels() {
    static const ModqKernels k{axpy_scalar, axpby_scalar, scale_scalar, "scalar"};
    return k;
}

} // namespace rephom::simd
