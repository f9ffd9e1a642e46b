#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rephom::simd {

// Vector kernels for F_q row operations, q an odd prime < 2^31 for the
// vectorized backends (the scalar backend accepts q = 2 as well). Inputs are
// canonical representatives in [0, q). These are the inner loops of the dense
// prime-field elimination; every backend must produce identical output.
struct ModqKernels {
    // y[i] = (y[i] + a * x[i]) mod q
    void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                 std::uint32_t q);
    // y[i] = (b * y[i] + a * x[i]) mod q   (fraction-free elimination step)
    void (*axpby)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t b,
                  std::size_t n, std::uint32_t q);
    // y[i] = (a * y[i]) mod q
    void (*scale)(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t q);
    const char* name;
};

const ModqKernels& scalar_kernels();

// Null when the build or the running CPU lacks AVX2.
const ModqKernels* avx2_kernels();

// Backend chosen at first use: REPHOM_SIMD=scalar|avx2|auto overrides the
// cpuid-based default.
const ModqKernels& kernels();

// Test hook: force a backend by name ("scalar", "avx2", "auto").
// Returns false if the backend is unavailable.
bool force_backend(const std::string& name);

std::vector<std::string> available_backends();

} // namespace rephom::simd
