#include "rephom/simd/modq_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace rephom::simd {

const ModqKernels* avx2_kernels_impl(); // defined in modq_avx2.cpp

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<const ModqKernels*> g_active{nullptr};

const ModqKernels* pick_default() {
    if (const char* env = std::getenv("REPHOM_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
        if (std::strcmp(env, "avx2") == 0 && avx2_kernels()) return avx2_kernels();
        // "auto" or unrecognized: fall through to detection.
    }
    if (const ModqKernels* k = avx2_kernels()) return k;
    return &scalar_kernels();
}

} // namespace

const ModqKernels* avx2_kernels() {
    if (!cpu_has_avx2()) return nullptr;
    return avx2_kernels_impl();
}

const ModqKernels& kernels() {
    const ModqKernels* k = g_active.load(std::memory_order_acquire);
    if (!k) {
        k = pick_default();
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

bool force_backend(const std::string& name) {
    if (name == "scalar") {
        g_active.store(&scalar_kernels(), std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        if (const ModqKernels* k = avx2_kernels()) {
            g_active.store(k, std::memory_order_release);
            return true;
        }
        return false;
    }
    if (name == "auto") {
        g_active.store(pick_default(), std::memory_order_release);
        return true;
    }
    return false;
}

std::vector<std::string> available_backends() {
    std::vector<std::string> out{"scalar"};
    if (avx2_kernels()) out.emplace_back("avx2");
    return out;
}

} // namespace rephom::simd
