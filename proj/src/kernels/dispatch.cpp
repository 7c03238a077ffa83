#include <cstdlib>
#include <string_view>

#include "walkper/kernels.hpp"

namespace walkper::kernels {

const KernelTable* avx2_kernels_compiled();

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& select() {
    if (const char* forced = std::getenv("WALKPER_SIMD"); forced && std::string_view(forced) == "scalar")
        return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable* table = cpu_has_avx2_fma() ? avx2_kernels_compiled() : nullptr;
    return table;
}

const KernelTable& active_kernels() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace walkper::kernels
