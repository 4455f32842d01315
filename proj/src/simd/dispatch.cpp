#include <atomic>
#include <cstdlib>
#include <cstring>

#include "wlct/simd/kernels.hpp"

namespace wlct::simd {

#if defined(WLCT_HAVE_AVX2)
const KernelTable* avx2_table_unchecked() noexcept;
#endif

std::string_view to_string(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

const KernelTable* avx2_table() noexcept {
#if defined(WLCT_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported ? avx2_table_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable* initial_table() noexcept {
    const char* env = std::getenv("WLCT_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar_table();
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
}

std::atomic<const KernelTable*>& current() noexcept {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

bool select(Backend b) noexcept {
    const KernelTable* t = b == Backend::Scalar ? &scalar_table() : avx2_table();
    if (t == nullptr) return false;
    current().store(t, std::memory_order_release);
    return true;
}

}  // namespace wlct::simd
