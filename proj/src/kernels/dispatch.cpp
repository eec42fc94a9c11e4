#include "recip/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace recip::kernels {

namespace {

Isa detect() noexcept {
    // RECIP_ISA=scalar pins the reference kernels.
    if (const char* env = std::getenv("RECIP_ISA"); env != nullptr && std::string_view(env) == "scalar")
        return Isa::scalar;
#if defined(RECIP_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#elif defined(RECIP_HAVE_NEON)
    return Isa::neon;
#endif
    return Isa::scalar;
}

std::atomic<Isa>& active() noexcept {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(RECIP_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
#if defined(RECIP_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
    if (!isa_available(isa)) return false;
    active().store(isa, std::memory_order_relaxed);
    return true;
}

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    switch (active_isa()) {
#if defined(RECIP_HAVE_AVX2)
    case Isa::avx2: return avx2::dot_i32(a, b);
#endif
#if defined(RECIP_HAVE_NEON)
    case Isa::neon: return neon::dot_i32(a, b);
#endif
    default: return scalar::dot_i32(a, b);
    }
}

std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value) {
    switch (active_isa()) {
#if defined(RECIP_HAVE_AVX2)
    case Isa::avx2: return avx2::count_eq_u32(values, value);
#endif
#if defined(RECIP_HAVE_NEON)
    case Isa::neon: return neon::count_eq_u32(values, value);
#endif
    default: return scalar::count_eq_u32(values, value);
    }
}

void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out) {
    switch (active_isa()) {
#if defined(RECIP_HAVE_AVX2)
    case Isa::avx2: avx2::add_mod_u32(in, c, n, out); return;
#endif
#if defined(RECIP_HAVE_NEON)
    case Isa::neon: neon::add_mod_u32(in, c, n, out); return;
#endif
    default: scalar::add_mod_u32(in, c, n, out); return;
    }
}

} // namespace recip::kernels
