#pragma once

// Data-parallel inner loops used by the counting code. Each kernel has a
// scalar reference and, when built for the host, an AVX2 or NEON variant.
// The dispatching entry points pick the widest variant the CPU supports.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace recip::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;
/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
/// The variant the dispatching entry points currently use.
Isa active_isa() noexcept;
/// Overrides dispatch; returns false (and changes nothing) if unavailable.
bool set_active_isa(Isa isa) noexcept;

/// sum a[i] * b[i] over min(a.size(), b.size()) entries, exact in 64 bits.
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

/// Number of entries equal to value.
std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value);

/// out[i] = (in[i] + c) mod n. Requires in[i] < n, c < n, n <= 2^31.
void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out);

namespace scalar {
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value);
void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out);
} // namespace scalar

// Only defined when the matching variant is compiled; check isa_available first.
namespace avx2 {
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value);
void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out);
} // namespace avx2

namespace neon {
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value);
void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out);
} // namespace neon

} // namespace recip::kernels
