#include "recip/kernels.hpp"

#include <algorithm>

namespace recip::kernels::scalar {

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::int64_t>(a[i]) * b[i];
    return acc;
}

std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value) {
    std::size_t count = 0;
    for (auto v : values) count += (v == value);
    return count;
}

void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out) {
    const std::size_t len = std::min(in.size(), out.size());
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t s = in[i] + c;
        out[i] = s >= n ? s - n : s;
    }
}

} // namespace recip::kernels::scalar
