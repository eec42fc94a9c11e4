#include "recip/kernels.hpp"

#include <algorithm>

#include <arm_neon.h>

namespace recip::kernels::neon {

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    const std::size_t n = std::min(a.size(), b.size());
    int64x2_t acc_lo = vdupq_n_s64(0);
    int64x2_t acc_hi = vdupq_n_s64(0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const int32x4_t va = vld1q_s32(a.data() + i);
        const int32x4_t vb = vld1q_s32(b.data() + i);
        acc_lo = vmlal_s32(acc_lo, vget_low_s32(va), vget_low_s32(vb));
        acc_hi = vmlal_s32(acc_hi, vget_high_s32(va), vget_high_s32(vb));
    }
    std::int64_t total = vaddvq_s64(vaddq_s64(acc_lo, acc_hi));
    for (; i < n; ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
    return total;
}

std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value) {
    const std::size_t n = values.size();
    const uint32x4_t target = vdupq_n_u32(value);
    std::size_t total = 0;
    std::size_t i = 0;
    while (i + 4 <= n) {
        const std::size_t block_end = std::min(n - (n - i) % 4, i + (std::size_t{1} << 30) * 4);
        uint32x4_t acc = vdupq_n_u32(0);
        for (; i < block_end; i += 4) {
            // Equal lanes are all-ones; subtracting adds one.
            acc = vsubq_u32(acc, vceqq_u32(vld1q_u32(values.data() + i), target));
        }
        total += vaddvq_u32(acc);
    }
    for (; i < n; ++i) total += (values[i] == value);
    return total;
}

void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out) {
    const std::size_t len = std::min(in.size(), out.size());
    const uint32x4_t vc = vdupq_n_u32(c);
    const uint32x4_t vn = vdupq_n_u32(n);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const uint32x4_t s = vaddq_u32(vld1q_u32(in.data() + i), vc);
        vst1q_u32(out.data() + i, vminq_u32(s, vsubq_u32(s, vn)));
    }
    for (; i < len; ++i) {
        const std::uint32_t s = in[i] + c;
        out[i] = s >= n ? s - n : s;
    }
}

} // namespace recip::kernels::neon
