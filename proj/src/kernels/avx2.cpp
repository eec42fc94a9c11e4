#include "recip/kernels.hpp"

#include <algorithm>

#include <immintrin.h>

namespace recip::kernels::avx2 {

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    const std::size_t n = std::min(a.size(), b.size());
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
        // Even lanes, then odd lanes shifted down; both as signed 64-bit products.
        acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
        acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
    return total;
}

std::size_t count_eq_u32(std::span<const std::uint32_t> values, std::uint32_t value) {
    const std::size_t n = values.size();
    const __m256i target = _mm256_set1_epi32(static_cast<int>(value));
    std::size_t total = 0;
    std::size_t i = 0;
    while (i + 8 <= n) {
        // Lane counters stay far below 2^31 within one block.
        const std::size_t block_end = std::min(n - (n - i) % 8, i + (std::size_t{1} << 30) * 8);
        __m256i acc = _mm256_setzero_si256();
        for (; i < block_end; i += 8) {
            const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
            acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(v, target));
        }
        alignas(32) std::uint32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        for (auto l : lanes) total += l;
    }
    for (; i < n; ++i) total += (values[i] == value);
    return total;
}

void add_mod_u32(std::span<const std::uint32_t> in, std::uint32_t c, std::uint32_t n, std::span<std::uint32_t> out) {
    const std::size_t len = std::min(in.size(), out.size());
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
        const __m256i s = _mm256_add_epi32(v, vc);
        // s - n wraps above s exactly when s < n.
        const __m256i r = _mm256_min_epu32(s, _mm256_sub_epi32(s, vn));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), r);
    }
    for (; i < len; ++i) {
        const std::uint32_t s = in[i] + c;
        out[i] = s >= n ? s - n : s;
    }
}

} // namespace recip::kernels::avx2
