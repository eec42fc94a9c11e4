#include "recip/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "recip/kernels.hpp"

namespace recip {

namespace {

void require_pair_budget(const Structure& s, std::uint64_t units) {
    if (units * units > max_bruteforce_pairs)
        throw TooLarge("brute force over " + s.descriptor() + " needs " + std::to_string(units * units) +
                       " pairs (cap 10^8)");
}

void require_table(const MTable& m, const Structure& s) {
    if (m.values.size() != s.size() || m.structure != s.descriptor())
        throw SpecMismatch("M table for " + m.structure + " used with " + s.descriptor());
}

// u + 1/u for every unit u, in unit order.
std::vector<std::uint32_t> reciprocal_sums(const Structure& s) {
    std::vector<std::uint32_t> out;
    for (Elem u : s.units()) out.push_back(s.add(u, s.inv(u)));
    return out;
}

} // namespace

std::uint32_t m_value(Elem a, const Structure& s) {
    if (!s.has_quadratic_character())
        throw UnsupportedStructure("M formula needs an odd prime modulus; use brute force on " + s.descriptor());
    const Elem disc = s.sub(s.mul(a, a), s.from_integer(4));
    return static_cast<std::uint32_t>(1 + s.chi(disc));
}

std::uint32_t m_value_bruteforce(Elem a, const Structure& s) {
    const auto sums = reciprocal_sums(s);
    return static_cast<std::uint32_t>(kernels::count_eq_u32(sums, a));
}

MTable m_table(const Structure& s) {
    if (!s.has_quadratic_character()) return m_table_bruteforce(s);
    MTable m{s.descriptor(), std::vector<std::uint32_t>(s.size())};
    for (Elem a = 0; a < s.size(); ++a) m.values[a] = m_value(a, s);
    return m;
}

MTable m_table_bruteforce(const Structure& s) {
    MTable m{s.descriptor(), std::vector<std::uint32_t>(s.size(), 0)};
    for (auto v : reciprocal_sums(s)) ++m.values[v];
    return m;
}

std::uint32_t n_value_formula(Elem t, const MTable& m, const Structure& s) {
    require_table(m, s);
    std::uint64_t acc = 0;
    for (Elem a = 0; a < s.size(); ++a) {
        if (m.values[a] != 0) acc += std::uint64_t{m.values[a]} * m.values[s.sub(t, a)];
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t n_value_bruteforce(Elem t, const Structure& s) {
    const auto sums = reciprocal_sums(s);
    require_pair_budget(s, sums.size());
    std::uint64_t total = 0;
    for (auto sx : sums) total += kernels::count_eq_u32(sums, s.sub(t, sx));
    return static_cast<std::uint32_t>(total);
}

NTable n_table(const Structure& s) {
    if (!s.has_quadratic_character()) return n_table_bruteforce(s);
    return n_table_formula(m_table(s), s);
}

NTable n_table_formula(const MTable& m, const Structure& s) {
    require_table(m, s);
    const std::uint32_t n = s.size();
    NTable out{s.descriptor(), std::vector<std::uint32_t>(n)};
    const std::vector<std::int32_t> mv(m.values.begin(), m.values.end());

    if (s.cyclic_addition()) {
        // doubled[j] = M(-j mod n), so M(t - a) = doubled[a + n - t].
        std::vector<std::int32_t> doubled(2 * std::size_t{n});
        for (std::size_t j = 0; j < doubled.size(); ++j) doubled[j] = mv[(n - j % n) % n];
        for (Elem t = 0; t < n; ++t) {
            const std::span<const std::int32_t> shifted(doubled.data() + (n - t), n);
            out.values[t] = static_cast<std::uint32_t>(kernels::dot_i32(mv, shifted));
        }
        return out;
    }

    std::vector<std::int32_t> gathered(n);
    for (Elem t = 0; t < n; ++t) {
        for (Elem a = 0; a < n; ++a) gathered[a] = mv[s.sub(t, a)];
        out.values[t] = static_cast<std::uint32_t>(kernels::dot_i32(mv, gathered));
    }
    return out;
}

NTable n_table_bruteforce(const Structure& s) {
    const auto sums = reciprocal_sums(s);
    require_pair_budget(s, sums.size());
    NTable out{s.descriptor(), std::vector<std::uint32_t>(s.size(), 0)};

    if (s.cyclic_addition()) {
        std::vector<std::uint32_t> row(sums.size());
        for (auto sx : sums) {
            kernels::add_mod_u32(sums, sx, s.size(), row);
            for (auto v : row) ++out.values[v];
        }
        return out;
    }
    for (auto sx : sums) {
        for (auto sy : sums) ++out.values[s.add(sx, sy)];
    }
    return out;
}

ImageSets image_sets(const Structure& s) {
    if (s.size() > 20'000) throw TooLarge("image sets capped at 20000 elements");
    ImageSets out;
    std::vector<bool> seen(s.size(), false);
    for (auto v : reciprocal_sums(s)) seen[v] = true;
    for (Elem a = 0; a < s.size(); ++a) {
        if (seen[a]) out.a.push_back(a);
    }

    std::vector<bool> sums(s.size(), false), products(s.size(), false);
    for (Elem x : out.a) {
        for (Elem y : out.a) {
            sums[s.add(x, y)] = true;
            products[s.mul(x, y)] = true;
        }
    }
    for (Elem a = 0; a < s.size(); ++a) {
        if (sums[a]) out.a_plus_a.push_back(a);
        if (products[a]) out.a_times_a.push_back(a);
    }
    return out;
}

} // namespace recip
