#pragma once

// Solution counts for x + 1/x = a (M) and x + 1/x + y + 1/y = t (N),
// by closed formula and by direct enumeration.

#include <cstdint>
#include <string>
#include <vector>

#include "recip/structure.hpp"

namespace recip {

/// Brute-force pair loops refuse more than this many (x, y) pairs.
inline constexpr std::uint64_t max_bruteforce_pairs = 100'000'000;

/// a -> M(a), indexed by element index.
struct MTable {
    std::string structure;
    std::vector<std::uint32_t> values;

    friend bool operator==(const MTable&, const MTable&) = default;
};

/// t -> N(t), indexed by element index.
struct NTable {
    std::string structure;
    std::vector<std::uint32_t> values;

    friend bool operator==(const NTable&, const NTable&) = default;
};

struct ImageSets {
    std::vector<Elem> a;         ///< {x + 1/x : x a unit}, ascending
    std::vector<Elem> a_plus_a;  ///< pointwise sums
    std::vector<Elem> a_times_a; ///< pointwise products
};

/// 1 + chi(a^2 - 4). UnsupportedStructure on composite Z/nZ.
std::uint32_t m_value(Elem a, const Structure& s);
/// Number of units x with x + 1/x = a.
std::uint32_t m_value_bruteforce(Elem a, const Structure& s);

/// Formula path when a quadratic character exists, enumeration otherwise.
MTable m_table(const Structure& s);
MTable m_table_bruteforce(const Structure& s);

/// sum_a M(a) M(t - a).
std::uint32_t n_value_formula(Elem t, const MTable& m, const Structure& s);
/// Counts unit pairs directly; never consults M or the character.
std::uint32_t n_value_bruteforce(Elem t, const Structure& s);

/// Convolution path for fields (and Z/pZ), enumeration for composite rings.
NTable n_table(const Structure& s);
NTable n_table_formula(const MTable& m, const Structure& s);
NTable n_table_bruteforce(const Structure& s);

ImageSets image_sets(const Structure& s);

} // namespace recip
