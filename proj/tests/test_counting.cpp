#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "recip/counting.hpp"
#include "recip/kernels.hpp"

using namespace recip;

namespace {

std::vector<std::uint64_t> odd_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

std::vector<std::uint32_t> v(std::initializer_list<std::uint32_t> xs) { return xs; }

} // namespace

// Expected tables below were produced by a separate pair-enumeration script
// and cross-checked by hand for p = 3, 5.

TEST(MValue, Examples) {
    const auto f5 = Structure::prime_field(5);
    EXPECT_EQ(m_value(2, f5), 1u);
    EXPECT_EQ(m_value(0, f5), 2u);
    EXPECT_EQ(m_value(1, f5), 0u);

    EXPECT_EQ(m_value_bruteforce(2, f5), 1u);
    EXPECT_EQ(m_value_bruteforce(0, f5), 2u);
    EXPECT_EQ(m_value_bruteforce(3, Structure::residue_ring(8)), 0u);
}

TEST(MValue, CompositeRingHasNoFormula) {
    const auto z9 = Structure::residue_ring(9);
    EXPECT_THROW(m_value(1, z9), UnsupportedStructure);
    // The table silently falls back to enumeration.
    EXPECT_EQ(m_table(z9), m_table_bruteforce(z9));
}

TEST(MTable, Examples) {
    EXPECT_EQ(m_table(Structure::prime_field(5)).values, v({2, 0, 1, 1, 0}));
    EXPECT_EQ(m_table(Structure::prime_field(3)).values, v({0, 1, 1}));
    EXPECT_EQ(m_table(Structure::prime_field(7)).values, v({0, 2, 1, 0, 0, 1, 2}));
}

TEST(NValue, Examples) {
    const auto f5 = Structure::prime_field(5);
    const MTable m5 = m_table(f5);
    EXPECT_EQ(n_value_formula(0, m5, f5), 6u);
    EXPECT_EQ(n_value_formula(2, m5, f5), 4u);
    EXPECT_EQ(n_value_formula(1, m5, f5), 1u);

    EXPECT_EQ(n_value_bruteforce(0, f5), 6u);
    EXPECT_EQ(n_value_bruteforce(3, Structure::prime_field(7)), 5u);
    EXPECT_EQ(n_value_bruteforce(1, Structure::residue_ring(9)), 0u);
}

TEST(NValue, RejectsForeignTable) {
    const auto f5 = Structure::prime_field(5);
    const auto f7 = Structure::prime_field(7);
    EXPECT_THROW(n_value_formula(0, m_table(f5), f7), SpecMismatch);
}

TEST(NTable, Examples) {
    EXPECT_EQ(n_table(Structure::prime_field(5)).values, v({6, 1, 4, 4, 1}));
    EXPECT_EQ(n_table(Structure::prime_field(7)).values, v({10, 4, 4, 5, 5, 4, 4}));
    EXPECT_EQ(n_table(Structure::prime_field(3)).values, v({2, 1, 1}));
}

TEST(NTable, ResidueRingsByEnumeration) {
    // Z/8Z: units {1,3,5,7}, x + 1/x = 2x, so sums land on {2, 6}.
    const auto z8 = Structure::residue_ring(8);
    EXPECT_EQ(m_table(z8).values, v({0, 0, 2, 0, 0, 0, 2, 0}));
    EXPECT_EQ(n_table(z8).values, v({8, 0, 0, 0, 8, 0, 0, 0}));
    EXPECT_TRUE(z8.even_modulus());

    const auto z9 = Structure::residue_ring(9);
    const NTable n9 = n_table(z9);
    std::uint64_t total = 0;
    for (auto x : n9.values) total += x;
    EXPECT_EQ(total, 36u);
    for (Elem t = 0; t < 9; ++t) EXPECT_EQ(n9.values[t], n_value_bruteforce(t, z9));
}

TEST(NTable, BruteForceCap) {
    EXPECT_THROW(n_value_bruteforce(0, Structure::prime_field(10007)), TooLarge);
    EXPECT_THROW(n_table_bruteforce(Structure::prime_field(10007)), TooLarge);
}

TEST(Counting, FormulaEqualsBruteForceUpTo200) {
    for (auto p : odd_primes(200)) {
        const auto s = Structure::prime_field(p);
        const MTable m = m_table(s);
        EXPECT_EQ(m, m_table_bruteforce(s)) << p;
        const NTable n = n_table_formula(m, s);
        EXPECT_EQ(n, n_table_bruteforce(s)) << p;
        if (p <= 31) {
            for (Elem t = 0; t < p; ++t) ASSERT_EQ(n.values[t], n_value_bruteforce(t, s)) << p << " " << t;
            for (Elem a = 0; a < p; ++a) ASSERT_EQ(m.values[a], m_value_bruteforce(a, s)) << p << " " << a;
        }
    }
}

TEST(Counting, TableInvariantsUpTo1000) {
    for (auto p : odd_primes(1000)) {
        const auto s = Structure::prime_field(p);
        const MTable m = m_table(s);
        std::map<std::uint32_t, std::uint64_t> hist;
        std::uint64_t msum = 0;
        for (auto x : m.values) {
            ++hist[x];
            msum += x;
        }
        ASSERT_EQ(msum, p - 1);
        ASSERT_EQ(hist[0], (p - 1) / 2);
        ASSERT_EQ(hist[1], 2u);
        ASSERT_EQ(hist[2], (p - 3) / 2);

        const NTable n = n_table_formula(m, s);
        std::uint64_t nsum = 0;
        for (Elem t = 0; t < p; ++t) {
            nsum += n.values[t];
            ASSERT_EQ(n.values[t], n.values[s.neg(t)]) << p << " " << t;
        }
        ASSERT_EQ(nsum, (p - 1) * (p - 1));
        if (p <= 300) ASSERT_EQ(image_sets(s).a.size(), (p + 1) / 2);
    }
}

TEST(Counting, ExtensionFieldsFormulaEqualsBruteForce) {
    for (auto [p, k] : {std::pair{3ull, 2}, std::pair{5ull, 2}, std::pair{3ull, 3}, std::pair{7ull, 2}}) {
        const auto s = Structure::extension_field(p, k);
        const MTable m = m_table(s);
        EXPECT_EQ(m, m_table_bruteforce(s)) << s.descriptor();
        EXPECT_EQ(n_table_formula(m, s), n_table_bruteforce(s)) << s.descriptor();
        for (Elem t = 0; t < s.size(); t += 3) EXPECT_EQ(n_value_bruteforce(t, s), n_value_formula(t, m, s));
    }
}

TEST(Counting, KernelChoiceDoesNotChangeTables) {
    const auto s = Structure::prime_field(113);
    const NTable dispatched = n_table(s);
    const NTable brute = n_table_bruteforce(s);
    const auto saved = kernels::active_isa();
    ASSERT_TRUE(kernels::set_active_isa(kernels::Isa::scalar));
    const NTable scalar = n_table(s);
    const NTable scalar_brute = n_table_bruteforce(s);
    kernels::set_active_isa(saved);
    EXPECT_EQ(dispatched, scalar);
    EXPECT_EQ(brute, scalar_brute);
    EXPECT_EQ(dispatched, brute);
}

TEST(ImageSets, Examples) {
    const ImageSets sets = image_sets(Structure::prime_field(5));
    EXPECT_EQ(sets.a, (std::vector<Elem>{0, 2, 3}));
    EXPECT_EQ(sets.a_plus_a.size(), 5u);
    EXPECT_EQ(sets.a_times_a, (std::vector<Elem>{0, 1, 4}));
}

TEST(ImageSets, ConsistentWithMembership) {
    const auto s = Structure::prime_field(23);
    const ImageSets sets = image_sets(s);
    for (Elem x : sets.a) {
        EXPECT_TRUE(std::binary_search(sets.a_plus_a.begin(), sets.a_plus_a.end(), s.add(x, sets.a.front())));
        for (Elem y : sets.a) EXPECT_TRUE(std::binary_search(sets.a_times_a.begin(), sets.a_times_a.end(), s.mul(x, y)));
    }
}
