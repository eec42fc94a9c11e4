#include <gtest/gtest.h>

#include <set>

#include "recip/ext_field.hpp"

using namespace recip;

namespace {

// Oracle: f (monic, degree k) is irreducible iff no monic polynomial of
// degree 1..k/2 divides it. Plain long division, no gcd machinery.
bool divides(const Poly& d, Poly f, std::uint64_t p) {
    const std::size_t dd = d.size() - 1;
    while (f.size() > dd) {
        const std::uint64_t c = f.back();
        const std::size_t shift = f.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) f[shift + i] = (f[shift + i] + p * p - c * d[i] % p) % p;
        f.pop_back();
    }
    for (auto c : f) {
        if (c != 0) return false;
    }
    return true;
}

bool irreducible_by_trial_division(const Poly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t deg = 1; deg <= k / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly d(deg + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < deg; ++i) {
                d[i] = c % p;
                c /= p;
            }
            d[deg] = 1;
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

} // namespace

TEST(MakeField, Examples) {
    const FieldSpec f5 = make_field(Modulus(5), 1);
    EXPECT_EQ(f5.irreducible, (Poly{0, 1}));
    EXPECT_EQ(f5.q(), 5u);

    const FieldSpec f9 = make_field(Modulus(3), 2);
    EXPECT_EQ(f9.irreducible, (Poly{1, 0, 1}));
    EXPECT_EQ(f9.q(), 9u);

    EXPECT_THROW(make_field(Modulus(2), 2), InvalidModulus);
    EXPECT_THROW(make_field(Modulus(9), 2), InvalidModulus);
    EXPECT_THROW(make_field(Modulus(3), 0), InvalidModulus);
    EXPECT_THROW(make_field(Modulus(3), 9), InvalidModulus);
}

TEST(MakeField, IsLexicographicallyFirstIrreducible) {
    // Brute-force scan in the same order (constant term most significant).
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        for (int k = 2; k <= 4; ++k) {
            if (k == 4 && p > 5) continue;
            std::uint64_t count = 1;
            for (int i = 0; i < k; ++i) count *= p;
            Poly first;
            for (std::uint64_t code = 0; code < count && first.empty(); ++code) {
                Poly f(static_cast<std::size_t>(k) + 1, 0);
                std::uint64_t c = code;
                for (int i = k - 1; i >= 0; --i) {
                    f[static_cast<std::size_t>(i)] = c % p;
                    c /= p;
                }
                f[static_cast<std::size_t>(k)] = 1;
                if (irreducible_by_trial_division(f, p)) first = f;
            }
            EXPECT_EQ(make_field(Modulus(p), k).irreducible, first) << "p=" << p << " k=" << k;
        }
    }
}

TEST(MakeField, Deterministic) {
    for (int k = 1; k <= max_extension_degree; ++k) EXPECT_EQ(make_field(Modulus(3), k), make_field(Modulus(3), k));
}

TEST(IsIrreducible, AgreesWithTrialDivision) {
    for (std::uint64_t p : {3u, 5u}) {
        for (std::size_t k = 1; k <= 4; ++k) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < k; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                Poly f(k + 1, 0);
                std::uint64_t c = code;
                for (std::size_t i = 0; i < k; ++i) {
                    f[i] = c % p;
                    c /= p;
                }
                f[k] = 1;
                ASSERT_EQ(is_irreducible(f, Modulus(p)), irreducible_by_trial_division(f, p));
            }
        }
    }
}

TEST(FieldArithmetic, F9Examples) {
    const Field f9(Modulus(3), 2);
    const FieldElement alpha = f9.generator();
    EXPECT_EQ(ff_mul(alpha, alpha), f9.from_integer(2));
    EXPECT_EQ(ff_inv(alpha), f9.element({0, 2}));
    EXPECT_EQ(ff_inv(f9.one()), f9.one());
    EXPECT_THROW(ff_inv(f9.zero()), ZeroInverse);

    const FieldElement x = f9.element({2, 1});
    EXPECT_EQ(ff_add(x, f9.zero()), x);
    EXPECT_EQ(ff_mul(x, f9.one()), x);
    EXPECT_EQ(ff_add(x, ff_neg(x)), f9.zero());
}

TEST(FieldArithmetic, SpecMismatch) {
    const Field f9(Modulus(3), 2);
    const Field f25(Modulus(5), 2);
    EXPECT_THROW(ff_add(f9.one(), f25.one()), SpecMismatch);
    EXPECT_THROW(ff_mul(f9.one(), f25.one()), SpecMismatch);
    // Separately built handles to the same field are compatible.
    const Field again(Modulus(3), 2);
    EXPECT_EQ(ff_add(f9.one(), again.one()), f9.from_integer(2));
}

TEST(FieldArithmetic, ElementValidation) {
    const Field f9(Modulus(3), 2);
    EXPECT_THROW(f9.element({1}), SpecMismatch);
    EXPECT_THROW(f9.element({3, 0}), OutOfRange);
    EXPECT_THROW(f9.from_index(9), OutOfRange);
}

class FieldProperties : public ::testing::TestWithParam<std::pair<std::uint64_t, int>> {};

TEST_P(FieldProperties, InverseFrobeniusAndSquares) {
    const auto [p, k] = GetParam();
    const Field field(Modulus(p), k);
    const auto elements = enumerate(field);
    ASSERT_EQ(elements.size(), field.q());

    std::uint64_t squares = 0;
    for (const auto& a : elements) {
        EXPECT_EQ(ff_pow(a, field.q()), a);
        if (a.is_zero()) {
            EXPECT_TRUE(is_square(a));
            continue;
        }
        EXPECT_EQ(ff_mul(a, ff_inv(a)), field.one());
        if (is_square(a)) ++squares;
    }
    EXPECT_EQ(squares, (field.q() - 1) / 2);

    // is_square agrees with the set of actual squares b*b.
    std::set<std::uint64_t> actual;
    for (const auto& b : elements) actual.insert(ff_mul(b, b).index());
    for (const auto& a : elements) EXPECT_EQ(is_square(a), actual.count(a.index()) == 1);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldProperties,
                         ::testing::Values(std::pair<std::uint64_t, int>{3, 2}, std::pair<std::uint64_t, int>{5, 2},
                                           std::pair<std::uint64_t, int>{3, 3}, std::pair<std::uint64_t, int>{7, 2},
                                           std::pair<std::uint64_t, int>{3, 4}, std::pair<std::uint64_t, int>{11, 2}));

TEST(FieldArithmetic, DistributesAndCommutes) {
    const Field f27(Modulus(3), 3);
    const auto e = enumerate(f27);
    for (std::size_t i = 0; i < e.size(); i += 2) {
        for (std::size_t j = 0; j < e.size(); j += 3) {
            EXPECT_EQ(e[i] * e[j], e[j] * e[i]);
            for (std::size_t l = 0; l < e.size(); l += 5) EXPECT_EQ(e[i] * (e[j] + e[l]), e[i] * e[j] + e[i] * e[l]);
        }
    }
}

TEST(Enumerate, Examples) {
    const auto f3 = enumerate(Field(Modulus(3), 1));
    ASSERT_EQ(f3.size(), 3u);
    for (std::uint64_t i = 0; i < 3; ++i) EXPECT_EQ(f3[i].coeffs(), (std::vector<std::uint64_t>{i}));

    const Field f25(Modulus(5), 2);
    const auto e = enumerate(f25);
    std::set<std::vector<std::uint64_t>> distinct;
    for (std::size_t i = 0; i < e.size(); ++i) {
        distinct.insert(e[i].coeffs());
        EXPECT_EQ(e[i].index(), i);
    }
    EXPECT_EQ(distinct.size(), 25u);
    EXPECT_EQ(enumerate(Field(Modulus(3), 2)).size(), 9u);
}

TEST(Enumerate, TooLarge) {
    const Field big(Modulus(1009), 2); // q just over 10^6
    EXPECT_THROW(enumerate(big), TooLarge);
}
