#include <gtest/gtest.h>

#include "recip/congruence.hpp"

using namespace recip;

namespace {

std::vector<std::uint64_t> odd_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

} // namespace

TEST(PowerSumCheck, Examples) {
    const Modulus five(5), seven(7);
    EXPECT_TRUE(power_sum_check(five, Residue(0, five)));
    EXPECT_TRUE(power_sum_check(five, Residue(1, five)));
    EXPECT_TRUE(power_sum_check(seven, Residue(3, seven)));
    // (p-1)^2 - N(0) = 16 - 6 = 10 = 0 mod 5
    EXPECT_EQ(chevalley_warning_sum(five, Residue(0, five)).value(), 0u);
}

TEST(PowerSumCheck, Errors) {
    const Modulus big(103);
    EXPECT_THROW(power_sum_check(big, Residue(1, big)), TooLarge);
    EXPECT_THROW(chevalley_warning_sum(Modulus(9), Residue(1, Modulus(9))), InvalidModulus);
}

TEST(PowerSumCheck, ExhaustiveUpTo61) {
    // The full p <= 101 sweep runs in the acceptance suite.
    for (auto p : odd_primes(61)) {
        const Modulus m(p);
        const NTable n = n_table(Structure::prime_field(p));
        for (std::uint64_t t = 0; t < p; ++t) ASSERT_TRUE(power_sum_check(m, Residue::from_unsigned(t, m), n)) << p << " " << t;
    }
}

TEST(CoefficientVector, Examples) {
    const CoefficientVector cv5 = coefficient_vector(Modulus(5));
    EXPECT_EQ(cv5.p, 5u);
    EXPECT_EQ(cv5.coeffs, (std::map<std::uint64_t, std::uint64_t>{{0, 4}, {2, 1}, {4, 4}}));

    const CoefficientVector cv3 = coefficient_vector(Modulus(3));
    EXPECT_EQ(cv3.coeffs.size(), 2u);
    EXPECT_EQ(cv3.at(0), 2u);
    EXPECT_EQ(cv3.at(2), 2u); // 1 / 2! = 1/2 = 2 mod 3
    EXPECT_THROW(cv3.at(1), OutOfRange);

    for (auto p : odd_primes(200)) EXPECT_EQ(coefficient_vector(Modulus(p)).coeffs.size(), (p + 1) / 2);
    EXPECT_THROW(coefficient_vector(Modulus(9)), InvalidModulus);
}

TEST(CoefficientVector, MatchesFactorialDefinition) {
    // Recompute each c_k from factorial_mod/binom_mod/mod_inv directly.
    for (auto p : odd_primes(60)) {
        const Modulus m(p);
        const CoefficientVector cv = coefficient_vector(m);
        for (std::uint64_t k = 0; k < p; k += 2) {
            const std::uint64_t h = (p - 1 - k) / 2;
            const Residue fh = factorial_mod(h, m);
            const Residue expected = binom_mod(p - 1 - k, h, m) * mod_inv(factorial_mod(k, m) * fh * fh);
            EXPECT_EQ(cv.at(k), expected.value());
        }
    }
}

TEST(CongruenceEval, Examples) {
    const Modulus five(5);
    const CoefficientVector cv = coefficient_vector(five);
    EXPECT_EQ(congruence_eval(cv, Residue(0, five)).value(), 1u);
    EXPECT_EQ(congruence_eval(cv, Residue(1, five)).value(), 1u);
    EXPECT_EQ(congruence_eval(cv, Residue(2, five)).value(), 4u);
    EXPECT_THROW(congruence_eval(cv, Residue(1, Modulus(7))), InvalidModulus);
}

TEST(CongruenceEval, ReproducesNModPUpTo200) {
    for (auto p : odd_primes(200)) {
        const Modulus m(p);
        const CoefficientVector cv = coefficient_vector(m);
        const NTable n = n_table(Structure::prime_field(p));
        for (std::uint64_t t = 0; t < p; ++t) {
            const Residue tr = Residue::from_unsigned(t, m);
            ASSERT_EQ(congruence_eval(cv, tr).value(), n.values[t] % p) << p << " " << t;
            if (t != 0) {
                const Residue image = Residue(16, m) * mod_inv(tr);
                ASSERT_EQ(congruence_eval(cv, tr), congruence_eval(cv, image));
            }
        }
    }
}

TEST(MirrorIdentity, Examples) {
    const Modulus five(5);
    EXPECT_TRUE(mirror_identity_check(five, 0));
    EXPECT_TRUE(mirror_identity_check(five, 2));
    EXPECT_TRUE(mirror_identity_check(five, 4));
    EXPECT_THROW(mirror_identity_check(five, 1), OutOfRange);
    EXPECT_THROW(mirror_identity_check(five, 6), OutOfRange);
}

TEST(MirrorIdentity, TableAndDirectAgree) {
    for (auto p : odd_primes(300)) {
        const Modulus m(p);
        const FactorialTable facts(m);
        for (std::uint64_t k = 0; k < p; k += 2) {
            ASSERT_TRUE(mirror_identity_check(facts, k)) << p << " " << k;
            if (p < 100) ASSERT_TRUE(mirror_identity_check(m, k));
        }
    }
}

TEST(MirrorIdentity, RecurrenceSteps) {
    for (auto p : odd_primes(2000)) {
        const Modulus m(p);
        for (std::uint64_t k = 0; k + 2 <= p - 1; k += 2) ASSERT_TRUE(mirror_recurrence_check(m, k)) << p << " " << k;
    }
    EXPECT_THROW(mirror_recurrence_check(Modulus(5), 4), OutOfRange);
}

TEST(MirrorIdentity, FailsWithWrongSign) {
    // Sanity check that the identity is not vacuous: dropping the
    // (-1)^((p-1)/2) factor breaks it for p = 3 mod 4.
    const Modulus seven(7);
    const FactorialTable facts(seven);
    const std::uint64_t lhs = seven.mul(facts.factorial(6), pow_mod(4, 0, 7));
    const std::uint64_t unsigned_rhs = seven.mul(facts.factorial(0), seven.mul(facts.factorial(3), facts.factorial(3)));
    EXPECT_NE(lhs, unsigned_rhs);
    EXPECT_TRUE(mirror_identity_check(facts, 0));
}

TEST(Congruence16OverT, Examples) {
    const Modulus five(5), seven(7);
    EXPECT_TRUE(congruence_16_over_t(five, Residue(1, five)));
    EXPECT_TRUE(congruence_16_over_t(seven, Residue(1, seven)));
    EXPECT_TRUE(congruence_16_over_t(seven, Residue(5, seven)));
    EXPECT_THROW(congruence_16_over_t(seven, Residue(0, seven)), ZeroInverse);
}

TEST(Congruence16OverT, DetectsTamperedTable) {
    const Modulus seven(7);
    const CoefficientVector cv = coefficient_vector(seven);
    NTable n = n_table(Structure::prime_field(7));
    n.values[2] += 1; // 16/1 = 2 mod 7
    EXPECT_FALSE(congruence_16_over_t(cv, n, Residue(1, seven)));
}
