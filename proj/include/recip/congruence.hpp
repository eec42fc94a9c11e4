#pragma once

// The mod-p polynomial form of N_p(t) and the identities that make
// N_p(16/t) = N_p(t) (mod p) checkable.

#include <cstdint>
#include <map>

#include "recip/counting.hpp"
#include "recip/residue.hpp"

namespace recip {

/// power_sum_check is O(p^2 log p) and refuses p above this.
inline constexpr std::uint64_t max_power_sum_prime = 101;

/// sum over x, y in F_p^* of (x^2 y + x y^2 + x + y - t x y)^(p-1), mod p.
Residue chevalley_warning_sum(const Modulus& p, const Residue& t);

/// chevalley_warning_sum(p, t) == (p-1)^2 - N_p(t) mod p.
bool power_sum_check(const Modulus& p, const Residue& t);
bool power_sum_check(const Modulus& p, const Residue& t, const NTable& n);

/// c_k = C(p-1-k, (p-1-k)/2) / (k! ((p-1-k)/2)!^2) mod p for even k in [0, p-1].
struct CoefficientVector {
    std::uint64_t p = 0;
    std::map<std::uint64_t, std::uint64_t> coeffs;

    std::uint64_t at(std::uint64_t k) const;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

CoefficientVector coefficient_vector(const Modulus& p);
CoefficientVector coefficient_vector(const FactorialTable& facts);

/// -3 + sum_k c_k t^k mod p.
Residue congruence_eval(const CoefficientVector& cv, const Residue& t);

/// (p-1-k)! ((k/2)!)^2 4^k == (-1)^((p-1)/2) k! ((p-1-k)/2)!^2 mod p, k even.
bool mirror_identity_check(const Modulus& p, std::uint64_t k);
bool mirror_identity_check(const FactorialTable& facts, std::uint64_t k);

/// Inductive step of the mirror identity: the ratio of both sides between
/// k and k + 2 agree, using only the few linear factors that change.
bool mirror_recurrence_check(const Modulus& p, std::uint64_t k);

/// Both routes: the polynomial agrees at t and 16/t, and N(t) == N(16/t) mod p.
/// Throws ZeroInverse at t = 0.
bool congruence_16_over_t(const Modulus& p, const Residue& t);
bool congruence_16_over_t(const CoefficientVector& cv, const NTable& n, const Residue& t);

} // namespace recip
