#pragma once

// Verification harness for the 16/t symmetry of N and its supporting lemmas,
// a four-step replay of the parity argument, and symmetry searches.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recip/congruence.hpp"
#include "recip/counting.hpp"
#include "recip/structure.hpp"

namespace recip {

struct CheckResult {
    std::string name;
    std::uint64_t universe = 0; ///< number of cases examined
    bool passed = true;
    std::optional<std::string> counterexample; ///< set iff !passed

    static CheckResult pass(std::string name, std::uint64_t universe) {
        return CheckResult{std::move(name), universe, true, std::nullopt};
    }
    static CheckResult fail(std::string name, std::uint64_t universe, std::string witness) {
        return CheckResult{std::move(name), universe, false, std::move(witness)};
    }
};

struct VerificationReport {
    std::string structure;
    std::vector<CheckResult> checks;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const;
};

/// N(t) <= 2q - 4 for all t, with equality at t = 0.
CheckResult verify_majoration(const Structure& s, const NTable& n);
CheckResult verify_majoration(std::uint64_t p);

/// N(t) odd exactly at t = 4 and t = -4.
CheckResult verify_parity(const Structure& s, const NTable& n);
CheckResult verify_parity(std::uint64_t p);

/// N(16/t) == N(t) for every unit t.
CheckResult verify_main_theorem(const Structure& s, const NTable& n);
CheckResult verify_main_theorem(const Structure& s);

struct ProofStep {
    std::string claim;
    bool holds = false;
    std::string detail;
};

/// The congruence, the bound, parity, and the forced zero difference, for one t.
struct ProofTrace {
    std::uint64_t p = 0;
    std::uint64_t t = 0;
    std::uint64_t image = 0; ///< 16/t
    std::uint32_t n_t = 0;
    std::uint32_t n_image = 0;
    std::int64_t difference = 0; ///< N(16/t) - N(t)
    std::vector<ProofStep> steps;

    bool holds() const;
};

ProofTrace proof_replay(std::uint64_t p, std::uint64_t t);
/// Same replay with precomputed tables for p (as built by n_table and coefficient_vector).
ProofTrace proof_replay(const NTable& n, const CoefficientVector& cv, std::uint64_t t);

struct SymmetryReport {
    std::uint64_t p = 0;
    std::vector<std::pair<Elem, Elem>> affine; ///< (a, b): N(a t + b) = N(t) for all t
    std::vector<Elem> inversive;               ///< a: N(a / t) = N(t) for all t != 0
};

std::vector<std::pair<Elem, Elem>> search_affine_symmetries(const Structure& s, const NTable& n);
std::vector<Elem> search_inversive_symmetries(const Structure& s, const NTable& n);
SymmetryReport search_symmetries(std::uint64_t p);

/// Every per-prime check: both lemmas, the theorem, the polynomial
/// congruence, the 16/t congruence, the mirror identity, the power-sum
/// identity (p <= 101) and the proof replay for every t != 0.
VerificationReport verify_prime(std::uint64_t p);

/// M value distribution: (q-1)/2 zeros, two ones, (q-3)/2 twos, total q - 1.
CheckResult verify_m_distribution(const Structure& s, const MTable& m);

/// Majoration, parity and the theorem over F_q from a brute-force N table,
/// plus agreement of the formula path with that table.
VerificationReport verify_field(const Structure& s);

/// Runs verify_prime across `jobs` workers; results come back in input order.
std::vector<VerificationReport> verify_primes(std::span<const std::uint64_t> primes, unsigned jobs);

/// Odd primes in [3, max_p].
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t max_p);

/// One JSON object per check, one per line. Timings are omitted so output is reproducible.
void write_json_lines(std::ostream& out, const VerificationReport& report);
/// "F7: 8/8 checks passed" plus one line per failing check.
void write_summary(std::ostream& out, const VerificationReport& report);

} // namespace recip
