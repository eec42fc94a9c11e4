#pragma once

// Exact arithmetic in Z/nZ for desk-scale moduli (n < 2^63).

#include <compare>
#include <cstdint>
#include <vector>

#include "recip/error.hpp"

namespace recip {

enum class Primality { known_prime, known_composite, unchecked };

/// Deterministic trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

/// The n of Z/nZ. Always n >= 2.
class Modulus {
public:
    /// Throws InvalidModulus when n < 2. Primality is left unchecked.
    explicit Modulus(std::uint64_t n);

    /// Trial-divides n and records the outcome.
    static Modulus classify(std::uint64_t n);
    /// Throws InvalidModulus unless n is prime.
    static Modulus prime(std::uint64_t n);
    /// Throws InvalidModulus unless n is an odd prime.
    static Modulus odd_prime(std::uint64_t n);

    std::uint64_t n() const noexcept { return n_; }
    Primality primality() const noexcept { return primality_; }

    /// Resolves an unchecked primality on the fly.
    bool is_prime() const;
    bool is_odd_prime() const { return n_ != 2 && is_prime(); }

    std::uint64_t reduce(std::int64_t v) const noexcept;
    std::uint64_t reduce_unsigned(std::uint64_t v) const noexcept { return v % n_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : n_ - a; }

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.n_ == b.n_; }

private:
    Modulus(std::uint64_t n, Primality p) : n_(n), primality_(p) {}

    std::uint64_t n_;
    Primality primality_;
};

/// An element of Z/nZ in least non-negative form.
class Residue {
public:
    Residue(std::int64_t value, const Modulus& m) : value_(m.reduce(value)), modulus_(m) {}

    static Residue from_unsigned(std::uint64_t value, const Modulus& m) {
        return Residue(m.reduce_unsigned(value), m, canonical_tag{});
    }

    std::uint64_t value() const noexcept { return value_; }
    const Modulus& modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const { return Residue(modulus_.neg(value_), modulus_, canonical_tag{}); }

    friend bool operator==(const Residue& a, const Residue& b) noexcept {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

private:
    struct canonical_tag {};
    Residue(std::uint64_t canonical, const Modulus& m, canonical_tag) : value_(canonical), modulus_(m) {}
    void require_same(const Residue& o) const;

    std::uint64_t value_;
    Modulus modulus_;
};

/// base^exp mod n; exp = 0 gives 1, including for base 0.
Residue mod_pow(const Residue& base, std::uint64_t exp);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// Throws NotInvertible when gcd(x, n) != 1.
Residue mod_inv(const Residue& x);

/// Legendre symbol via Euler's criterion. Returns -1, 0 or +1.
/// Throws InvalidModulus unless p is an odd prime.
int legendre(std::int64_t a, const Modulus& p);
inline int legendre(const Residue& a) { return legendre(static_cast<std::int64_t>(a.value()), a.modulus()); }

/// k! mod p for 0 <= k < p. OutOfRange otherwise.
Residue factorial_mod(std::uint64_t k, const Modulus& p);

/// C(m, k) mod p for 0 <= k <= m < p, as a ratio of factorials.
Residue binom_mod(std::uint64_t m, std::uint64_t k, const Modulus& p);

/// Cached k! and 1/k! modulo an odd prime, for repeated factorial work.
class FactorialTable {
public:
    explicit FactorialTable(const Modulus& p);

    const Modulus& modulus() const noexcept { return p_; }
    std::uint64_t factorial(std::uint64_t k) const;
    std::uint64_t inverse_factorial(std::uint64_t k) const;
    std::uint64_t binom(std::uint64_t m, std::uint64_t k) const;

private:
    Modulus p_;
    std::vector<std::uint64_t> fact_;
    std::vector<std::uint64_t> inv_fact_;
};

/// Largest m accepted by vandermonde_check.
inline constexpr std::uint64_t vandermonde_max = 1000;

/// sum_{k=0..m} C(m,k)^2 == C(2m,m) over the integers.
bool vandermonde_check(std::uint64_t m);

/// sum over x in F_p^* of x^a, by direct summation.
Residue power_sum(std::uint64_t a, const Modulus& p);

/// Units of Z/nZ in ascending order.
std::vector<Residue> units(const Modulus& n);

} // namespace recip
