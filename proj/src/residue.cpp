#include "recip/residue.hpp"

#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace recip {

namespace {
__extension__ typedef unsigned __int128 u128;
} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Modulus::Modulus(std::uint64_t n) : n_(n), primality_(Primality::unchecked) {
    if (n < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(n));
}

Modulus Modulus::classify(std::uint64_t n) {
    Modulus m(n);
    m.primality_ = recip::is_prime(n) ? Primality::known_prime : Primality::known_composite;
    return m;
}

Modulus Modulus::prime(std::uint64_t n) {
    Modulus m = classify(n);
    if (m.primality_ != Primality::known_prime)
        throw InvalidModulus(std::to_string(n) + " is not prime");
    return m;
}

Modulus Modulus::odd_prime(std::uint64_t n) {
    if (n == 2) throw InvalidModulus("characteristic 2 is not supported");
    return prime(n);
}

bool Modulus::is_prime() const {
    switch (primality_) {
    case Primality::known_prime: return true;
    case Primality::known_composite: return false;
    case Primality::unchecked: break;
    }
    return recip::is_prime(n_);
}

std::uint64_t Modulus::reduce(std::int64_t v) const noexcept {
    if (v >= 0) return static_cast<std::uint64_t>(v) % n_;
    // -(v+1) avoids overflow at INT64_MIN.
    std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % n_;
    return n_ - 1 - r;
}

std::uint64_t Modulus::add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return (s >= n_ || s < a) ? s - n_ : s;
}

std::uint64_t Modulus::sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (n_ - b);
}

std::uint64_t Modulus::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(u128(a) * b % n_);
}

void Residue::require_same(const Residue& o) const {
    if (!(modulus_ == o.modulus_))
        throw InvalidModulus("residues over different moduli: " + std::to_string(modulus_.n()) + " vs " +
                             std::to_string(o.modulus_.n()));
}

Residue Residue::operator+(const Residue& o) const {
    require_same(o);
    return Residue(modulus_.add(value_, o.value_), modulus_, canonical_tag{});
}

Residue Residue::operator-(const Residue& o) const {
    require_same(o);
    return Residue(modulus_.sub(value_, o.value_), modulus_, canonical_tag{});
}

Residue Residue::operator*(const Residue& o) const {
    require_same(o);
    return Residue(modulus_.mul(value_, o.value_), modulus_, canonical_tag{});
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp != 0) {
        if (exp & 1) result = static_cast<std::uint64_t>(u128(result) * base % n);
        base = static_cast<std::uint64_t>(u128(base) * base % n);
        exp >>= 1;
    }
    return result;
}

Residue mod_pow(const Residue& base, std::uint64_t exp) {
    return Residue::from_unsigned(pow_mod(base.value(), exp, base.modulus().n()), base.modulus());
}

Residue mod_inv(const Residue& x) {
    const auto n = static_cast<std::int64_t>(x.modulus().n());
    std::int64_t r0 = n, r1 = static_cast<std::int64_t>(x.value());
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) {
        throw NotInvertible(std::to_string(x.value()) + " is not invertible modulo " + std::to_string(n));
    }
    return Residue(s0, x.modulus());
}

int legendre(std::int64_t a, const Modulus& p) {
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    const std::uint64_t r = p.reduce(a);
    if (r == 0) return 0;
    return pow_mod(r, (p.n() - 1) / 2, p.n()) == 1 ? 1 : -1;
}

namespace {

void require_prime(const Modulus& p) {
    if (!p.is_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not prime");
}

} // namespace

Residue factorial_mod(std::uint64_t k, const Modulus& p) {
    require_prime(p);
    if (k >= p.n()) throw OutOfRange("factorial_mod needs k < p");
    std::uint64_t acc = 1;
    for (std::uint64_t i = 2; i <= k; ++i) acc = p.mul(acc, i);
    return Residue::from_unsigned(acc, p);
}

Residue binom_mod(std::uint64_t m, std::uint64_t k, const Modulus& p) {
    require_prime(p);
    if (k > m || m >= p.n()) throw OutOfRange("binom_mod needs 0 <= k <= m < p");
    Residue num = factorial_mod(m, p);
    Residue den = factorial_mod(k, p) * factorial_mod(m - k, p);
    return num * mod_inv(den);
}

FactorialTable::FactorialTable(const Modulus& p) : p_(p) {
    require_prime(p);
    const std::uint64_t n = p.n();
    fact_.resize(n);
    inv_fact_.resize(n);
    fact_[0] = 1;
    for (std::uint64_t i = 1; i < n; ++i) fact_[i] = p.mul(fact_[i - 1], i);
    inv_fact_[n - 1] = mod_inv(Residue::from_unsigned(fact_[n - 1], p)).value();
    for (std::uint64_t i = n - 1; i > 0; --i) inv_fact_[i - 1] = p.mul(inv_fact_[i], i);
}

std::uint64_t FactorialTable::factorial(std::uint64_t k) const {
    if (k >= fact_.size()) throw OutOfRange("factorial needs k < p");
    return fact_[k];
}

std::uint64_t FactorialTable::inverse_factorial(std::uint64_t k) const {
    if (k >= inv_fact_.size()) throw OutOfRange("inverse factorial needs k < p");
    return inv_fact_[k];
}

std::uint64_t FactorialTable::binom(std::uint64_t m, std::uint64_t k) const {
    if (k > m || m >= fact_.size()) throw OutOfRange("binom needs 0 <= k <= m < p");
    return p_.mul(fact_[m], p_.mul(inv_fact_[k], inv_fact_[m - k]));
}

bool vandermonde_check(std::uint64_t m) {
    using boost::multiprecision::cpp_int;
    if (m > vandermonde_max) throw OutOfRange("vandermonde_check is capped at m = 1000");

    cpp_int c = 1; // C(m, k), updated in place
    cpp_int lhs = 0;
    for (std::uint64_t k = 0; k <= m; ++k) {
        lhs += c * c;
        c = c * (m - k) / (k + 1);
    }
    cpp_int rhs = 1; // C(2m, m) = prod_{i=1..m} (m+i)/i
    for (std::uint64_t i = 1; i <= m; ++i) rhs = rhs * (m + i) / i;
    return lhs == rhs;
}

Residue power_sum(std::uint64_t a, const Modulus& p) {
    require_prime(p);
    std::uint64_t acc = 0;
    for (std::uint64_t x = 1; x < p.n(); ++x) acc = p.add(acc, pow_mod(x, a, p.n()));
    return Residue::from_unsigned(acc, p);
}

std::vector<Residue> units(const Modulus& n) {
    std::vector<Residue> out;
    for (std::uint64_t x = 1; x < n.n(); ++x) {
        if (std::gcd(x, n.n()) == 1) out.push_back(Residue::from_unsigned(x, n));
    }
    return out;
}

} // namespace recip
