#include "recip/congruence.hpp"

#include <string>

namespace recip {

namespace {

void require_residue_of(const Residue& t, std::uint64_t p) {
    if (t.modulus().n() != p)
        throw InvalidModulus("residue modulo " + std::to_string(t.modulus().n()) + " used with p = " +
                             std::to_string(p));
}

const NTable& require_ntable(const NTable& n, std::uint64_t p) {
    if (n.values.size() != p) throw SpecMismatch("N table for " + n.structure + " used with p = " + std::to_string(p));
    return n;
}

std::uint64_t sixteen_over(const Residue& t) {
    const Modulus& p = t.modulus();
    if (t.is_zero()) throw ZeroInverse("16/t is undefined at t = 0");
    return (Residue(16, p) * mod_inv(t)).value();
}

} // namespace

Residue chevalley_warning_sum(const Modulus& p, const Residue& t) {
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    if (p.n() > max_power_sum_prime) throw TooLarge("power sum check is capped at p = 101");
    require_residue_of(t, p.n());
    const std::uint64_t n = p.n();
    std::uint64_t acc = 0;
    for (std::uint64_t x = 1; x < n; ++x) {
        for (std::uint64_t y = 1; y < n; ++y) {
            const std::uint64_t xy = p.mul(x, y);
            std::uint64_t poly = p.mul(xy, p.add(x, y)); // x^2 y + x y^2
            poly = p.add(poly, p.add(x, y));
            poly = p.sub(poly, p.mul(t.value(), xy));
            acc = p.add(acc, pow_mod(poly, n - 1, n));
        }
    }
    return Residue::from_unsigned(acc, p);
}

bool power_sum_check(const Modulus& p, const Residue& t) {
    return power_sum_check(p, t, n_table(Structure::prime_field(p.n())));
}

bool power_sum_check(const Modulus& p, const Residue& t, const NTable& n) {
    require_ntable(n, p.n());
    const Residue sum = chevalley_warning_sum(p, t);
    const std::uint64_t units = p.n() - 1;
    const Residue expected = Residue(static_cast<std::int64_t>(units * units), p) -
                             Residue(static_cast<std::int64_t>(n.values[t.value()]), p);
    return sum == expected;
}

std::uint64_t CoefficientVector::at(std::uint64_t k) const {
    auto it = coeffs.find(k);
    if (it == coeffs.end()) throw OutOfRange("no coefficient for k = " + std::to_string(k));
    return it->second;
}

CoefficientVector coefficient_vector(const Modulus& p) {
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    return coefficient_vector(FactorialTable(p));
}

CoefficientVector coefficient_vector(const FactorialTable& facts) {
    const Modulus& p = facts.modulus();
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    CoefficientVector cv{p.n(), {}};
    for (std::uint64_t k = 0; k < p.n(); k += 2) {
        const std::uint64_t rest = p.n() - 1 - k;
        const std::uint64_t half = rest / 2;
        std::uint64_t c = facts.binom(rest, half);
        c = p.mul(c, facts.inverse_factorial(k));
        c = p.mul(c, p.mul(facts.inverse_factorial(half), facts.inverse_factorial(half)));
        cv.coeffs.emplace(k, c);
    }
    return cv;
}

Residue congruence_eval(const CoefficientVector& cv, const Residue& t) {
    require_residue_of(t, cv.p);
    const Modulus& p = t.modulus();
    // Horner in t^2 over descending even k.
    const std::uint64_t t2 = p.mul(t.value(), t.value());
    std::uint64_t acc = 0;
    for (auto it = cv.coeffs.rbegin(); it != cv.coeffs.rend(); ++it) acc = p.add(p.mul(acc, t2), it->second);
    return Residue::from_unsigned(p.sub(acc, 3 % p.n()), p);
}

bool mirror_identity_check(const Modulus& p, std::uint64_t k) {
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    if (k % 2 != 0 || k >= p.n()) throw OutOfRange("mirror identity needs even k in [0, p-1]");
    const std::uint64_t half_k = k / 2;
    const std::uint64_t half_rest = (p.n() - 1 - k) / 2;
    const Residue f_half_k = factorial_mod(half_k, p);
    const Residue f_half_rest = factorial_mod(half_rest, p);
    const Residue lhs = factorial_mod(p.n() - 1 - k, p) * f_half_k * f_half_k * mod_pow(Residue(4, p), k);
    Residue rhs = factorial_mod(k, p) * f_half_rest * f_half_rest;
    if (((p.n() - 1) / 2) % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

bool mirror_identity_check(const FactorialTable& facts, std::uint64_t k) {
    const Modulus& p = facts.modulus();
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    if (k % 2 != 0 || k >= p.n()) throw OutOfRange("mirror identity needs even k in [0, p-1]");
    const std::uint64_t n = p.n();
    const std::uint64_t fk2 = facts.factorial(k / 2);
    const std::uint64_t fr2 = facts.factorial((n - 1 - k) / 2);
    const std::uint64_t lhs = p.mul(p.mul(facts.factorial(n - 1 - k), p.mul(fk2, fk2)), pow_mod(4, k, n));
    std::uint64_t rhs = p.mul(facts.factorial(k), p.mul(fr2, fr2));
    if (((n - 1) / 2) % 2 == 1) rhs = p.neg(rhs);
    return lhs == rhs;
}

bool mirror_recurrence_check(const Modulus& p, std::uint64_t k) {
    if (!p.is_odd_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not an odd prime");
    if (k % 2 != 0 || k + 2 > p.n() - 1) throw OutOfRange("recurrence step needs even k with k + 2 <= p - 1");
    const std::uint64_t n = p.n();
    // L(k+2) / L(k) = 16 (k/2 + 1)^2 / ((p-1-k)(p-2-k))
    // R(k+2) / R(k) = (k+1)(k+2) / ((p-1-k)/2)^2
    // Cross-multiplied so no inverse is needed.
    const std::uint64_t m = k / 2 + 1;
    const std::uint64_t h = (n - 1 - k) / 2;
    const std::uint64_t lhs = p.mul(p.mul(16 % n, p.mul(m, m)), p.mul(h, h));
    const std::uint64_t rhs = p.mul(p.mul(k + 1, k + 2), p.mul(n - 1 - k, n - 2 - k));
    return lhs == rhs;
}

bool congruence_16_over_t(const Modulus& p, const Residue& t) {
    if (t.is_zero()) throw ZeroInverse("16/t is undefined at t = 0");
    return congruence_16_over_t(coefficient_vector(p), n_table(Structure::prime_field(p.n())), t);
}

bool congruence_16_over_t(const CoefficientVector& cv, const NTable& n, const Residue& t) {
    require_residue_of(t, cv.p);
    require_ntable(n, cv.p);
    const Modulus& p = t.modulus();
    const Residue image = Residue::from_unsigned(sixteen_over(t), p);
    const bool poly_route = congruence_eval(cv, t) == congruence_eval(cv, image);
    const bool count_route = n.values[t.value()] % p.n() == n.values[image.value()] % p.n();
    return poly_route && count_route;
}

} // namespace recip
