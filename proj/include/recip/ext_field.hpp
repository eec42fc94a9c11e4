#pragma once

// Finite fields F_q = F_p[alpha]/(f) of odd characteristic.

#include <cstdint>
#include <memory>
#include <vector>

#include "recip/residue.hpp"

namespace recip {

/// Dense polynomial over F_p, constant term first.
using Poly = std::vector<std::uint64_t>;

inline constexpr int max_extension_degree = 8;
inline constexpr std::uint64_t max_enumerable = 1'000'000;

/// True iff the monic polynomial f of degree >= 1 is irreducible over F_p.
/// Uses gcd(x^(p^i) - x, f) = 1 for i = 1 .. deg/2.
bool is_irreducible(const Poly& f, const Modulus& p);

struct FieldSpec {
    std::uint64_t p = 0;
    int k = 0;
    Poly irreducible; ///< monic, size k + 1

    std::uint64_t q() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Lexicographically smallest monic irreducible of degree k (constant term
/// compared first). Throws InvalidModulus for p = 2 or non-prime p.
FieldSpec make_field(const Modulus& p, int k);

class FieldElement {
public:
    FieldElement(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint64_t> coeffs);

    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    const FieldSpec& spec() const noexcept { return *spec_; }
    const std::shared_ptr<const FieldSpec>& spec_ptr() const noexcept { return spec_; }

    bool is_zero() const noexcept;
    /// Position in enumeration order: sum of c_i * p^i.
    std::uint64_t index() const noexcept;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.coeffs_ == b.coeffs_ && *a.spec_ == *b.spec_;
    }

private:
    std::shared_ptr<const FieldSpec> spec_;
    std::vector<std::uint64_t> coeffs_;
};

/// Shared handle to a FieldSpec with element factories.
class Field {
public:
    explicit Field(FieldSpec spec);
    Field(const Modulus& p, int k) : Field(make_field(p, k)) {}

    const FieldSpec& spec() const noexcept { return *spec_; }
    std::uint64_t p() const noexcept { return spec_->p; }
    int k() const noexcept { return spec_->k; }
    std::uint64_t q() const noexcept { return q_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The image of an integer in the prime subfield.
    FieldElement from_integer(std::int64_t v) const;
    /// alpha, the class of x. Equals 0 when k = 1.
    FieldElement generator() const;
    FieldElement element(std::vector<std::uint64_t> coeffs) const;
    FieldElement from_index(std::uint64_t index) const;

private:
    std::shared_ptr<const FieldSpec> spec_;
    std::uint64_t q_;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_neg(const FieldElement& a);
FieldElement ff_pow(const FieldElement& a, std::uint64_t exp);
/// Throws ZeroInverse for a = 0.
FieldElement ff_inv(const FieldElement& a);
bool is_square(const FieldElement& a);

/// Every element once, ascending by index(). TooLarge when q > 10^6.
std::vector<FieldElement> enumerate(const Field& field);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return ff_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return ff_sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return ff_mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return ff_neg(a); }

} // namespace recip
