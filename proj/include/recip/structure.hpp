#pragma once

// A finite ring the counting code can enumerate: F_p, F_q or Z/nZ.
// Elements are addressed by index in [0, size()): the canonical residue for
// F_p and Z/nZ, and sum c_i p^i for F_q.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recip/ext_field.hpp"
#include "recip/residue.hpp"

namespace recip {

using Elem = std::uint32_t;

class Structure {
public:
    enum class Kind { prime_field, extension_field, residue_ring };

    /// F_p for an odd prime p.
    static Structure prime_field(std::uint64_t p);
    /// F_{p^k}, built with make_field.
    static Structure extension_field(std::uint64_t p, int k);
    /// Z/nZ for any n >= 2; M and N count over its unit group.
    static Structure residue_ring(std::uint64_t n);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint64_t characteristic() const noexcept { return modulus_.n(); }
    const Modulus& base_modulus() const noexcept { return modulus_; }
    /// Present only for extension fields.
    const std::optional<Field>& field() const noexcept { return field_; }

    /// "F7", "F3k2", "Z9". Stable; used in reports and cache file names.
    std::string descriptor() const;

    bool is_field() const noexcept { return kind_ != Kind::residue_ring; }
    /// Quadratic-character formulas apply: odd-characteristic field or Z/pZ with p odd prime.
    bool has_quadratic_character() const noexcept;
    /// Addition is index addition mod size().
    bool cyclic_addition() const noexcept { return kind_ != Kind::extension_field; }
    /// Z/nZ with n even.
    bool even_modulus() const noexcept { return kind_ == Kind::residue_ring && modulus_.n() % 2 == 0; }

    Elem from_integer(std::int64_t v) const;
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    bool is_unit(Elem a) const;
    /// Throws NotInvertible (rings) or ZeroInverse (fields at 0).
    Elem inv(Elem a) const;
    /// Quadratic character in {-1, 0, +1}. UnsupportedStructure for composite rings.
    int chi(Elem a) const;

    /// Invertible elements, ascending by index.
    std::vector<Elem> units() const;

    friend bool operator==(const Structure& a, const Structure& b) noexcept {
        return a.kind_ == b.kind_ && a.size_ == b.size_ && a.modulus_ == b.modulus_;
    }

private:
    Structure(Kind kind, Modulus m, std::uint32_t size, std::optional<Field> field)
        : kind_(kind), modulus_(m), size_(size), field_(std::move(field)) {}

    FieldElement to_element(Elem a) const { return field_->from_index(a); }

    Kind kind_;
    Modulus modulus_;
    std::uint32_t size_;
    std::optional<Field> field_;
};

} // namespace recip
