#include "recip/structure.hpp"

#include <numeric>
#include <string>

namespace recip {

namespace {

std::uint32_t checked_size(std::uint64_t n) {
    if (n > max_enumerable) throw TooLarge("structure size " + std::to_string(n) + " exceeds 10^6");
    return static_cast<std::uint32_t>(n);
}

} // namespace

Structure Structure::prime_field(std::uint64_t p) {
    Modulus m = Modulus::odd_prime(p);
    return Structure(Kind::prime_field, m, checked_size(p), std::nullopt);
}

Structure Structure::extension_field(std::uint64_t p, int k) {
    Modulus m = Modulus::odd_prime(p);
    Field f(make_field(m, k));
    const std::uint32_t size = checked_size(f.q());
    return Structure(Kind::extension_field, m, size, std::move(f));
}

Structure Structure::residue_ring(std::uint64_t n) {
    Modulus m = Modulus::classify(n);
    return Structure(Kind::residue_ring, m, checked_size(n), std::nullopt);
}

std::string Structure::descriptor() const {
    switch (kind_) {
    case Kind::prime_field: return "F" + std::to_string(modulus_.n());
    case Kind::extension_field: return "F" + std::to_string(modulus_.n()) + "k" + std::to_string(field_->k());
    case Kind::residue_ring: return "Z" + std::to_string(modulus_.n());
    }
    return {};
}

bool Structure::has_quadratic_character() const noexcept {
    if (kind_ == Kind::residue_ring) return modulus_.is_odd_prime();
    return true;
}

Elem Structure::from_integer(std::int64_t v) const { return static_cast<Elem>(modulus_.reduce(v)); }

Elem Structure::add(Elem a, Elem b) const {
    if (cyclic_addition()) return static_cast<Elem>(modulus_.add(a, b));
    // Base-p digit-wise addition without materializing elements.
    const std::uint64_t p = modulus_.n();
    std::uint64_t out = 0, scale = 1;
    std::uint64_t x = a, y = b;
    for (int i = 0; i < field_->k(); ++i) {
        std::uint64_t d = x % p + y % p;
        if (d >= p) d -= p;
        out += d * scale;
        scale *= p;
        x /= p;
        y /= p;
    }
    return static_cast<Elem>(out);
}

Elem Structure::neg(Elem a) const {
    if (cyclic_addition()) return static_cast<Elem>(modulus_.neg(a));
    const std::uint64_t p = modulus_.n();
    std::uint64_t out = 0, scale = 1;
    std::uint64_t x = a;
    for (int i = 0; i < field_->k(); ++i) {
        const std::uint64_t d = x % p;
        out += (d == 0 ? 0 : p - d) * scale;
        scale *= p;
        x /= p;
    }
    return static_cast<Elem>(out);
}

Elem Structure::sub(Elem a, Elem b) const {
    if (cyclic_addition()) return static_cast<Elem>(modulus_.sub(a, b));
    return add(a, neg(b));
}

Elem Structure::mul(Elem a, Elem b) const {
    if (kind_ != Kind::extension_field) return static_cast<Elem>(modulus_.mul(a, b));
    return static_cast<Elem>(ff_mul(to_element(a), to_element(b)).index());
}

bool Structure::is_unit(Elem a) const {
    if (kind_ == Kind::residue_ring) return std::gcd(std::uint64_t{a}, modulus_.n()) == 1;
    return a != 0;
}

Elem Structure::inv(Elem a) const {
    switch (kind_) {
    case Kind::prime_field:
        if (a == 0) throw ZeroInverse("zero has no inverse");
        return static_cast<Elem>(mod_inv(Residue::from_unsigned(a, modulus_)).value());
    case Kind::residue_ring: return static_cast<Elem>(mod_inv(Residue::from_unsigned(a, modulus_)).value());
    case Kind::extension_field: return static_cast<Elem>(ff_inv(to_element(a)).index());
    }
    return 0;
}

int Structure::chi(Elem a) const {
    if (!has_quadratic_character())
        throw UnsupportedStructure("no quadratic character on " + descriptor() + " (composite modulus)");
    if (kind_ == Kind::extension_field) {
        if (a == 0) return 0;
        return is_square(to_element(a)) ? 1 : -1;
    }
    return legendre(static_cast<std::int64_t>(a), modulus_);
}

std::vector<Elem> Structure::units() const {
    std::vector<Elem> out;
    out.reserve(size_);
    for (Elem a = 0; a < size_; ++a) {
        if (is_unit(a)) out.push_back(a);
    }
    return out;
}

} // namespace recip
