#include "recip/ext_field.hpp"

#include <string>
#include <utility>

namespace recip {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, const Modulus& p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = p.sub(a[i], b[i]);
    trim(a);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Modulus& p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = p.add(out[i + j], p.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_rem(Poly a, const Poly& b, const Modulus& p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = mod_inv(Residue::from_unsigned(b.back(), p)).value();
    while (a.size() > db && !a.empty()) {
        const std::uint64_t c = p.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = p.sub(a[shift + i], p.mul(c, b[i]));
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const Modulus& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, const Modulus& p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    while (exp != 0) {
        if (exp & 1) result = poly_rem(poly_mul(result, base, p), f, p);
        base = poly_rem(poly_mul(base, base, p), f, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t checked_power(std::uint64_t p, int k) {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > (std::uint64_t{1} << 62) / p) throw TooLarge("field order does not fit in 62 bits");
        q *= p;
    }
    return q;
}

void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec_ptr() != b.spec_ptr() && !(a.spec() == b.spec()))
        throw SpecMismatch("field elements belong to different fields");
}

} // namespace

bool is_irreducible(const Poly& f, const Modulus& p) {
    Poly g = f;
    trim(g);
    if (g.size() < 2) return false;
    const std::size_t deg = g.size() - 1;
    if (deg == 1) return true;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = poly_powmod(h, p.n(), g, p);
        Poly d = poly_gcd(g, poly_sub(h, x, p), p);
        if (d.size() > 1) return false;
    }
    return true;
}

std::uint64_t FieldSpec::q() const { return checked_power(p, k); }

FieldSpec make_field(const Modulus& p, int k) {
    if (p.n() == 2) throw InvalidModulus("characteristic 2 is not supported");
    if (!p.is_prime()) throw InvalidModulus(std::to_string(p.n()) + " is not prime");
    if (k < 1 || k > max_extension_degree)
        throw InvalidModulus("extension degree must be in [1, 8], got " + std::to_string(k));
    if (k == 1) return FieldSpec{p.n(), 1, Poly{0, 1}};

    // Candidates c_0 .. c_{k-1} in lexicographic order; c_0 = 0 is divisible by x.
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(k), 0);
    digits[0] = 1;
    for (;;) {
        Poly f(digits.begin(), digits.end());
        f.push_back(1);
        if (is_irreducible(f, p)) return FieldSpec{p.n(), k, std::move(f)};
        int pos = k - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p.n()) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    throw InvalidModulus("no irreducible polynomial found"); // unreachable for prime p
}

FieldElement::FieldElement(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint64_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(spec_->k))
        throw SpecMismatch("field element needs exactly k coefficients");
    for (auto c : coeffs_) {
        if (c >= spec_->p) throw OutOfRange("field element coefficient out of range");
    }
}

bool FieldElement::is_zero() const noexcept {
    for (auto c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

std::uint64_t FieldElement::index() const noexcept {
    std::uint64_t idx = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * spec_->p + coeffs_[i];
    return idx;
}

Field::Field(FieldSpec spec) : spec_(std::make_shared<const FieldSpec>(std::move(spec))), q_(spec_->q()) {}

FieldElement Field::zero() const { return FieldElement(spec_, std::vector<std::uint64_t>(spec_->k, 0)); }

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(std::int64_t v) const {
    std::vector<std::uint64_t> c(spec_->k, 0);
    c[0] = Modulus(spec_->p).reduce(v);
    return FieldElement(spec_, std::move(c));
}

FieldElement Field::generator() const {
    if (spec_->k == 1) return zero();
    std::vector<std::uint64_t> c(spec_->k, 0);
    c[1] = 1;
    return FieldElement(spec_, std::move(c));
}

FieldElement Field::element(std::vector<std::uint64_t> coeffs) const { return FieldElement(spec_, std::move(coeffs)); }

FieldElement Field::from_index(std::uint64_t index) const {
    if (index >= q_) throw OutOfRange("field index out of range");
    std::vector<std::uint64_t> c(spec_->k, 0);
    for (auto& d : c) {
        d = index % spec_->p;
        index /= spec_->p;
    }
    return FieldElement(spec_, std::move(c));
}

FieldElement ff_add(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const Modulus p(a.spec().p);
    std::vector<std::uint64_t> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.add(c[i], b.coeffs()[i]);
    return FieldElement(a.spec_ptr(), std::move(c));
}

FieldElement ff_neg(const FieldElement& a) {
    const Modulus p(a.spec().p);
    std::vector<std::uint64_t> c(a.coeffs());
    for (auto& v : c) v = p.neg(v);
    return FieldElement(a.spec_ptr(), std::move(c));
}

FieldElement ff_sub(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const Modulus p(a.spec().p);
    std::vector<std::uint64_t> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.sub(c[i], b.coeffs()[i]);
    return FieldElement(a.spec_ptr(), std::move(c));
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const Modulus p(a.spec().p);
    const auto k = static_cast<std::size_t>(a.spec().k);
    Poly prod = poly_rem(poly_mul(Poly(a.coeffs()), Poly(b.coeffs()), p), a.spec().irreducible, p);
    prod.resize(k, 0);
    return FieldElement(a.spec_ptr(), std::move(prod));
}

FieldElement ff_pow(const FieldElement& a, std::uint64_t exp) {
    std::vector<std::uint64_t> one(a.coeffs().size(), 0);
    one[0] = 1;
    FieldElement result(a.spec_ptr(), std::move(one));
    FieldElement base = a;
    while (exp != 0) {
        if (exp & 1) result = ff_mul(result, base);
        base = ff_mul(base, base);
        exp >>= 1;
    }
    return result;
}

FieldElement ff_inv(const FieldElement& a) {
    if (a.is_zero()) throw ZeroInverse("zero has no inverse");
    return ff_pow(a, a.spec().q() - 2);
}

bool is_square(const FieldElement& a) {
    if (a.is_zero()) return true;
    FieldElement e = ff_pow(a, (a.spec().q() - 1) / 2);
    const auto& c = e.coeffs();
    if (c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != 0) return false;
    }
    return true;
}

std::vector<FieldElement> enumerate(const Field& field) {
    if (field.q() > max_enumerable) throw TooLarge("field too large to enumerate: q = " + std::to_string(field.q()));
    std::vector<FieldElement> out;
    out.reserve(field.q());
    for (std::uint64_t i = 0; i < field.q(); ++i) out.push_back(field.from_index(i));
    return out;
}

} // namespace recip
