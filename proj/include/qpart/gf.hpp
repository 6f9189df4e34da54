#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpart::gf {

/// Canonical integer encoding of a field element: the polynomial
/// c_0 + c_1 x + ... + c_{e-1} x^{e-1} over GF(p) is stored as
/// sum c_i p^i, so elements of GF(q) are exactly the integers [0, q).
using Elem = std::uint32_t;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPrimeCharacteristic : FieldError {
    using FieldError::FieldError;
};
struct ReducibleModulus : FieldError {
    using FieldError::FieldError;
};
struct ZeroInverse : FieldError {
    using FieldError::FieldError;
};
struct FieldMismatch : FieldError {
    using FieldError::FieldError;
};

bool is_prime(std::uint64_t m);

/// GF(q), q = p^e, q <= 2^16. Immutable after construction; all element
/// operations are pure, so a FieldSpec may be shared freely across threads.
/// Extension-field multiplication goes through log/antilog tables built once
/// at construction.
class FieldSpec {
  public:
    static FieldSpec make(std::uint32_t p, std::uint32_t e,
                          std::optional<std::vector<Elem>> modulus = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    /// Coefficients low-to-high over GF(p); [0,1] placeholder when e = 1.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;

    /// Base-p digits of the encoding, length e (low-to-high).
    std::vector<Elem> decode(Elem a) const;
    Elem encode(std::span<const Elem> coeffs) const;

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

  private:
    FieldSpec() = default;
    void build_tables();
    Elem mul_poly(Elem a, Elem b) const;  // table-free, used to bootstrap

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> log_;  // size q, index 0 unused
    std::vector<Elem> exp_;  // size 2(q-1), doubled to skip the mod
};

// --- polynomial utilities over an arbitrary FieldSpec -----------------------
// Polynomials are coefficient vectors low-to-high; trailing zeros trimmed.

std::vector<Elem> poly_trim(std::vector<Elem> f);
std::vector<Elem> poly_mul(const FieldSpec& F, std::span<const Elem> a, std::span<const Elem> b);
/// Remainder of a mod g; g must be nonzero.
std::vector<Elem> poly_mod(const FieldSpec& F, std::span<const Elem> a, std::span<const Elem> g);
/// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_is_irreducible(const FieldSpec& F, std::span<const Elem> f);
/// Lexicographically least monic irreducible of the given degree, where the
/// non-leading coefficient tuples are ordered as base-q integers (low digit
/// first). Deterministic across runs and implementations.
std::vector<Elem> least_irreducible(const FieldSpec& F, std::uint32_t degree);

/// GF(q^t) realized as polynomials over an arbitrary base field, elements as
/// length-t coefficient vectors. This is the mechanism behind Desarguesian
/// spreads: a vector of V(kt,q) is read as a k-tuple of these elements.
class ExtField {
  public:
    using Elt = std::vector<Elem>;  // length degree, coefficients in base

    ExtField(FieldSpec base, std::uint32_t degree);

    const FieldSpec& base() const { return base_; }
    std::uint32_t degree() const { return degree_; }
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elt zero() const { return Elt(degree_, 0); }
    Elt one() const;
    Elt monomial(std::uint32_t k) const;  // x^k reduced mod modulus
    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    bool is_zero(const Elt& a) const;

  private:
    FieldSpec base_;
    std::uint32_t degree_;
    std::vector<Elem> modulus_;
};

}  // namespace qpart::gf
