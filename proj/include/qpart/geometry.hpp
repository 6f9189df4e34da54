#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qpart/gf.hpp"

namespace qpart::geom {

using gf::Elem;
using gf::FieldSpec;
using Int = boost::multiprecision::cpp_int;
using PointSet = boost::dynamic_bitset<std::uint64_t>;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : GeometryError {
    using GeometryError::GeometryError;
};
struct BadDimension : GeometryError {
    using GeometryError::GeometryError;
};
struct TooManyPoints : GeometryError {
    using GeometryError::GeometryError;
};

/// A subspace of V(n,q) in canonical reduced-row-echelon form: strictly
/// increasing pivot columns, pivot entries 1, zeros above and below pivots,
/// no zero rows. Two subspaces are equal iff their RREF matrices are
/// identical, so value equality is structural equality. dim 0 has an empty
/// row list (the zero space).
struct Subspace {
    std::uint32_t n = 0;
    std::uint32_t dim = 0;
    std::vector<Elem> rows;  // row-major dim x n

    std::span<const Elem> row(std::uint32_t i) const { return {rows.data() + i * n, n}; }
    bool operator==(const Subspace&) const = default;
};

/// Lexicographic order on the flattened RREF matrix; the enumeration order
/// used everywhere for canonical tie-breaking.
bool lex_less(const Subspace& a, const Subspace& b);

/// Reduces M in place to RREF over F; returns the rank.
std::uint32_t rref(const FieldSpec& F, std::vector<Elem>& M, std::size_t n_rows, std::size_t n_cols);

Subspace span_of(const FieldSpec& F, std::uint32_t n, const std::vector<std::vector<Elem>>& vectors);
Subspace span_rows(const FieldSpec& F, std::uint32_t n, std::vector<Elem> flat_rows);
Subspace zero_space(std::uint32_t n);
Subspace full_space(std::uint32_t n);
bool is_rref(const FieldSpec& F, const Subspace& W);

Subspace intersect(const FieldSpec& F, const Subspace& a, const Subspace& b);
Subspace sum_space(const FieldSpec& F, const Subspace& a, const Subspace& b);
/// True iff U is contained in W (every row of U reduces to zero against W).
bool contains(const FieldSpec& F, const Subspace& W, const Subspace& U);

/// Number of k-subspaces of V(n,q), exact.
Int gaussian_binomial(std::uint32_t n, std::uint32_t k, const Int& q);

/// theta_i = (q^i - 1)/(q - 1) as a machine integer; throws TooManyPoints on
/// 64-bit overflow. (The formulas module has the arbitrary-precision variant.)
std::uint64_t theta_u64(std::uint32_t i, std::uint32_t q);

/// Every d-subspace of V(n,q) exactly once, ordered lexicographically by the
/// flattened RREF encoding.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& F, std::uint32_t n, std::uint32_t d);

/// V(n,q) with its dense point-index tables. Index i identifies the
/// 1-dimensional subspace whose canonical spanning vector (first nonzero
/// coordinate 1) is the i-th in lexicographic coordinate order. Immutable
/// after construction; safe for unrestricted parallel reads.
class Space {
  public:
    Space(std::uint32_t n, FieldSpec field, std::size_t max_points = std::size_t{1} << 20);

    std::uint32_t n() const { return n_; }
    const FieldSpec& field() const { return field_; }
    std::uint32_t num_points() const { return static_cast<std::uint32_t>(points_.size()); }

    const std::vector<Elem>& point_vector(std::uint32_t index) const { return points_[index]; }
    std::uint32_t point_index(std::span<const Elem> v) const;  // normalizes first

    PointSet points_of(const Subspace& W) const;
    PointSet empty_set() const { return PointSet(points_.size()); }

    /// All theta_n hyperplanes as kernels of the canonical functionals, in
    /// functional (point-index) order; each has dim n-1.
    std::vector<Subspace> hyperplanes() const;

  private:
    std::uint32_t n_;
    FieldSpec field_;
    std::vector<std::vector<Elem>> points_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;  // packed vector -> index
    std::uint64_t pack(std::span<const Elem> v) const;
};

std::vector<Elem> normalize_vector(const FieldSpec& F, std::vector<Elem> v);

}  // namespace qpart::geom
