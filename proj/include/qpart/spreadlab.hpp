#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpart/geometry.hpp"
#include "qpart/partition.hpp"

namespace qpart::spread {

using geom::PointSet;
using geom::Space;
using geom::Subspace;

struct SpreadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDisjoint : SpreadError {
    NotDisjoint(std::string msg, std::size_t a, std::size_t b)
        : SpreadError(std::move(msg)), member_a(a), member_b(b) {}
    std::size_t member_a, member_b;
};
struct WrongDimension : SpreadError {
    using SpreadError::SpreadError;
};
struct NotBlocked : SpreadError {
    using SpreadError::SpreadError;
};
struct TooLarge : SpreadError {
    using SpreadError::SpreadError;
};

/// Pairwise-disjoint t-subspaces of V(N,q), members in canonical (lex RREF)
/// order, with the covered point set precomputed. Immutable once validated.
struct PartialSpread {
    std::uint32_t n = 0;  // ambient dimension N
    std::uint32_t t = 0;
    std::vector<Subspace> members;
    PointSet covered;

    PointSet holes() const { return ~covered; }
    std::size_t size() const { return members.size(); }
};

PartialSpread validate_spread(const Space& space, std::uint32_t t,
                              std::vector<Subspace> members);

/// Backtracking kernel: a dim-dimensional subspace all of whose points lie in
/// `allowed`, or nullopt. Extends an independent point sequence in increasing
/// index order, rejecting a candidate as soon as one span point leaves the
/// allowed set. Deterministic. `nodes` (optional) accumulates visited nodes.
std::optional<Subspace> find_subspace_within(const Space& space, std::uint32_t dim,
                                             const PointSet& allowed,
                                             std::uint64_t* nodes = nullptr);
/// Same, but the subspace must pass through the given point.
std::optional<Subspace> find_subspace_within_through(const Space& space, std::uint32_t dim,
                                                     const PointSet& allowed,
                                                     std::uint32_t point,
                                                     std::uint64_t* nodes = nullptr);

struct MaximalityResult {
    bool maximal;
    std::optional<Subspace> extension;  // a t-space inside the holes, when not maximal
};
/// True iff no t-subspace lies entirely in the hole set. Uses the
/// backtracking kernel rather than full t-subspace enumeration.
MaximalityResult is_maximal(const Space& space, const PartialSpread& S);

/// The lex-first t-subspace (canonical enumeration order) disjoint from all
/// members, or nullopt if none. Full-enumeration route; doubles as the
/// brute-force cross-check for is_maximal.
std::optional<Subspace> first_extension(const Space& space, const PartialSpread& S);

/// Repeatedly adds the first extension in canonical order until maximal.
PartialSpread greedy_complete(const Space& space, PartialSpread S);

/// {W cap B : W in S} re-coordinatized to V(dim B, q) and validated as a
/// partition. Every member must meet B nontrivially and B must lie in the
/// union of S.
part::SubspacePartition induced_partition(const Space& space, const PartialSpread& S,
                                          const Subspace& B);

/// True iff every t-subspace of the ambient space meets the point set.
bool is_blocking_set(const Space& space, const PointSet& points, std::uint32_t t);

/// An n-dimensional subspace whose points all lie in the union of S, or
/// nullopt. Guard: gaussian_binomial(N, n, q) must not exceed `guard`.
std::optional<Subspace> find_trivial_blocking_subspace(const Space& space,
                                                       const PartialSpread& S, std::uint32_t n,
                                                       std::uint64_t guard = 1000000);

}  // namespace qpart::spread
