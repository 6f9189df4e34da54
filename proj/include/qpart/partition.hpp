#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpart/formulas.hpp"
#include "qpart/geometry.hpp"

namespace qpart::part {

using geom::PointSet;
using geom::Space;
using geom::Subspace;
using formulas::Int;

struct PartitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Carries a minimal witness: one point plus the offending part indices
/// (second index -1 when the point is uncovered).
struct NotAPartition : PartitionError {
    NotAPartition(std::string msg, std::uint32_t point, int part_a, int part_b)
        : PartitionError(std::move(msg)), witness_point(point), part_a(part_a), part_b(part_b) {}
    std::uint32_t witness_point;
    int part_a, part_b;
};
struct NotAHyperplane : PartitionError {
    using PartitionError::PartitionError;
};
struct PreconditionUnmet : PartitionError {
    using PartitionError::PartitionError;
};

/// Validated subspace partition of V(n,q): every point lies in exactly one
/// part. Parts are stored canonically (dim descending, then lex on RREF).
/// Immutable once validated.
struct SubspacePartition {
    std::uint32_t n = 0;
    std::vector<Subspace> parts;

    std::size_t size() const { return parts.size(); }
};

/// Sorts into canonical order, then checks the exactly-once cover property.
/// Throws NotAPartition with a witness on violation.
SubspacePartition validate(const Space& space, std::vector<Subspace> parts);

/// (m_{n-1},...,m_1): m[i] = number of parts of dimension i. A part equal to
/// V itself is legal but contributes to no m_i.
struct PartitionType {
    std::vector<std::int64_t> m;  // index by dimension, size n (index 0 unused)
};
PartitionType partition_type(const SubspacePartition& pi);

/// b[i] = number of parts of dimension i contained in the hyperplane.
using HyperplaneType = std::vector<std::int64_t>;  // size n, index 0 unused
HyperplaneType hyperplane_type(const Space& space, const SubspacePartition& pi,
                               const Subspace& H);

/// s_b over all theta_n hyperplanes. Keys are full type vectors.
using TypeDistribution = std::map<HyperplaneType, std::int64_t>;
TypeDistribution type_distribution(const Space& space, const SubspacePartition& pi);

/// |Pi| = 1 + sum b_i q^i, evaluated at one hyperplane.
struct SizeIdentityReport {
    bool holds;
    Int size;           // |Pi|
    Int formula_value;  // 1 + sum b_i q^i
    HyperplaneType b;
};
SizeIdentityReport check_size_identity(const Space& space, const SubspacePartition& pi,
                                       const Subspace& H);

/// The four hyperplane-type packing identities for a pair of part
/// dimensions (d, d') with m_d, m_{d'} > 0, all exact.
struct PackingIdentityReport {
    struct Item {
        std::string name;
        Int lhs, rhs;
        bool holds() const { return lhs == rhs; }
    };
    std::vector<Item> items;
    bool all_hold() const;
};
PackingIdentityReport check_packing_identities(const Space& space, const SubspacePartition& pi,
                                               std::uint32_t d, std::uint32_t d_prime);

enum class ConjectureStatus { Pass, Fail, Unverifiable };
/// n_1 + ... + n_j >= sigma_q(d_{j+1}, d_j) over the distinct part
/// dimensions d_1 < ... < d_k; Unverifiable when that sigma is open.
struct ConjectureReport {
    ConjectureStatus status;
    Int lhs;  // n_1 + ... + n_j
    formulas::ExtremalValue bound;
    std::vector<std::uint32_t> dims;          // d_1 < ... < d_k
    std::vector<std::int64_t> multiplicities; // n_1, ..., n_k
};
ConjectureReport check_conjecture(const Space& space, const SubspacePartition& pi,
                                  std::uint32_t j);

}  // namespace qpart::part
