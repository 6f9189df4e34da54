#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpart/geometry.hpp"
#include "qpart/spreadlab.hpp"

namespace qpart::search {

using geom::Space;
using geom::Subspace;

enum class Status { Exact, BudgetExceeded, Infeasible };

std::string to_string(Status s);

struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
};

struct Result {
    Status status = Status::Exact;
    bool found = false;      // a certificate achieving `optimum` exists
    std::int64_t optimum = -1;
    std::vector<Subspace> certificate;
    std::uint64_t nodes = 0;
    std::string proof;  // the exhausted-branch statement for Exact results
};

/// Exact minimum size of a partition of V(n,q) whose largest part has
/// dimension exactly t. Depth-first exact cover of the lowest uncovered
/// point, candidates ordered dimension-descending then lex; bound
/// current + ceil(remaining/theta_t). With symmetry on, the first t-part is
/// fixed to the canonical t-space (the linear group is transitive on
/// t-subspaces).
Result min_partition_size(const Space& space, std::uint32_t t, const Budget& budget = {},
                          bool symmetry = true);

/// Exact maximum size of a partition with minimum part-dimension exactly t;
/// dual bound current + floor(remaining/theta_t). Infeasible when no such
/// partition exists.
Result max_partition_size(const Space& space, std::uint32_t t, const Budget& budget = {},
                          bool symmetry = true);

/// Exact maximum size of a partial t-spread of V(N,q): branch on the lowest
/// open point, cover it or mark it a permanent hole.
Result max_partial_spread_size(const Space& space, std::uint32_t t, const Budget& budget = {},
                               bool symmetry = true);

/// Exact minimum size of a maximal partial t-spread: iterative deepening on
/// the size; on BudgetExceeded the proof still states the exhausted sizes.
Result min_maximal_spread_size(const Space& space, std::uint32_t t, const Budget& budget = {},
                               bool symmetry = true);

/// A maximal partial t-spread of exactly the target size, or an exhaustive
/// none. Cover-or-hole branching with hole-feasibility pruning: a t-space
/// inside the permanent holes kills the branch.
Result find_maximal_spread_of_size(const Space& space, std::uint32_t t, std::int64_t target,
                                   const Budget& budget = {}, bool symmetry = true);

}  // namespace qpart::search
