#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpart/gf.hpp"
#include "qpart/partition.hpp"
#include "qpart/spreadlab.hpp"

namespace qpart::construct {

using gf::FieldSpec;
using part::SubspacePartition;

struct ConstructError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRange : ConstructError {
    using ConstructError::ConstructError;
};

/// A constructed partition plus the trace of steps that produced it.
/// Re-running the same construction with the same parameters reproduces the
/// identical canonical part list.
struct ConstructionCertificate {
    SubspacePartition partition;
    std::vector<std::string> recipe;
};

/// The t-spread of V(kt,q) obtained by reading V(kt,q) as a k-space over
/// GF(q^t) and taking its 1-dimensional GF(q^t)-subspaces. Validated before
/// return.
SubspacePartition desarguesian_spread(std::uint32_t k, std::uint32_t t, const FieldSpec& F);

/// A partition of V(n,q) with one (n-d)-part and q^{n-d} parts of dimension
/// d, 1 <= d <= n/2, realized as a section of an (n-d)-spread of V(2(n-d),q):
/// the n-dimensional subspace V' containing spread element U meets every
/// other spread element in dimension exactly d.
ConstructionCertificate beutelspacher_partition(std::uint32_t n, std::uint32_t d,
                                                const FieldSpec& F);

/// The size-(ell*q^t + 1) partition: iterate the one-big-part construction
/// with d = t on the residual large subspace down to dimension t + r.
ConstructionCertificate pi_m(std::uint32_t n, std::uint32_t t, const FieldSpec& F);

/// The size-sigma partition: pi_m with the (t+r)-part refined into one
/// ceil((t+r)/2)-part and q^{ceil((t+r)/2)} floor((t+r)/2)-parts. Requires
/// 1 <= r < t.
ConstructionCertificate pi_M(std::uint32_t n, std::uint32_t t, const FieldSpec& F);

/// A t-spread of the canonical n-dimensional subspace of V(n+t-1,q),
/// returned as a partial t-spread of the big space; maximal because every
/// t-space meets the n-subspace in at least a point. Requires t | n, n >= 2t.
spread::PartialSpread embedded_spread_maximal(std::uint32_t n, std::uint32_t t,
                                              const FieldSpec& F);

}  // namespace qpart::construct
