#include "qpart/partition.hpp"

#include <algorithm>

namespace qpart::part {

namespace {
bool canonical_before(const Subspace& a, const Subspace& b) {
    if (a.dim != b.dim) return a.dim > b.dim;  // dim descending
    return std::lexicographical_compare(a.rows.begin(), a.rows.end(), b.rows.begin(),
                                        b.rows.end());
}
}  // namespace

SubspacePartition validate(const Space& space, std::vector<Subspace> parts) {
    for (const auto& W : parts) {
        if (W.n != space.n())
            throw NotAPartition("part from a different ambient space", 0, -1, -1);
        if (W.dim < 1) throw NotAPartition("zero-dimensional part", 0, -1, -1);
        if (!geom::is_rref(space.field(), W))
            throw NotAPartition("part basis is not in RREF", 0, -1, -1);
    }
    std::sort(parts.begin(), parts.end(), canonical_before);

    std::vector<int> owner(space.num_points(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        PointSet pts = space.points_of(parts[i]);
        for (auto p = pts.find_first(); p != PointSet::npos; p = pts.find_next(p)) {
            if (owner[p] != -1)
                throw NotAPartition("point covered twice", static_cast<std::uint32_t>(p),
                                    owner[p], static_cast<int>(i));
            owner[p] = static_cast<int>(i);
        }
    }
    for (std::uint32_t p = 0; p < space.num_points(); ++p)
        if (owner[p] == -1) throw NotAPartition("point uncovered", p, -1, -1);
    return SubspacePartition{space.n(), std::move(parts)};
}

PartitionType partition_type(const SubspacePartition& pi) {
    PartitionType t;
    t.m.assign(pi.n, 0);
    for (const auto& W : pi.parts)
        if (W.dim < pi.n) ++t.m[W.dim];
    return t;
}

HyperplaneType hyperplane_type(const Space& space, const SubspacePartition& pi,
                               const Subspace& H) {
    if (H.n != space.n() || H.dim != space.n() - 1)
        throw NotAHyperplane("expected an (n-1)-dimensional subspace of the ambient space");
    HyperplaneType b(space.n(), 0);
    for (const auto& W : pi.parts)
        if (W.dim < space.n() && geom::contains(space.field(), H, W)) ++b[W.dim];
    return b;
}

TypeDistribution type_distribution(const Space& space, const SubspacePartition& pi) {
    TypeDistribution dist;
    for (const auto& H : space.hyperplanes()) ++dist[hyperplane_type(space, pi, H)];
    return dist;
}

SizeIdentityReport check_size_identity(const Space& space, const SubspacePartition& pi,
                                       const Subspace& H) {
    SizeIdentityReport rep;
    rep.b = hyperplane_type(space, pi, H);
    rep.size = Int(pi.parts.size());
    rep.formula_value = 1;
    Int qpow = space.field().q();
    for (std::uint32_t i = 1; i < space.n(); ++i) {
        rep.formula_value += rep.b[i] * qpow;
        qpow *= space.field().q();
    }
    rep.holds = rep.size == rep.formula_value;
    return rep;
}

bool PackingIdentityReport::all_hold() const {
    for (const auto& it : items)
        if (!it.holds()) return false;
    return true;
}

PackingIdentityReport check_packing_identities(const Space& space, const SubspacePartition& pi,
                                               std::uint32_t d, std::uint32_t d_prime) {
    const std::uint32_t n = space.n();
    const std::uint32_t q = space.field().q();
    if (d < 1 || d_prime < 1 || d > n - 2 || d_prime > n - 2)
        throw PreconditionUnmet("part dimensions must lie in 1..n-2");
    PartitionType ty = partition_type(pi);
    const Int m_d = ty.m[d], m_dp = ty.m[d_prime];
    if (m_d == 0 || m_dp == 0)
        throw PreconditionUnmet("the partition has no part of the requested dimension");

    TypeDistribution dist = type_distribution(space, pi);
    Int total = 0, lin = 0, pairs = 0, cross = 0;
    for (const auto& [b, s] : dist) {
        total += s;
        lin += Int(b[d]) * s;
        pairs += Int(b[d]) * (b[d] - 1) / 2 * s;
        cross += Int(b[d]) * b[d_prime] * s;
    }

    PackingIdentityReport rep;
    rep.items.push_back({"(i) sum s_b = theta_n", total, formulas::theta(n, q)});
    rep.items.push_back({"(ii) sum b_d s_b = m_d h(n,d)", lin, m_d * formulas::h(n, d, q)});
    rep.items.push_back({"(iii) sum C(b_d,2) s_b = C(m_d,2) h(n,2d)", pairs,
                         m_d * (m_d - 1) / 2 * formulas::h(n, 2 * d, q)});
    if (d != d_prime) {
        rep.items.push_back({"(iv) sum b_d b_d' s_b = m_d m_d' h(n,d+d')", cross,
                             m_d * m_dp * formulas::h(n, d + d_prime, q)});
    } else {
        // The cross identity counts pairs of distinct parts; on the diagonal
        // the same-part pairs contribute m_d h(n,d) extra (combine (ii)+(iii)).
        rep.items.push_back({"(iv') sum b_d^2 s_b = m_d(m_d-1) h(n,2d) + m_d h(n,d)", cross,
                             m_d * (m_d - 1) * formulas::h(n, 2 * d, q) +
                                 m_d * formulas::h(n, d, q)});
    }
    return rep;
}

ConjectureReport check_conjecture(const Space& space, const SubspacePartition& pi,
                                  std::uint32_t j) {
    ConjectureReport rep;
    std::map<std::uint32_t, std::int64_t> by_dim;
    for (const auto& W : pi.parts) ++by_dim[W.dim];
    for (const auto& [d, cnt] : by_dim) {
        rep.dims.push_back(d);
        rep.multiplicities.push_back(cnt);
    }
    if (rep.dims.size() < 2 || j < 1 || j >= rep.dims.size())
        throw PreconditionUnmet("conjecture needs 1 <= j < #distinct dimensions >= 2");

    rep.lhs = 0;
    for (std::uint32_t i = 0; i < j; ++i) rep.lhs += rep.multiplicities[i];
    rep.bound = formulas::sigma(rep.dims[j], rep.dims[j - 1], space.field().q());
    if (rep.bound.status != formulas::Status::Defined)
        rep.status = ConjectureStatus::Unverifiable;
    else
        rep.status = rep.lhs >= rep.bound.value ? ConjectureStatus::Pass : ConjectureStatus::Fail;
    return rep;
}

}  // namespace qpart::part
