#include "qpart/spreadlab.hpp"

#include <algorithm>

namespace qpart::spread {

PartialSpread validate_spread(const Space& space, std::uint32_t t,
                              std::vector<Subspace> members) {
    for (const auto& W : members) {
        if (W.n != space.n()) throw WrongDimension("member from a different ambient space");
        if (W.dim != t) throw WrongDimension("member dimension != t");
        if (!geom::is_rref(space.field(), W)) throw WrongDimension("member basis not in RREF");
    }
    std::sort(members.begin(), members.end(), geom::lex_less);

    PartialSpread S;
    S.n = space.n();
    S.t = t;
    S.covered = space.empty_set();
    std::vector<int> owner(space.num_points(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        PointSet pts = space.points_of(members[i]);
        for (auto p = pts.find_first(); p != PointSet::npos; p = pts.find_next(p)) {
            if (owner[p] != -1)
                throw NotDisjoint("members share a point", owner[p], i);
            owner[p] = static_cast<int>(i);
        }
        S.covered |= pts;
    }
    S.members = std::move(members);
    return S;
}

namespace {

struct KernelState {
    const Space& space;
    const PointSet& allowed;
    std::uint32_t target_dim;
    std::uint64_t* nodes;
    std::vector<std::uint32_t> span_pts;     // point indices of the current span
    PointSet in_span;
    std::vector<std::vector<geom::Elem>> basis;

    explicit KernelState(const Space& sp, const PointSet& al, std::uint32_t dim,
                         std::uint64_t* nd)
        : space(sp), allowed(al), target_dim(dim), nodes(nd), in_span(sp.num_points()) {}

    // span points gained by adjoining point p; empty return = left allowed set
    bool try_extend(std::uint32_t p, std::vector<std::uint32_t>& gained) {
        const auto& F = space.field();
        const auto& v = space.point_vector(p);
        gained.clear();
        gained.push_back(p);
        std::vector<geom::Elem> w(space.n());
        for (std::uint32_t u : span_pts) {
            const auto& uv = space.point_vector(u);
            for (geom::Elem lam = 1; lam < F.q(); ++lam) {
                for (std::uint32_t j = 0; j < space.n(); ++j)
                    w[j] = F.add(uv[j], F.mul(lam, v[j]));
                std::uint32_t idx = space.point_index(w);
                if (!allowed.test(idx)) return false;
                gained.push_back(idx);
            }
        }
        return allowed.test(p);
    }

    void push(std::uint32_t p, const std::vector<std::uint32_t>& gained) {
        basis.push_back(space.point_vector(p));
        for (std::uint32_t g : gained) {
            span_pts.push_back(g);
            in_span.set(g);
        }
    }

    void pop(std::size_t gained_count) {
        basis.pop_back();
        for (std::size_t i = 0; i < gained_count; ++i) {
            in_span.reset(span_pts.back());
            span_pts.pop_back();
        }
    }

    std::optional<Subspace> dfs(std::uint32_t min_next) {
        if (nodes) ++*nodes;
        if (basis.size() == target_dim) return geom::span_of(space.field(), space.n(), basis);
        std::vector<std::uint32_t> gained;
        for (std::uint32_t p = min_next; p < space.num_points(); ++p) {
            if (!allowed.test(p) || in_span.test(p)) continue;
            if (!try_extend(p, gained)) continue;
            std::size_t cnt = gained.size();
            push(p, gained);
            if (auto r = dfs(p + 1)) return r;
            pop(cnt);
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Subspace> find_subspace_within(const Space& space, std::uint32_t dim,
                                             const PointSet& allowed, std::uint64_t* nodes) {
    if (dim == 0) return geom::zero_space(space.n());
    if (allowed.count() < geom::theta_u64(dim, space.field().q())) return std::nullopt;
    KernelState st(space, allowed, dim, nodes);
    return st.dfs(0);
}

std::optional<Subspace> find_subspace_within_through(const Space& space, std::uint32_t dim,
                                                     const PointSet& allowed,
                                                     std::uint32_t point,
                                                     std::uint64_t* nodes) {
    if (dim == 0 || !allowed.test(point)) return std::nullopt;
    KernelState st(space, allowed, dim, nodes);
    std::vector<std::uint32_t> gained{point};
    st.push(point, gained);
    return st.dfs(0);
}

MaximalityResult is_maximal(const Space& space, const PartialSpread& S) {
    PointSet holes = ~S.covered;
    auto ext = find_subspace_within(space, S.t, holes);
    return {!ext.has_value(), std::move(ext)};
}

std::optional<Subspace> first_extension(const Space& space, const PartialSpread& S) {
    for (const auto& W : geom::enumerate_subspaces(space.field(), space.n(), S.t)) {
        PointSet pts = space.points_of(W);
        if (!pts.intersects(S.covered)) return W;
    }
    return std::nullopt;
}

PartialSpread greedy_complete(const Space& space, PartialSpread S) {
    auto all = geom::enumerate_subspaces(space.field(), space.n(), S.t);
    std::vector<PointSet> masks;
    masks.reserve(all.size());
    for (const auto& W : all) masks.push_back(space.points_of(W));
    bool extended = true;
    while (extended) {
        extended = false;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (masks[i].intersects(S.covered)) continue;
            S.members.push_back(all[i]);
            S.covered |= masks[i];
            extended = true;
            break;
        }
    }
    std::sort(S.members.begin(), S.members.end(), geom::lex_less);
    return S;
}

part::SubspacePartition induced_partition(const Space& space, const PartialSpread& S,
                                          const Subspace& B) {
    const auto& F = space.field();
    // pivot columns of B give the coordinates of a vector of B in B's basis
    std::vector<std::uint32_t> pivots(B.dim);
    for (std::uint32_t i = 0; i < B.dim; ++i) {
        std::uint32_t j = 0;
        while (B.rows[i * B.n + j] == 0) ++j;
        pivots[i] = j;
    }
    Space sub(B.dim, F);
    std::vector<Subspace> parts;
    for (const auto& W : S.members) {
        Subspace I = geom::intersect(F, W, B);
        if (I.dim == 0) throw NotBlocked("a spread member meets B trivially");
        std::vector<geom::Elem> flat;
        flat.reserve(static_cast<std::size_t>(I.dim) * B.dim);
        for (std::uint32_t r = 0; r < I.dim; ++r)
            for (std::uint32_t c : pivots) flat.push_back(I.rows[r * I.n + c]);
        parts.push_back(geom::span_rows(F, B.dim, std::move(flat)));
    }
    return part::validate(sub, std::move(parts));
}

bool is_blocking_set(const Space& space, const PointSet& points, std::uint32_t t) {
    return !find_subspace_within(space, t, ~points).has_value();
}

std::optional<Subspace> find_trivial_blocking_subspace(const Space& space,
                                                       const PartialSpread& S, std::uint32_t n,
                                                       std::uint64_t guard) {
    geom::Int count = geom::gaussian_binomial(space.n(), n, geom::Int(space.field().q()));
    if (count > guard) throw TooLarge("subspace count exceeds the desk-scale guard");
    return find_subspace_within(space, n, S.covered);
}

}  // namespace qpart::spread
