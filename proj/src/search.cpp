#include "qpart/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace qpart::search {

using geom::PointSet;

std::string to_string(Status s) {
    switch (s) {
        case Status::Exact: return "exact";
        case Status::BudgetExceeded: return "budget-exceeded";
        case Status::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

/// All subspaces of the admissible dimensions with point masks and, per
/// point, the list of candidates through it in branch order.
struct CandidatePool {
    std::vector<Subspace> subs;
    std::vector<PointSet> masks;
    std::vector<std::vector<std::uint32_t>> through;  // point -> candidate ids

    CandidatePool(const Space& space, const std::vector<std::uint32_t>& dims_in_order) {
        for (std::uint32_t d : dims_in_order)
            for (auto& W : geom::enumerate_subspaces(space.field(), space.n(), d))
                subs.push_back(std::move(W));
        masks.reserve(subs.size());
        through.resize(space.num_points());
        for (std::uint32_t i = 0; i < subs.size(); ++i) {
            masks.push_back(space.points_of(subs[i]));
            const auto& m = masks.back();
            for (auto p = m.find_first(); p != PointSet::npos; p = m.find_next(p))
                through[p].push_back(i);
        }
    }
};

struct BudgetTracker {
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    Clock::time_point deadline;
    bool exceeded = false;

    explicit BudgetTracker(const Budget& b)
        : max_nodes(b.max_nodes),
          deadline(Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(b.max_seconds))) {}

    // returns true while the search may continue
    bool tick() {
        if (exceeded) return false;
        ++nodes;
        if (nodes > max_nodes || ((nodes & 0xfff) == 0 && Clock::now() > deadline))
            exceeded = true;
        return !exceeded;
    }
};

std::uint32_t lowest_unset(const PointSet& covered) {
    auto p = (~covered).find_first();
    return p == PointSet::npos ? std::numeric_limits<std::uint32_t>::max()
                               : static_cast<std::uint32_t>(p);
}

// ---------------------------------------------------------------------------

struct PartitionSearch {
    const Space& space;
    const CandidatePool pool;
    const std::uint32_t t;
    const std::uint64_t theta_t;
    const bool minimize;
    BudgetTracker budget;

    PointSet covered;
    std::vector<std::uint32_t> chosen;
    bool has_t = false;

    std::int64_t best = -1;
    std::vector<std::uint32_t> best_parts;

    PartitionSearch(const Space& sp, std::uint32_t t_, std::vector<std::uint32_t> dims,
                    bool minimize_, const Budget& b)
        : space(sp),
          pool(sp, dims),
          t(t_),
          theta_t(geom::theta_u64(t_, sp.field().q())),
          minimize(minimize_),
          budget(b),
          covered(sp.num_points()) {}

    void seed_canonical_t() {
        for (std::uint32_t i = 0; i < pool.subs.size(); ++i) {
            if (pool.subs[i].dim != t) continue;
            chosen.push_back(i);
            covered |= pool.masks[i];
            has_t = true;
            return;
        }
    }

    void record_if_better() {
        auto size = static_cast<std::int64_t>(chosen.size());
        bool better = best < 0 || (minimize ? size < best : size > best);
        if (better) {
            best = size;
            best_parts = chosen;
        }
    }

    void dfs() {
        if (!budget.tick()) return;
        std::uint32_t p = lowest_unset(covered);
        if (p >= space.num_points()) {
            if (has_t) record_if_better();
            return;
        }
        std::uint64_t remaining = space.num_points() - covered.count();
        if (best >= 0) {
            if (minimize) {
                std::int64_t bound = chosen.size() + (remaining + theta_t - 1) / theta_t;
                if (bound >= best) return;
            } else {
                std::int64_t bound = chosen.size() + remaining / theta_t;
                if (bound <= best) return;
            }
        }
        if (!has_t && remaining < theta_t) return;  // no room left for a t-part
        for (std::uint32_t cand : pool.through[p]) {
            if (pool.masks[cand].intersects(covered)) continue;
            bool is_t = pool.subs[cand].dim == t;
            bool prev_has_t = has_t;
            chosen.push_back(cand);
            covered |= pool.masks[cand];
            has_t = prev_has_t || is_t;
            dfs();
            has_t = prev_has_t;
            covered -= pool.masks[cand];
            chosen.pop_back();
            if (budget.exceeded) return;
        }
    }

    Result run(bool symmetry) {
        if (symmetry) seed_canonical_t();
        dfs();
        Result r;
        r.nodes = budget.nodes;
        if (budget.exceeded) {
            r.status = Status::BudgetExceeded;
        } else if (best < 0) {
            r.status = Status::Infeasible;
            r.proof = "exhaustive: no partition with the required extremal part dimension";
        } else {
            r.status = Status::Exact;
            r.proof = "all branches exhausted";
        }
        if (best >= 0) {
            r.found = true;
            r.optimum = best;
            for (std::uint32_t i : best_parts) r.certificate.push_back(pool.subs[i]);
        }
        return r;
    }
};

// ---------------------------------------------------------------------------

struct SpreadSearch {
    const Space& space;
    const CandidatePool pool;  // t-subspaces only
    const std::uint32_t t;
    const std::uint64_t theta_t;
    BudgetTracker budget;

    PointSet covered, holes;
    std::vector<std::uint32_t> members;

    // max-mode state
    std::int64_t best = -1;
    std::vector<std::uint32_t> best_members;

    // target-mode state
    std::int64_t target = -1;
    bool target_found = false;
    std::vector<std::uint32_t> target_members;

    SpreadSearch(const Space& sp, std::uint32_t t_, const Budget& b)
        : space(sp),
          pool(sp, {t_}),
          t(t_),
          theta_t(geom::theta_u64(t_, sp.field().q())),
          budget(b),
          covered(sp.num_points()),
          holes(sp.num_points()) {}

    void seed_canonical() {
        members.push_back(0);
        covered |= pool.masks[0];
    }

    std::uint32_t lowest_open() const {
        PointSet open = covered | holes;
        return lowest_unset(open);
    }

    std::uint64_t free_points() const {
        return space.num_points() - covered.count() - holes.count();
    }

    void dfs_max() {
        if (!budget.tick()) return;
        std::uint32_t p = lowest_open();
        if (p >= space.num_points()) {
            if (static_cast<std::int64_t>(members.size()) > best) {
                best = static_cast<std::int64_t>(members.size());
                best_members = members;
            }
            return;
        }
        if (best >= 0 &&
            static_cast<std::int64_t>(members.size() + free_points() / theta_t) <= best)
            return;
        for (std::uint32_t cand : pool.through[p]) {
            if (pool.masks[cand].intersects(covered) || pool.masks[cand].intersects(holes))
                continue;
            members.push_back(cand);
            covered |= pool.masks[cand];
            dfs_max();
            covered -= pool.masks[cand];
            members.pop_back();
            if (budget.exceeded) return;
        }
        holes.set(p);
        dfs_max();
        holes.reset(p);
    }

    // true once a maximal spread of exactly `target` members is found
    bool dfs_target() {
        if (!budget.tick()) return false;
        if (static_cast<std::int64_t>(members.size()) == target) {
            // all remaining open points become holes; maximal iff no t-space
            // survives in the complement of the covered set
            if (!spread::find_subspace_within(space, t, ~covered, &budget.nodes)) {
                target_found = true;
                target_members = members;
                return true;
            }
            return false;
        }
        std::uint32_t p = lowest_open();
        if (p >= space.num_points()) return false;  // too few members
        std::uint64_t needed = static_cast<std::uint64_t>(target - members.size());
        if (free_points() < needed * theta_t) return false;
        for (std::uint32_t cand : pool.through[p]) {
            if (pool.masks[cand].intersects(covered) || pool.masks[cand].intersects(holes))
                continue;
            members.push_back(cand);
            covered |= pool.masks[cand];
            bool done = dfs_target();
            covered -= pool.masks[cand];
            members.pop_back();
            if (done || budget.exceeded) return done;
        }
        // hole branch; a t-space fully inside the permanent holes would make
        // every completion non-maximal
        holes.set(p);
        bool viable =
            !spread::find_subspace_within_through(space, t, holes, p, &budget.nodes).has_value();
        bool done = viable ? dfs_target() : false;
        holes.reset(p);
        return done;
    }

    Result result_common() const {
        Result r;
        r.nodes = budget.nodes;
        r.status = budget.exceeded ? Status::BudgetExceeded : Status::Exact;
        return r;
    }
};

}  // namespace

// ---------------------------------------------------------------------------

Result min_partition_size(const Space& space, std::uint32_t t, const Budget& budget,
                          bool symmetry) {
    if (t <= 1 || t >= space.n())
        throw geom::BadDimension("min_partition_size requires 1 < t < n");
    std::vector<std::uint32_t> dims;  // dimension-descending branch order
    for (std::uint32_t d = t; d >= 1; --d) dims.push_back(d);
    PartitionSearch s(space, t, dims, /*minimize=*/true, budget);
    return s.run(symmetry);
}

Result max_partition_size(const Space& space, std::uint32_t t, const Budget& budget,
                          bool symmetry) {
    if (t <= 1 || t >= space.n())
        throw geom::BadDimension("max_partition_size requires 1 < t < n");
    std::vector<std::uint32_t> dims;  // dimension-ascending branch order
    for (std::uint32_t d = t; d <= space.n() - 1; ++d) dims.push_back(d);
    PartitionSearch s(space, t, dims, /*minimize=*/false, budget);
    return s.run(symmetry);
}

Result max_partial_spread_size(const Space& space, std::uint32_t t, const Budget& budget,
                               bool symmetry) {
    if (t < 1 || t > space.n())
        throw geom::BadDimension("max_partial_spread_size requires 1 <= t <= n");
    SpreadSearch s(space, t, budget);
    if (symmetry) s.seed_canonical();  // any nonempty spread maps onto one
                                       // containing the canonical t-space
    s.dfs_max();
    Result r = s.result_common();
    if (s.best >= 0) {
        r.found = true;
        r.optimum = s.best;
        for (std::uint32_t i : s.best_members) r.certificate.push_back(s.pool.subs[i]);
        if (r.status == Status::Exact) r.proof = "all cover-or-hole branches exhausted";
    }
    return r;
}

Result find_maximal_spread_of_size(const Space& space, std::uint32_t t, std::int64_t target,
                                   const Budget& budget, bool symmetry) {
    if (target < 1) throw geom::BadDimension("target must be >= 1");
    SpreadSearch s(space, t, budget);
    s.target = target;
    if (symmetry) s.seed_canonical();
    s.dfs_target();
    Result r = s.result_common();
    if (s.target_found) {
        r.found = true;
        r.optimum = target;
        for (std::uint32_t i : s.target_members) r.certificate.push_back(s.pool.subs[i]);
        r.proof = "certificate verified maximal at the target size";
    } else if (r.status == Status::Exact) {
        r.proof = "exhaustive: no maximal partial spread of size " + std::to_string(target);
    }
    return r;
}

Result min_maximal_spread_size(const Space& space, std::uint32_t t, const Budget& budget,
                               bool symmetry) {
    std::uint64_t theta_t = geom::theta_u64(t, space.field().q());
    std::int64_t upper = static_cast<std::int64_t>(space.num_points() / theta_t);
    Result agg;
    for (std::int64_t s = 1; s <= upper; ++s) {
        Budget rem = budget;
        rem.max_nodes = budget.max_nodes > agg.nodes ? budget.max_nodes - agg.nodes : 0;
        Result r = find_maximal_spread_of_size(space, t, s, rem, symmetry);
        agg.nodes += r.nodes;
        if (r.status == Status::BudgetExceeded) {
            agg.status = Status::BudgetExceeded;
            agg.proof = "exhaustive for sizes < " + std::to_string(s) +
                        "; size " + std::to_string(s) + " not completed";
            return agg;
        }
        if (r.found) {
            agg.status = Status::Exact;
            agg.found = true;
            agg.optimum = s;
            agg.certificate = std::move(r.certificate);
            agg.proof = "no maximal partial spread of size < " + std::to_string(s) +
                        " (exhaustive); one of size " + std::to_string(s) + " found";
            return agg;
        }
    }
    agg.status = Status::Infeasible;
    agg.proof = "no maximal partial t-spread exists up to the spread bound";
    return agg;
}

}  // namespace qpart::search
