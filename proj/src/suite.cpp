#include "qpart/suite.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "qpart/construct.hpp"
#include "qpart/formulas.hpp"
#include "qpart/geometry.hpp"
#include "qpart/partition.hpp"
#include "qpart/search.hpp"
#include "qpart/spreadlab.hpp"

namespace qpart::suite {

using namespace qpart;
using formulas::Int;
using geom::PointSet;
using geom::Space;
using geom::Subspace;

namespace {

struct Runner {
    std::vector<CheckResult> results;

    /// body returns (ok, value, expected); exceptions become FAIL
    void check(const std::string& name,
               const std::function<std::tuple<bool, std::string, std::string>()>& body) {
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = name;
        try {
            auto [ok, value, expected] = body();
            r.status = ok ? "PASS" : "FAIL";
            r.value = value;
            r.expected = expected;
        } catch (const std::exception& e) {
            r.status = "FAIL";
            r.value = std::string("exception: ") + e.what();
            r.expected = "-";
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
        results.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) {
        results.push_back({name, "SKIP", why, "-", 0.0});
    }
};

std::string str(const Int& v) { return v.str(); }

gf::FieldSpec gf2() { return gf::FieldSpec::make(2, 1); }
gf::FieldSpec gf3() { return gf::FieldSpec::make(3, 1); }

std::tuple<bool, std::string, std::string> expect_value(const formulas::ExtremalValue& v,
                                                        long long want) {
    bool ok = v.status == formulas::Status::Defined && v.value == want;
    std::string got = v.status == formulas::Status::Defined ? str(v.value)
                                                            : formulas::to_string(v.status);
    return {ok, got, std::to_string(want)};
}

// --- criterion 1: formula layer ---------------------------------------------

void formula_layer(Runner& run) {
    struct Row {
        const char* name;
        formulas::ExtremalValue value;
        long long want;
    };
    std::vector<Row> rows = {
        {"sigma_2(5,2)", formulas::sigma(5, 2, 2), 13},
        {"rho_2(5,2)", formulas::rho(5, 2, 2), 9},
        {"sigma_2(7,3)", formulas::sigma(7, 3, 2), 21},
        {"rho_2(7,3)", formulas::rho(7, 3, 2), 17},
        {"sigma_2(8,3)", formulas::sigma(8, 3, 2), 41},
        {"rho_2(8,3)", formulas::rho(8, 3, 2), 33},
        {"sigma_3(5,2)", formulas::sigma(5, 2, 3), 37},
        {"rho_3(5,2)", formulas::rho(5, 2, 3), 28},
        {"tau_2(5,2)", formulas::tau(5, 2, 2), 5},
        {"tau_2(6,2)", formulas::tau(6, 2, 2), 13},
        {"tau_2(8,3)", formulas::tau(8, 3, 2), 9},
    };
    for (auto& row : rows)
        run.check(std::string("formula.") + row.name,
                  [&]() { return expect_value(row.value, row.want); });
}

// --- criterion 2: theta/ell relations ---------------------------------------

void relations(Runner& run) {
    run.check("relations.eq2-eq4.n<=24.q2345", []() {
        std::uint64_t checked = 0;
        for (std::uint32_t q : {2u, 3u, 4u, 5u})
            for (std::uint32_t t = 2; t <= 12; ++t)
                for (std::uint32_t n = 2 * t; n <= 24; ++n) {
                    auto rep = formulas::check_relations(n, t, q);
                    if (!rep.all_hold())
                        return std::tuple{false,
                                          "violation at n=" + std::to_string(n) + " t=" +
                                              std::to_string(t) + " q=" + std::to_string(q),
                                          std::string("all exact")};
                    checked += rep.checks.size();
                }
        return std::tuple{true, std::to_string(checked) + " identities exact",
                          std::string("all exact")};
    });
}

// --- criterion 3: constructions ---------------------------------------------

std::string type_string(const part::PartitionType& ty) {
    std::string s = "(";
    for (std::size_t i = ty.m.size(); i-- > 1;) {
        s += std::to_string(ty.m[i]);
        if (i > 1) s += ",";
    }
    return s + ")";
}

void constructions(Runner& run) {
    run.check("construct.pi_m(5,2,2)", []() {
        auto cert = construct::pi_m(5, 2, gf2());
        auto ty = part::partition_type(cert.partition);
        bool ok = cert.partition.size() == 9 && ty.m[4] == 0 && ty.m[3] == 1 && ty.m[2] == 8 &&
                  ty.m[1] == 0;
        return std::tuple{ok, "size " + std::to_string(cert.partition.size()) + " type " +
                                  type_string(ty),
                          std::string("size 9 type (0,1,8,0)")};
    });
    run.check("construct.pi_M(5,2,2)", []() {
        auto cert = construct::pi_M(5, 2, gf2());
        auto ty = part::partition_type(cert.partition);
        bool ok = cert.partition.size() == 13 && ty.m[4] == 0 && ty.m[3] == 0 && ty.m[2] == 9 &&
                  ty.m[1] == 4;
        return std::tuple{ok, "size " + std::to_string(cert.partition.size()) + " type " +
                                  type_string(ty),
                          std::string("size 13 type (0,0,9,4)")};
    });
    run.check("construct.pi_M(8,3,2)", []() {
        auto cert = construct::pi_M(8, 3, gf2());
        return std::tuple{cert.partition.size() == 41,
                          "size " + std::to_string(cert.partition.size()),
                          std::string("size 41")};
    });
}

// --- criterion 4: hyperplane identity suites --------------------------------

bool identity_suite(const Space& space, const part::SubspacePartition& pi, std::string& detail) {
    for (const auto& H : space.hyperplanes()) {
        auto rep = part::check_size_identity(space, pi, H);
        if (!rep.holds) {
            detail = "size identity fails at a hyperplane";
            return false;
        }
    }
    auto ty = part::partition_type(pi);
    for (std::uint32_t d = 1; d + 2 <= space.n(); ++d) {
        if (ty.m[d] == 0) continue;
        for (std::uint32_t dp = d; dp + 2 <= space.n(); ++dp) {
            if (ty.m[dp] == 0) continue;
            auto rep = part::check_packing_identities(space, pi, d, dp);
            if (!rep.all_hold()) {
                detail = "packing identity fails at d=" + std::to_string(d) +
                         " d'=" + std::to_string(dp);
                return false;
            }
        }
    }
    detail = "exact at every hyperplane and admissible (d,d')";
    return true;
}

void identity_suites(Runner& run) {
    auto one = [&](const std::string& name, std::uint32_t n, const part::SubspacePartition& pi,
                   const gf::FieldSpec& F) {
        run.check("identities." + name, [&]() {
            Space space(n, F);
            std::string detail;
            bool ok = identity_suite(space, pi, detail);
            return std::tuple{ok, detail, std::string("exact")};
        });
    };
    auto F = gf2();
    auto pim = construct::pi_m(5, 2, F).partition;
    auto piM = construct::pi_M(5, 2, F).partition;
    auto piM73 = construct::pi_M(7, 3, F).partition;
    auto spread42 = construct::desarguesian_spread(2, 2, F);
    one("pi_m(5,2,2)", 5, pim, F);
    one("pi_M(5,2,2)", 5, piM, F);
    one("pi_M(7,3,2)", 7, piM73, F);
    one("spread(4,2,2)", 4, spread42, F);
}

// --- criterion 5: search vs formula -----------------------------------------

void oracle_agreement(Runner& run, const Options& opts) {
    search::Budget budget{opts.budget_nodes, opts.budget_secs};

    run.check("search.min_partition(5,2,2)", [&]() {
        Space space(5, gf2());
        auto r = search::min_partition_size(space, 2, budget);
        bool ok = r.status == search::Status::Exact && r.optimum == 13;
        part::validate(space, r.certificate);  // certificate must re-validate
        return std::tuple{ok, std::to_string(r.optimum) + " (" + search::to_string(r.status) +
                                  ", " + std::to_string(r.nodes) + " nodes)",
                          std::string("13 exact")};
    });
    run.check("search.max_partition(5,2,2)", [&]() {
        Space space(5, gf2());
        auto r = search::max_partition_size(space, 2, budget);
        bool ok = r.status == search::Status::Exact && r.optimum == 9;
        part::validate(space, r.certificate);
        return std::tuple{ok, std::to_string(r.optimum) + " (" + search::to_string(r.status) +
                                  ", " + std::to_string(r.nodes) + " nodes)",
                          std::string("9 exact")};
    });
    run.check("search.max_partition(3,2,2)", [&]() {
        Space space(3, gf2());
        auto r = search::max_partition_size(space, 2, budget);
        return std::tuple{r.status == search::Status::Infeasible, search::to_string(r.status),
                          std::string("infeasible")};
    });
    run.check("search.min_maximal_spread(5,2,2)", [&]() {
        Space space(5, gf2());
        auto r = search::min_maximal_spread_size(space, 2, budget);
        bool ok = r.status == search::Status::Exact && r.optimum == 5;
        spread::validate_spread(space, 2, r.certificate);
        return std::tuple{ok, std::to_string(r.optimum) + " (" + search::to_string(r.status) +
                                  ", " + std::to_string(r.nodes) + " nodes)",
                          std::string("5 exact")};
    });
    run.check("search.max_partial_spread(5,2,2)+sigma_crosscheck", [&]() {
        Space space(5, gf2());
        auto r = search::max_partial_spread_size(space, 2, budget);
        bool ok = r.status == search::Status::Exact && r.optimum == 9;
        // theta_5 - 2 * max = 31 - 18 = 13 = sigma_2(5,2)
        ok = ok && (31 - 2 * r.optimum == 13);
        spread::validate_spread(space, 2, r.certificate);
        return std::tuple{ok, std::to_string(r.optimum) + ", 31-2*max=" +
                                  std::to_string(31 - 2 * r.optimum),
                          std::string("9, cross-check 13")};
    });
}

// --- criterion 6: Glynn lower bound at q=2 ----------------------------------

void glynn_check(Runner& run) {
    run.check("glynn.tau_2(4,2)>=4", [&]() {
        Space space(4, gf2());
        auto lines = geom::enumerate_subspaces(space.field(), 4, 2);
        std::vector<PointSet> masks;
        for (const auto& W : lines) masks.push_back(space.points_of(W));

        // every partial 2-spread of size <= 4, fully enumerated
        std::uint64_t examined = 0;
        bool any_maximal = false;
        std::function<void(std::size_t, std::vector<std::size_t>&, PointSet&)> rec =
            [&](std::size_t start, std::vector<std::size_t>& cur, PointSet& covered) {
                if (!cur.empty()) {
                    ++examined;
                    if (!spread::find_subspace_within(space, 2, ~covered)) any_maximal = true;
                }
                if (cur.size() == 4 || any_maximal) return;
                for (std::size_t i = start; i < lines.size(); ++i) {
                    if (masks[i].intersects(covered)) continue;
                    cur.push_back(i);
                    covered |= masks[i];
                    rec(i + 1, cur, covered);
                    covered -= masks[i];
                    cur.pop_back();
                }
            };
        std::vector<std::size_t> cur;
        PointSet covered = space.empty_set();
        rec(0, cur, covered);
        bool ok = !any_maximal;
        return std::tuple{ok, std::to_string(examined) +
                                  " spreads of size<=4 examined, none maximal",
                          std::string("minimum >= 5 >= 4 = 2q")};
    });
}

// --- criterion 7: embedded spread maximality --------------------------------

void embedded_maximality(Runner& run) {
    auto one = [&](const std::string& name, const gf::FieldSpec& F, std::size_t want_size) {
        run.check("embedded." + name, [&]() {
            auto S = construct::embedded_spread_maximal(4, 2, F);
            Space space(5, F);
            auto mx = spread::is_maximal(space, S);
            bool ok = S.size() == want_size && mx.maximal;
            return std::tuple{ok, "size " + std::to_string(S.size()) +
                                      (mx.maximal ? ", maximal" : ", extendable"),
                              std::string("size ") + std::to_string(want_size) + ", maximal"};
        });
    };
    one("V(5,2).t2", gf2(), 5);
    one("V(5,3).t2", gf3(), 10);
}

// --- criterion 8: stretch V(6,2) pipeline -----------------------------------

void stretch_pipeline(Runner& run, const Options& opts) {
    if (opts.quick) {
        run.skip("stretch.find_maximal(6,2,2,target13)", "quick mode");
        return;
    }
    search::Budget budget{opts.budget_nodes, opts.budget_secs};
    Space space(6, gf2());
    auto r = search::find_maximal_spread_of_size(space, 2, 13, budget);
    if (r.status == search::Status::BudgetExceeded && !r.found) {
        run.skip("stretch.find_maximal(6,2,2,target13)",
                 "budget exceeded after " + std::to_string(r.nodes) + " nodes");
        return;
    }
    run.check("stretch.find_maximal(6,2,2,target13)", [&]() {
        if (!r.found) return std::tuple{false, std::string("no certificate"),
                                        std::string("certificate of size 13")};
        auto S = spread::validate_spread(space, 2, r.certificate);
        auto mx = spread::is_maximal(space, S);
        return std::tuple{S.size() == 13 && mx.maximal,
                          "size " + std::to_string(S.size()) +
                              (mx.maximal ? ", maximal" : ", extendable"),
                          std::string("size 13, maximal")};
    });
    run.check("stretch.blocking_subspace+induced_partition", [&]() {
        auto S = spread::validate_spread(space, 2, r.certificate);
        auto B = spread::find_trivial_blocking_subspace(space, S, 5);
        if (!B) return std::tuple{false, std::string("no 5-dim subspace inside union(S)"),
                                  std::string("trivial blocking set exists")};
        auto pi = spread::induced_partition(space, S, *B);
        bool ok = pi.size() >= 13;
        return std::tuple{ok, "induced partition size " + std::to_string(pi.size()),
                          std::string(">= 13 = sigma_2(5,2)")};
    });
}

// --- criterion 9: standalone property suites --------------------------------

void property_suites(Runner& run, const Options& opts) {
    run.check("props.field_axioms.q<=16", []() {
        for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                 {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1},
                 {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
            auto F = gf::FieldSpec::make(p, e);
            const std::uint32_t q = F.q();
            for (std::uint32_t a = 0; a < q; ++a) {
                if (a != 0 && F.mul(a, F.inv(a)) != 1) return std::tuple{false,
                    std::string("inverse fails"), std::string("field axioms")};
                if (a != 0 && F.pow(a, q - 1) != 1) return std::tuple{false,
                    std::string("a^(q-1) != 1"), std::string("field axioms")};
                for (std::uint32_t b = 0; b < q; ++b) {
                    if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a))
                        return std::tuple{false, std::string("commutativity fails"),
                                          std::string("field axioms")};
                    for (std::uint32_t c = 0; c < q; ++c) {
                        if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c)) ||
                            F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)) ||
                            F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)))
                            return std::tuple{false, std::string("assoc/distrib fails"),
                                              std::string("field axioms")};
                    }
                }
            }
        }
        return std::tuple{true, std::string("10 fields exhaustive"),
                          std::string("field axioms")};
    });

    run.check("props.subspace_counts.n<=6.q23", []() {
        for (std::uint32_t q : {2u, 3u}) {
            auto F = gf::FieldSpec::make(q, 1);
            for (std::uint32_t n = 1; n <= 6; ++n)
                for (std::uint32_t d = 0; d <= n; ++d) {
                    auto subs = geom::enumerate_subspaces(F, n, d);
                    if (Int(subs.size()) != geom::gaussian_binomial(n, d, Int(q)))
                        return std::tuple{false,
                                          "count mismatch at n=" + std::to_string(n) + " d=" +
                                              std::to_string(d) + " q=" + std::to_string(q),
                                          std::string("gaussian binomials")};
                }
        }
        return std::tuple{true, std::string("all (n,d,q) counts match"),
                          std::string("gaussian binomials")};
    });

    run.check("props.hyperplane_duality.n<=5.q23", []() {
        for (std::uint32_t q : {2u, 3u}) {
            auto F = gf::FieldSpec::make(q, 1);
            for (std::uint32_t n = 2; n <= (q == 2 ? 5u : 4u); ++n) {
                Space space(n, F);
                auto hyps = space.hyperplanes();
                for (std::uint32_t d = 1; d < n; ++d)
                    for (const auto& W : geom::enumerate_subspaces(F, n, d)) {
                        std::uint64_t cnt = 0;
                        for (const auto& H : hyps)
                            if (geom::contains(F, H, W)) ++cnt;
                        if (Int(cnt) != formulas::h(n, d, q))
                            return std::tuple{false, std::string("duality count mismatch"),
                                              std::string("h_q(n,d)")};
                    }
            }
        }
        return std::tuple{true, std::string("containment counts match h_q(n,d)"),
                          std::string("h_q(n,d)")};
    });

    run.check("props.size_congruence.mod_q^t", []() {
        // every min-dim-t partition at hand: |Pi| == 1 (mod q^t)
        struct Case {
            std::uint32_t n, t, q;
        };
        for (auto c : std::vector<Case>{{5, 2, 2}, {6, 2, 2}, {7, 3, 2}, {8, 3, 2}, {5, 2, 3}}) {
            auto F = gf::FieldSpec::make(c.q, 1);
            auto pi = construct::pi_m(c.n, c.t, F).partition;
            std::uint64_t qt = 1;
            for (std::uint32_t i = 0; i < c.t; ++i) qt *= c.q;
            if (pi.size() % qt != 1)
                return std::tuple{false, "congruence fails at pi_m(" + std::to_string(c.n) + ")",
                                  std::string("1 mod q^t")};
        }
        return std::tuple{true, std::string("pi_m sizes == 1 mod q^t"),
                          std::string("1 mod q^t")};
    });

    run.check("props.determinism", [&]() {
        auto F = gf2();
        auto a1 = construct::pi_M(5, 2, F).partition;
        auto a2 = construct::pi_M(5, 2, F).partition;
        if (!(a1.parts == a2.parts))
            return std::tuple{false, std::string("pi_M differs between runs"),
                              std::string("identical")};
        Space space(4, F);
        search::Budget b{10'000'000, 60.0};
        auto r1 = search::min_maximal_spread_size(space, 2, b);
        auto r2 = search::min_maximal_spread_size(space, 2, b);
        bool ok = r1.nodes == r2.nodes && r1.optimum == r2.optimum &&
                  r1.certificate == r2.certificate;
        return std::tuple{ok, "nodes " + std::to_string(r1.nodes) + "/" +
                                  std::to_string(r2.nodes),
                          std::string("identical runs")};
    });

    run.check("props.random_modular_law", [&]() {
        auto F = gf2();
        Space space(5, F);
        auto subs = geom::enumerate_subspaces(F, 5, 2);
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
        for (int i = 0; i < 200; ++i) {
            const auto& a = subs[pick(rng)];
            const auto& b = subs[pick(rng)];
            auto inter = geom::intersect(F, a, b);
            auto sum = geom::sum_space(F, a, b);
            if (a.dim + b.dim != inter.dim + sum.dim)
                return std::tuple{false, std::string("dimension formula fails"),
                                  std::string("dim a + dim b = dim(cap) + dim(sum)")};
        }
        return std::tuple{true, std::string("200 random pairs"),
                          std::string("dimension formula")};
    });
}

}  // namespace

std::vector<CheckResult> run_paper_suite(const Options& opts) {
    Runner run;
    formula_layer(run);
    relations(run);
    constructions(run);
    identity_suites(run);
    oracle_agreement(run, opts);
    glynn_check(run);
    embedded_maximality(run);
    stretch_pipeline(run, opts);
    property_suites(run, opts);
    return run.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == "FAIL") return false;
    return true;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        std::ostringstream line;
        line << r.status << " " << r.name << " [" << r.value << "] [" << r.expected << "] "
             << static_cast<long long>(r.millis) << "ms";
        out << line.str() << "\n";
    }
}

}  // namespace qpart::suite
