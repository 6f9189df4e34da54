#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpart/construct.hpp"
#include "qpart/partition.hpp"

using namespace qpart;
using geom::Subspace;
using qpart::gf::FieldSpec;

namespace {
// All 1-spaces of V(n,q): the trivial partition, handy as a known-good input.
std::vector<Subspace> all_points_partition(const geom::Space& V) {
    std::vector<Subspace> parts;
    for (std::uint32_t p = 0; p < V.num_points(); ++p)
        parts.push_back(geom::span_of(V.field(), V.n(), {V.point_vector(p)}));
    return parts;
}
}  // namespace

TEST_CASE("the all-points partition validates; its type is (theta_n) ones") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(4, F);
    auto pi = part::validate(V, all_points_partition(V));
    CHECK(pi.size() == 15);
    auto ty = part::partition_type(pi);
    CHECK(ty.m[1] == 15);
    CHECK(ty.m[2] == 0);
    CHECK(ty.m[3] == 0);
}

TEST_CASE("missing coverage and double coverage raise witnesses") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(3, F);
    auto parts = all_points_partition(V);

    SUBCASE("a dropped part leaves an uncovered witness") {
        parts.pop_back();
        try {
            part::validate(V, parts);
            FAIL("expected NotAPartition");
        } catch (const part::NotAPartition& e) {
            CHECK(e.part_b == -1);
            CHECK_FALSE(
                V.points_of(parts[0]).test(e.witness_point));  // genuinely uncovered? spot check
        }
    }
    SUBCASE("an overlapping extra part names both owners") {
        parts.push_back(geom::span_of(F, 3, {{1, 0, 0}, {0, 1, 0}}));
        try {
            part::validate(V, parts);
            FAIL("expected NotAPartition");
        } catch (const part::NotAPartition& e) {
            CHECK(e.part_a >= 0);
            CHECK(e.part_b >= 0);
            CHECK(e.part_a != e.part_b);
        }
    }
}

TEST_CASE("canonical order: dimension descending, then lex") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = construct::pi_M(5, 2, F).partition;
    for (std::size_t i = 0; i + 1 < pi.parts.size(); ++i) {
        const auto &a = pi.parts[i], &b = pi.parts[i + 1];
        CHECK((a.dim > b.dim || (a.dim == b.dim && geom::lex_less(a, b))));
    }
}

TEST_CASE("partition types of the two extremal constructions on V(5,2)") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);

    auto piM = part::validate(V, construct::pi_M(5, 2, F).partition.parts);
    auto tyM = part::partition_type(piM);
    CHECK(piM.size() == 13);
    CHECK(tyM.m[4] == 0);
    CHECK(tyM.m[3] == 0);
    CHECK(tyM.m[2] == 9);
    CHECK(tyM.m[1] == 4);

    auto pim = part::validate(V, construct::pi_m(5, 2, F).partition.parts);
    auto tym = part::partition_type(pim);
    CHECK(pim.size() == 9);
    CHECK(tym.m[3] == 1);
    CHECK(tym.m[2] == 8);
    CHECK(tym.m[1] == 0);
}

TEST_CASE("hyperplane size identity |Pi| = 1 + sum b_i q^i at every hyperplane") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    for (auto&& cert : {construct::pi_M(5, 2, F), construct::pi_m(5, 2, F)}) {
        auto pi = part::validate(V, cert.partition.parts);
        for (const auto& H : V.hyperplanes()) {
            auto rep = part::check_size_identity(V, pi, H);
            CHECK(rep.holds);
            CHECK(rep.size == part::Int(pi.size()));
        }
    }
}

TEST_CASE("hyperplane type distribution sums to theta_n hyperplanes") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_M(5, 2, F).partition.parts);
    auto dist = part::type_distribution(V, pi);
    std::int64_t total = 0;
    for (const auto& [b, s] : dist) total += s;
    CHECK(total == 31);
}

TEST_CASE("packing identities hold exactly for pi_M(5,2,2)") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_M(5, 2, F).partition.parts);
    for (std::uint32_t d : {1u, 2u})
        for (std::uint32_t dp : {1u, 2u}) {
            if (dp < d) continue;
            auto rep = part::check_packing_identities(V, pi, d, dp);
            CHECK(rep.all_hold());
        }
}

TEST_CASE("packing identities refuse dimensions with no parts") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_M(5, 2, F).partition.parts);
    CHECK_THROWS_AS(part::check_packing_identities(V, pi, 3, 3), part::PreconditionUnmet);
}

TEST_CASE("size identity rejects a non-hyperplane") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_m(5, 2, F).partition.parts);
    auto small = geom::span_of(F, 5, {{1, 0, 0, 0, 0}});
    CHECK_THROWS_AS(part::check_size_identity(V, pi, small), part::NotAHyperplane);
}

TEST_CASE("dimension-sum conjecture on pi_M(5,2,2): 4 ones >= sigma_2(2,1) = 3") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_M(5, 2, F).partition.parts);
    auto rep = part::check_conjecture(V, pi, 1);
    CHECK(rep.status == part::ConjectureStatus::Pass);
    CHECK(rep.lhs == 4);
    REQUIRE(rep.bound.status == formulas::Status::Defined);
    CHECK(rep.bound.value == 3);
}

TEST_CASE("conjecture on pi_m(5,2,2): 8 twos >= sigma_2(3,2), which is open") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_m(5, 2, F).partition.parts);
    auto rep = part::check_conjecture(V, pi, 1);
    CHECK(rep.status == part::ConjectureStatus::Unverifiable);
    CHECK(rep.lhs == 8);
}
