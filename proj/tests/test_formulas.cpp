#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpart/formulas.hpp"

using namespace qpart::formulas;

namespace {
Int ipow(std::uint32_t q, std::uint32_t k) {
    Int r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r *= q;
    return r;
}
}  // namespace

TEST_CASE("parameter decomposition is Euclidean") {
    auto P = ParameterSet::make(8, 3, 2);
    CHECK(P.k == 2);
    CHECK(P.r == 2);
    auto Q = ParameterSet::make(6, 3, 2);
    CHECK(Q.k == 2);
    CHECK(Q.r == 0);
}

TEST_CASE("theta and h") {
    CHECK(theta(0, 2) == 0);
    CHECK(theta(5, 2) == 31);
    CHECK(theta(3, 3) == 13);
    CHECK(theta(4, 4) == 85);
    CHECK(h(5, 2, 2) == theta(3, 2));
    CHECK(h(5, 5, 2) == 0);  // no hyperplane contains V itself
    CHECK(h(5, 4, 2) == 1);
}

TEST_CASE("ell matches the defining sum and its domain is k >= 2") {
    // n=5,t=2: k=2,r=1, ell = q^1 * q^0 = q.
    CHECK(ell(5, 2, 2) == 2);
    CHECK(ell(5, 2, 3) == 3);
    // n=8,t=3: k=2,r=2, ell = q^2.
    CHECK(ell(8, 3, 2) == 4);
    // n=7,t=2: k=3,r=1, ell = q(1 + q^2).
    CHECK(ell(7, 2, 2) == 10);
    CHECK_THROWS_AS(ell(3, 2, 2), OutOfRange);  // k = 1
}

TEST_CASE("sigma closed forms") {
    auto v = sigma(5, 2, 2);
    REQUIRE(v.status == Status::Defined);
    CHECK(v.value == 13);
    CHECK(sigma(7, 3, 2).value == 21);
    CHECK(sigma(8, 3, 2).value == 41);
    CHECK(sigma(5, 2, 3).value == 37);
    CHECK(sigma(7, 2, 2).value == 45);
    // t | n: the spread value theta_n / theta_t.
    CHECK(sigma(6, 2, 2).value == theta(6, 2) / theta(2, 2));
    CHECK(sigma(4, 2, 2).value == 5);
    // Degenerate ends.
    CHECK(sigma(4, 4, 2).value == 1);
    CHECK(sigma(4, 1, 2).value == theta(4, 2));
    // t < n < 2t: open.
    CHECK(sigma(5, 3, 2).status == Status::Open);
}

TEST_CASE("sigma and rho agree with the generic formulas for r >= 1") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t t = 2; t <= 5; ++t)
            for (std::uint32_t n = 2 * t + 1; n <= 2 * t + t - 1 + 6; ++n) {
                auto P = ParameterSet::make(n, t, q);
                if (P.r == 0 || P.k < 2) continue;
                std::uint32_t beta = (t + P.r + 1) / 2;
                Int l = ell(n, t, q);
                auto s = sigma(n, t, q);
                auto r = rho(n, t, q);
                REQUIRE(s.status == Status::Defined);
                REQUIRE(r.status == Status::Defined);
                CHECK(s.value == l * ipow(q, t) + ipow(q, beta) + 1);
                CHECK(r.value == l * ipow(q, t) + 1);
                CHECK(s.value > r.value);
            }
}

TEST_CASE("rho closed forms and the nonexistent band") {
    CHECK(rho(5, 2, 2).value == 9);
    CHECK(rho(7, 3, 2).value == 17);
    CHECK(rho(8, 3, 2).value == 33);
    CHECK(rho(5, 2, 3).value == 28);
    CHECK(rho(6, 2, 2).value == 21);
    CHECK(rho(4, 1, 2).value == theta(4, 2));
    CHECK(rho(4, 4, 2).value == 1);
    CHECK(rho(5, 3, 2).status == Status::Nonexistent);
    CHECK(rho(7, 4, 3).status == Status::Nonexistent);
}

TEST_CASE("tau values through the sigma bridge") {
    // tau_q(N, t) with N = n + t - 1 equals sigma_q(n, t) for n >= 2t, t > 1.
    CHECK(tau(5, 2, 2).value == 5);    // n = 4: spread value
    CHECK(tau(6, 2, 2).value == 13);   // n = 5
    CHECK(tau(8, 3, 2).value == 9);    // n = 6: theta_6/theta_3
    CHECK(tau(10, 3, 2).value == 41);  // n = 8
    CHECK(tau(6, 2, 3).value == 37);   // n = 5, q = 3
    CHECK(tau(4, 2, 2).status == Status::Open);  // n = 3 < 2t
    CHECK(tau(5, 1, 2).status == Status::Open);  // t = 1 excluded
}

TEST_CASE("exact relations hold over a parameter sweep") {
    for (std::uint32_t q : {2u, 3u, 5u})
        for (std::uint32_t t = 1; t <= 6; ++t)
            for (std::uint32_t n = 2 * t; n <= 2 * t + 8; ++n) {
                auto rep = check_relations(n, t, q);
                CHECK(rep.all_hold());
                for (const auto& c : rep.checks) CHECK(c.lhs == c.rhs);
            }
}

TEST_CASE("reference bounds on tau_q(4,2)") {
    auto b = reference_bounds(9);
    CHECK(b.glynn_lower == 18);
    CHECK(b.odd_upper == doctest::Approx((2 * std::log2(9.0) + 1) * 9 + 1));
    CHECK(b.even_threshold_unquantified);
    CHECK(reference_bounds(4).glynn_lower == 8);
}

TEST_CASE("sigma is strictly antimonotone in t where defined") {
    auto tab = antimonotone_table(12, 2, 2, 6);
    CHECK(tab.strictly_decreasing);
    REQUIRE(tab.rows.size() == 5);
    for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i)
        if (tab.rows[i].sigma.status == Status::Defined &&
            tab.rows[i + 1].sigma.status == Status::Defined)
            CHECK(tab.rows[i].sigma.value > tab.rows[i + 1].sigma.value);
}
