#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "qpart/construct.hpp"
#include "qpart/json_io.hpp"

using namespace qpart;
using qpart::gf::FieldSpec;

TEST_CASE("field round trip preserves the modulus") {
    auto F = FieldSpec::make(2, 3);
    auto j = io::field_to_json(F);
    auto G = io::field_from_json(j);
    CHECK(F == G);
    auto F9 = io::field_from_json(io::field_to_json(FieldSpec::make(3, 2)));
    CHECK(F9.q() == 9);
}

TEST_CASE("field parsing rejects malformed and mathematically bad input") {
    CHECK_THROWS_AS(io::field_from_json(io::json{{"p", 2}}), io::ParseError);
    CHECK_THROWS_AS(io::field_from_json(io::json::array()), io::ParseError);
    CHECK_THROWS_AS(io::field_from_json(io::json{{"p", 4}, {"e", 1}}), io::ParseError);
    CHECK_THROWS_AS(
        io::field_from_json(io::json{{"p", 2}, {"e", 2}, {"modulus", {1, 0, 1}}}),
        io::ParseError);  // x^2+1 reducible over GF(2)
}

TEST_CASE("subspace round trip, RREF enforcement, range checks") {
    auto F = FieldSpec::make(3, 1);
    auto W = geom::span_of(F, 4, {{1, 0, 2, 1}, {0, 1, 1, 2}});
    auto back = io::subspace_from_json(io::subspace_to_json(W), F);
    CHECK(back == W);

    // Non-RREF basis (same span) is rejected rather than silently fixed.
    io::json bad{{"n", 4}, {"basis", {{1, 1, 0, 0}, {1, 0, 0, 0}}}};
    auto F2 = FieldSpec::make(2, 1);
    CHECK_THROWS_AS(io::subspace_from_json(bad, F2), io::ParseError);

    io::json outside{{"n", 2}, {"basis", {{1, 7}}}};
    CHECK_THROWS_AS(io::subspace_from_json(outside, F2), io::ParseError);

    io::json short_row{{"n", 3}, {"basis", {{1, 0}}}};
    CHECK_THROWS_AS(io::subspace_from_json(short_row, F2), io::ParseError);
}

TEST_CASE("zero subspace serializes as an empty basis") {
    auto F = FieldSpec::make(2, 1);
    auto Z = geom::zero_space(3);
    auto j = io::subspace_to_json(Z);
    CHECK(j.at("basis").empty());
    CHECK(io::subspace_from_json(j, F) == Z);
}

TEST_CASE("partition round trip survives re-validation") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto pi = part::validate(V, construct::pi_M(5, 2, F).partition.parts);
    auto j = io::partition_to_json(F, pi);
    auto parsed = io::partition_from_json(j);
    CHECK(parsed.field == F);
    CHECK(parsed.n == 5);
    auto pi2 = part::validate(geom::Space(parsed.n, parsed.field), parsed.parts);
    CHECK(pi2.parts == pi.parts);
}

TEST_CASE("spread round trip") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(5, F);
    auto S = construct::embedded_spread_maximal(4, 2, F);
    auto j = io::spread_to_json(F, S);
    auto parsed = io::spread_from_json(j);
    CHECK(parsed.t == 2);
    auto S2 = spread::validate_spread(geom::Space(parsed.n, parsed.field), parsed.t,
                                      parsed.members);
    CHECK(S2.members == S.members);
    CHECK(S2.covered == S.covered);
}

TEST_CASE("file I/O and malformed files") {
    auto F = FieldSpec::make(2, 1);
    geom::Space V(4, F);
    auto pi = part::validate(V, construct::desarguesian_spread(2, 2, F).parts);
    const std::string path = "roundtrip_tmp.json";
    io::save_file(path, io::partition_to_json(F, pi));
    auto parsed = io::partition_from_json(io::load_file(path));
    CHECK(parsed.parts.size() == 5);
    std::remove(path.c_str());

    CHECK_THROWS_AS(io::load_file("does_not_exist_anywhere.json"), io::ParseError);
    const std::string bad = "garbage_tmp.json";
    {
        FILE* f = std::fopen(bad.c_str(), "w");
        std::fputs("{ not json", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(io::load_file(bad), io::ParseError);
    std::remove(bad.c_str());
}

TEST_CASE("partition parsing rejects mixed ambient dimensions") {
    io::json j{{"field", {{"p", 2}, {"e", 1}}},
               {"n", 3},
               {"parts", {io::json{{"n", 4}, {"basis", {{1, 0, 0, 0}}}}}}};
    CHECK_THROWS_AS(io::partition_from_json(j), io::ParseError);
}
