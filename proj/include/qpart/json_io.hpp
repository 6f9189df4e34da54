#pragma once

#include <json.hpp>
#include <string>

#include "qpart/gf.hpp"
#include "qpart/partition.hpp"
#include "qpart/spreadlab.hpp"

namespace qpart::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FieldSpec <-> {"p":..., "e":..., "modulus":[...]}
json field_to_json(const gf::FieldSpec& F);
gf::FieldSpec field_from_json(const json& j);

// Subspace <-> {"n":..., "basis":[[...],...]}; input must already be RREF.
json subspace_to_json(const geom::Subspace& W);
geom::Subspace subspace_from_json(const json& j, const gf::FieldSpec& F);

// Partition <-> {"field":..., "n":..., "parts":[...]}. Parsing validates.
json partition_to_json(const gf::FieldSpec& F, const part::SubspacePartition& pi);
struct ParsedPartition {
    gf::FieldSpec field;
    std::uint32_t n;
    std::vector<geom::Subspace> parts;  // not yet validated
};
ParsedPartition partition_from_json(const json& j);

// Spread mirrors the partition form plus {"t":...}.
json spread_to_json(const gf::FieldSpec& F, const spread::PartialSpread& S);
struct ParsedSpread {
    gf::FieldSpec field;
    std::uint32_t n;
    std::uint32_t t;
    std::vector<geom::Subspace> members;
};
ParsedSpread spread_from_json(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace qpart::io
