#include "qpart/json_io.hpp"

#include <fstream>

namespace qpart::io {

json field_to_json(const gf::FieldSpec& F) {
    return json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

gf::FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("e"))
        throw ParseError("field: expected {p, e, modulus}");
    std::optional<std::vector<gf::Elem>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<gf::Elem>>();
    try {
        return gf::FieldSpec::make(j.at("p").get<std::uint32_t>(),
                                   j.at("e").get<std::uint32_t>(), modulus);
    } catch (const gf::FieldError& e) {
        throw ParseError(std::string("field: ") + e.what());
    }
}

json subspace_to_json(const geom::Subspace& W) {
    json basis = json::array();
    for (std::uint32_t i = 0; i < W.dim; ++i) {
        auto r = W.row(i);
        basis.push_back(std::vector<gf::Elem>(r.begin(), r.end()));
    }
    return json{{"n", W.n}, {"basis", basis}};
}

geom::Subspace subspace_from_json(const json& j, const gf::FieldSpec& F) {
    if (!j.is_object() || !j.contains("n") || !j.contains("basis"))
        throw ParseError("subspace: expected {n, basis}");
    geom::Subspace W;
    W.n = j.at("n").get<std::uint32_t>();
    for (const auto& row : j.at("basis")) {
        auto v = row.get<std::vector<gf::Elem>>();
        if (v.size() != W.n) throw ParseError("subspace: row length != n");
        for (auto c : v)
            if (c >= F.q()) throw ParseError("subspace: entry outside the field");
        W.rows.insert(W.rows.end(), v.begin(), v.end());
        ++W.dim;
    }
    if (!geom::is_rref(F, W)) throw ParseError("subspace: basis is not in RREF");
    return W;
}

json partition_to_json(const gf::FieldSpec& F, const part::SubspacePartition& pi) {
    json parts = json::array();
    for (const auto& W : pi.parts) parts.push_back(subspace_to_json(W));
    return json{{"field", field_to_json(F)}, {"n", pi.n}, {"parts", parts}};
}

ParsedPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("parts"))
        throw ParseError("partition: expected {field, n, parts}");
    ParsedPartition p{field_from_json(j.at("field")), j.at("n").get<std::uint32_t>(), {}};
    for (const auto& pj : j.at("parts")) {
        auto W = subspace_from_json(pj, p.field);
        if (W.n != p.n) throw ParseError("partition: part from a different ambient space");
        p.parts.push_back(std::move(W));
    }
    return p;
}

json spread_to_json(const gf::FieldSpec& F, const spread::PartialSpread& S) {
    json members = json::array();
    for (const auto& W : S.members) members.push_back(subspace_to_json(W));
    return json{{"field", field_to_json(F)}, {"n", S.n}, {"t", S.t}, {"parts", members}};
}

ParsedSpread spread_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("t") ||
        !j.contains("parts"))
        throw ParseError("spread: expected {field, n, t, parts}");
    ParsedSpread s{field_from_json(j.at("field")), j.at("n").get<std::uint32_t>(),
                   j.at("t").get<std::uint32_t>(), {}};
    for (const auto& pj : j.at("parts")) {
        auto W = subspace_from_json(pj, s.field);
        if (W.n != s.n) throw ParseError("spread: member from a different ambient space");
        s.members.push_back(std::move(W));
    }
    return s;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace qpart::io
