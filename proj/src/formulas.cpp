#include "qpart/formulas.hpp"

#include <cmath>

namespace qpart::formulas {

namespace {
Int ipow(std::uint32_t q, std::uint32_t e) { return boost::multiprecision::pow(Int(q), e); }
}  // namespace

ParameterSet ParameterSet::make(std::uint32_t n, std::uint32_t t, std::uint32_t q) {
    if (t == 0) throw OutOfRange("t must be positive");
    return {n, t, q, n / t, n % t};
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Defined: return "defined";
        case Status::Open: return "open";
        case Status::Nonexistent: return "nonexistent";
    }
    return "?";
}

Int theta(std::uint32_t i, std::uint32_t q) { return (ipow(q, i) - 1) / (q - 1); }

Int h(std::uint32_t n, std::uint32_t i, std::uint32_t q) {
    if (n < 1) throw OutOfRange("h: n must be >= 1");
    if (i >= n) return 0;  // theta_0 and the clamped negative-index case
    return theta(n - i, q);
}

Int ell(std::uint32_t n, std::uint32_t t, std::uint32_t q) {
    auto ps = ParameterSet::make(n, t, q);
    if (ps.k < 2) throw OutOfRange("ell requires k >= 2 (n >= 2t)");
    Int s = 0;
    for (std::uint32_t i = 0; i + 2 <= ps.k; ++i) s += ipow(q, i * t);
    return ipow(q, ps.r) * s;
}

ExtremalValue sigma(std::uint32_t n, std::uint32_t t, std::uint32_t q) {
    if (t < 1 || t > n) throw OutOfRange("sigma requires 1 <= t <= n");
    if (t == n) return ExtremalValue::defined(1, "single-part case t = n");
    if (t == 1) return ExtremalValue::defined(theta(n, q), "all points, t = 1");
    auto ps = ParameterSet::make(n, t, q);
    if (ps.k >= 2) {
        if (ps.r == 0)
            return ExtremalValue::defined(theta(n, q) / theta(t, q), "t-spread size, t | n");
        std::uint32_t beta = (t + ps.r + 1) / 2;
        return ExtremalValue::defined(ell(n, t, q) * ipow(q, t) + ipow(q, beta) + 1,
                                      "ell*q^t + q^ceil((t+r)/2) + 1");
    }
    return ExtremalValue::open("t < n < 2t");
}

ExtremalValue rho(std::uint32_t n, std::uint32_t t, std::uint32_t q) {
    if (t < 1 || t > n) throw OutOfRange("rho requires 1 <= t <= n");
    if (t == n) return ExtremalValue::defined(1, "single-part case t = n");
    if (t == 1) return ExtremalValue::defined(theta(n, q), "all points, t = 1");
    auto ps = ParameterSet::make(n, t, q);
    if (ps.k >= 2)
        return ExtremalValue::defined(ell(n, t, q) * ipow(q, t) + 1, "ell*q^t + 1");
    // t < n < 2t: two parts of dimension >= t would intersect, so no
    // partition has smallest part of dimension exactly t
    return ExtremalValue::nonexistent("t < n < 2t: two parts of dim >= t would intersect");
}

ExtremalValue tau(std::uint32_t N, std::uint32_t t, std::uint32_t q) {
    if (N < 1 || t < 1) throw OutOfRange("tau requires N >= 1 and t >= 1");
    if (N + 1 <= t) throw OutOfRange("tau requires N >= t");
    std::uint32_t n = N - t + 1;
    if (t > 1 && n >= 2 * t) {
        auto s = sigma(n, t, q);
        return ExtremalValue::defined(s.value, "min maximal partial t-spread = sigma(n,t)");
    }
    return ExtremalValue::open("coverage ends at n >= 2t, t > 1");
}

bool RelationReport::all_hold() const {
    for (const auto& c : checks)
        if (!c.holds()) return false;
    return true;
}

RelationReport check_relations(std::uint32_t n, std::uint32_t t, std::uint32_t q) {
    auto ps = ParameterSet::make(n, t, q);
    if (ps.k < 2) throw OutOfRange("check_relations requires k >= 2");
    RelationReport rep{n, t, q, {}};
    Int L = ell(n, t, q);
    rep.checks.push_back(
        {"theta_{n-t} - theta_r = ell*theta_t", theta(n - t, q) - theta(ps.r, q),
         L * theta(t, q)});
    for (std::uint32_t a = 0; a <= n; ++a)
        for (std::uint32_t b = 0; a + b <= n; ++b)
            rep.checks.push_back({"theta_{a+b} - theta_b = q^b*theta_a (a=" +
                                      std::to_string(a) + ",b=" + std::to_string(b) + ")",
                                  theta(a + b, q) - theta(b, q), ipow(q, b) * theta(a, q)});
    rep.checks.push_back({"theta_n - ell*q^t*theta_t = theta_{t+r}",
                          theta(n, q) - L * ipow(q, t) * theta(t, q), theta(t + ps.r, q)});
    return rep;
}

ReferenceBounds reference_bounds(std::uint32_t q) {
    ReferenceBounds b;
    b.q = q;
    b.glynn_lower = Int(2) * q;
    b.odd_upper = (2.0 * std::log2(double(q)) + 1.0) * q + 1.0;
    b.even_upper = (6.1 * std::log(double(q)) + 1.0) * q + 1.0;
    return b;
}

AntimonotoneTable antimonotone_table(std::uint32_t n, std::uint32_t q, std::uint32_t t_lo,
                                     std::uint32_t t_hi) {
    if (t_lo <= 1 || 2 * t_hi > n || t_lo > t_hi)
        throw OutOfRange("antimonotone_table requires 1 < t <= n/2 across the range");
    AntimonotoneTable table{{}, true};
    const Int* prev = nullptr;
    for (std::uint32_t t = t_lo; t <= t_hi; ++t) {
        table.rows.push_back({t, sigma(n, t, q)});
        const auto& row = table.rows.back();
        if (row.sigma.status != Status::Defined) continue;
        if (prev && !(*prev > row.sigma.value)) table.strictly_decreasing = false;
        prev = &table.rows.back().sigma.value;
    }
    return table;
}

}  // namespace qpart::formulas
