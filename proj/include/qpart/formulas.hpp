#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpart::formulas {

using Int = boost::multiprecision::cpp_int;

struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n = k*t + r with 0 <= r < t, Euclidean division.
struct ParameterSet {
    std::uint32_t n, t, q;
    std::uint32_t k, r;
    static ParameterSet make(std::uint32_t n, std::uint32_t t, std::uint32_t q);
};

enum class Status { Defined, Open, Nonexistent };

/// A closed-form extremal value, or an honest status tag where the theory
/// does not assign one. `provenance` names the case that applied.
struct ExtremalValue {
    Status status = Status::Open;
    Int value = 0;  // meaningful only when status == Defined
    std::string provenance;

    static ExtremalValue defined(Int v, std::string why) {
        return {Status::Defined, std::move(v), std::move(why)};
    }
    static ExtremalValue open(std::string why) { return {Status::Open, 0, std::move(why)}; }
    static ExtremalValue nonexistent(std::string why) {
        return {Status::Nonexistent, 0, std::move(why)};
    }
};

std::string to_string(Status s);

/// theta_i = (q^i - 1)/(q - 1); theta(0) = 0.
Int theta(std::uint32_t i, std::uint32_t q);
/// Hyperplanes containing a given i-dimensional subspace: max{0, theta_{n-i}}.
Int h(std::uint32_t n, std::uint32_t i, std::uint32_t q);
/// ell = q^r * sum_{i=0}^{k-2} q^{it}; requires k >= 2.
Int ell(std::uint32_t n, std::uint32_t t, std::uint32_t q);

/// Minimum partition size with largest part of dimension exactly t.
ExtremalValue sigma(std::uint32_t n, std::uint32_t t, std::uint32_t q);
/// Maximum partition size with smallest part of dimension exactly t.
ExtremalValue rho(std::uint32_t n, std::uint32_t t, std::uint32_t q);
/// Minimum size of a maximal partial t-spread of V(N,q), N = n + t - 1.
ExtremalValue tau(std::uint32_t N, std::uint32_t t, std::uint32_t q);

struct RelationCheck {
    std::string name;
    Int lhs, rhs;
    bool holds() const { return lhs == rhs; }
};
struct RelationReport {
    std::uint32_t n, t, q;
    std::vector<RelationCheck> checks;
    bool all_hold() const;
};
/// Evaluates both sides of the theta/ell relations exactly; the shift
/// identity is checked for all 0 <= a, b with a + b <= n.
RelationReport check_relations(std::uint32_t n, std::uint32_t t, std::uint32_t q);

/// Informational reference bounds on tau_q(4,2): the 2q lower bound and the
/// two logarithmic upper bounds (the even-q one carries an unquantified
/// threshold and is flagged as such).
struct ReferenceBounds {
    std::uint32_t q;
    Int glynn_lower;           // 2q
    double odd_upper;          // (2 log2 q + 1) q + 1
    double even_upper;         // (6.1 ln q + 1) q + 1, valid only for q > q_0
    bool even_threshold_unquantified = true;
};
ReferenceBounds reference_bounds(std::uint32_t q);

struct AntimonotoneRow {
    std::uint32_t t;
    ExtremalValue sigma;
};
struct AntimonotoneTable {
    std::vector<AntimonotoneRow> rows;
    bool strictly_decreasing;  // over the Defined entries
};
/// sigma_q(n,t) for t in [t_lo, t_hi]; all t must satisfy 1 < t <= n/2.
AntimonotoneTable antimonotone_table(std::uint32_t n, std::uint32_t q, std::uint32_t t_lo,
                                     std::uint32_t t_hi);

}  // namespace qpart::formulas
