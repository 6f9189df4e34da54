#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qpart::suite {

struct CheckResult {
    std::string name;
    std::string status;  // PASS | FAIL | SKIP
    std::string value;
    std::string expected;
    double millis = 0.0;
};

struct Options {
    bool quick = false;  // skip the stretch V(6,2) spread search
    std::uint64_t budget_nodes = 100'000'000;
    double budget_secs = 600.0;
    std::uint64_t seed = 12345;  // randomized smoke checks
};

/// The full reproduction battery, in dependency order: formula values,
/// exact relations, constructions, hyperplane identity suites, search vs
/// formula agreement, spread maximality facts, and the standalone property
/// suites. Stretch items report SKIP (not FAIL) on budget exhaustion.
std::vector<CheckResult> run_paper_suite(const Options& opts);

bool all_passed(const std::vector<CheckResult>& results);
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace qpart::suite
