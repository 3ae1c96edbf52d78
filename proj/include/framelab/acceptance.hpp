#pragma once

// The acceptance suite shared by `framelab verify` and the acceptance test.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace framelab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool checks_passed = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<std::string> notes;

    bool passed() const { return checks_passed && seconds < budget_seconds; }
};

struct AcceptanceOptions {
    std::size_t threads = 1;
    std::uint64_t seed = 1;
    /// Empty: run everything.
    std::set<int> only;
};

/// Runs the selected criteria (1..10), results ordered by id.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options);

/// Parses "all" or a comma-separated list of criterion numbers.
std::set<int> parse_suite(const std::string &suite);

} // namespace framelab
