#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropsym {

struct AcceptanceConfig {
    std::string fixtures_dir = "fixtures";
    std::uint64_t rng_seed = 7193;
    bool enforce_time_budgets = true;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

// Runs the full verification suite, printing one pass/fail line per
// criterion. Returns true iff every criterion passed.
bool run_acceptance(const AcceptanceConfig& cfg, std::ostream& out,
                    std::vector<CriterionResult>* results = nullptr);

} // namespace tropsym
