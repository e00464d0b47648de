#pragma once

#include <string>
#include <vector>

namespace eisen {

struct SuiteResult {
    std::string suite;
    int checks = 0;
    std::vector<std::string> failures;  // minimal failing instances
    std::vector<std::string> notes;     // recorded formula deviations etc.
};

const std::vector<std::string>& suite_names();

/// Runs one named suite at the given sweep size. Deterministic for a fixed
/// seed; the seed only feeds the sampled invariance checks.
SuiteResult run_suite(const std::string& name, int max_size, unsigned long long seed);

/// Runs either one suite or, for "all", every suite in order.
std::vector<SuiteResult> run_suites(const std::string& which, int max_size,
                                    unsigned long long seed);

} // namespace eisen
