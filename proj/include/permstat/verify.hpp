#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permstat/json_io.hpp"

namespace permstat {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::full;
    std::uint64_t seed = 0x5EED5EED;       // drives every randomized sweep
    std::uint64_t monte_carlo_samples = 100000;
    bool mutate_watershed = false;          // fault injection for harness tests
};

struct SuiteResult {
    std::string name;
    std::string scale;       // what was exercised, human readable
    bool passed = false;
    std::string detail;      // counts / worst deviations
    json counterexample;     // null unless failed
    double seconds = 0.0;
};

/// Runs the full verification battery: exhaustive bijection and statistic
/// checks, exact identity sweeps, and the seeded Monte Carlo comparison.
/// Within the library so both the CLI `verify` subcommand and the
/// acceptance binary drive the identical suites.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<SuiteResult>& suites);

json verification_to_json(const std::vector<SuiteResult>& suites, const VerifyOptions& options);

} // namespace permstat
