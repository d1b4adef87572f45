#pragma once

// Programmatic verification suites.  Each check pins its tolerance here, in
// code; the CLI `verify` subcommand and the acceptance test binary are thin
// frontends over run_suite().

#include <string>
#include <vector>

namespace coulomb2d::verify {

enum class Suite { unitarity, oracle, closed_vs_series, limits, all };

const char* suite_name(Suite s);
Suite parse_suite(const std::string& name);  // throws DomainError on unknown

struct CheckResult {
    std::string id;       // "1".."8", matching the criterion numbering
    std::string name;
    bool passed = false;
    double margin = 0.0;     // worst observed value / tolerance; pass iff <= 1
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    unsigned seed = 12345;   // drives the supplementary randomized sweeps
    int threads = 2;
};

/// Runs the selected suite; returns one result per check, in criterion order.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts = {});

inline bool all_passed(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.passed) return false;
    return true;
}

}  // namespace coulomb2d::verify
