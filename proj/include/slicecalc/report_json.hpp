#pragma once

#include <string>
#include <vector>

#include "slicecalc/diff_ops.hpp"

namespace slicecalc {

// One verification suite: a named bundle of identity reports. expect_fail
// reports are negative controls and count as passing when their residual
// stays large.
struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<IdentityReport> reports;

    void add(IdentityReport rep);
};

struct VerifyConfig {
    std::vector<std::string> suites; // empty = all
    int n = 3;
    std::uint64_t seed = 42;
    int samples = 200;
    double tol = 1e-5;
    double h = 1e-4;

    FDScheme scheme() const {
        FDScheme s;
        s.h = h;
        return s;
    }
};

struct VerifyRun {
    std::string version;
    VerifyConfig config;
    std::vector<SuiteResult> suites;
    bool pass = true;
};

std::string report_to_json(const IdentityReport& rep);
std::string run_to_json(const VerifyRun& run);
std::string run_to_text(const VerifyRun& run);

VerifyConfig config_from_json(const std::string& text);
std::string config_to_json(const VerifyConfig& config);

} // namespace slicecalc
