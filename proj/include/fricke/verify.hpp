#pragma once

#include <string>
#include <vector>

namespace fricke {

struct SuiteResult {
    std::string name;
    double max_residual = 0.0;
    bool pass = false;
    std::string detail;
};

/// Runs every module invariant suite on an n x n chart grid; with probes also
/// runs the six boundary divergence checks.
std::vector<SuiteResult> run_verify_suites(int n, bool probes);

}  // namespace fricke
