#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kga {

enum class ValidationLevel { Fast, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Test-only perturbation hooks. approx_ber_scale multiplies the
/// approximate-BER path inside the identity checks so a deliberately
/// broken formula is caught by the suite.
struct ValidationHooks {
  double approx_ber_scale = 1.0;
};

/// Cross-module oracle suite: special-function identities, Monte Carlo
/// against the closed forms, solvers against exhaustive scans, and the
/// asymptotic ratios. Fast keeps sample sizes small enough for a CI run;
/// Full adds the large Monte Carlo grids and the quoted operating-point
/// reproduction checks. Deterministic for a fixed seed.
std::vector<CheckResult> run_validation(ValidationLevel level,
                                        std::uint64_t seed,
                                        const ValidationHooks& hooks = {});

/// One "name: PASS/FAIL (observed vs expected, tol ...)" line per check.
void print_report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace kga
