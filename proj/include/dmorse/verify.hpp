#pragma once

#include <string>
#include <vector>

#include "dmorse/model.hpp"

// Named invariant checks over all modules, reported with their measured
// residuals. This is what the `verify` CLI command runs; the suites mirror
// the properties the unit tests pin down, evaluated on the configured model.

namespace dmorse::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct VerifyOptions {
  //! Restrict to one suite (laguerre, cdh, tridiag, spectrum, balance,
  //! scatter, limits, chebyshev); empty runs everything.
  std::string only;
  //! Documented fault-injection hook: offset added to the basis zeta. A
  //! nonzero value must break the tridiagonality checks.
  double zeta_fault = 0.0;
};

std::vector<CheckResult> run_checks(const ModelParams& params, const VerifyOptions& options);

//! Names of the available suites, in execution order.
std::vector<std::string> suite_names();

}  // namespace dmorse::verify
