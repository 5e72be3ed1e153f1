#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "dmorse/model.hpp"

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 configuration error, 3 numerical non-convergence.

namespace dmorse::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  double A = 2.0;
  double omega = 0.5;
  double xi = 0.8;
  double lambda_c = 1.0;

  std::optional<double> energy;
  std::optional<int> bound_n;
  std::optional<std::string> branch;  // "plus" | "minus"
  double alpha = 1.0;
  int n_terms = 64;
  std::string grid = "-4:24:801";  // x_min:x_max:n_points
  std::optional<std::string> output;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> only;
  double zeta_fault = 0.0;

  ModelParams model() const;  // throws std::invalid_argument with a precise message
};

//! Load a config JSON document; unknown keys are rejected.
RunConfig load_config(const std::string& path);

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_coefficients(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

//! Full argv entry point.
int run(int argc, const char* const* argv);

}  // namespace dmorse::cli
