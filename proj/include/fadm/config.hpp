#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fadm/solver.hpp"

namespace fadm {

/// Malformed or invalid configuration. `line` is 0 when the problem is not
/// tied to one line (e.g. a missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Everything a CLI run needs.
///
///   [problem]
///   n = 2
///   alpha = 1
///   N = "1*y^2"
///   f = 1                      # or [[grade, coeff], ...]
///   init = [0, 1]
///
///   [run]
///   iterations = 1
///   max_grade = 12
///   t_start = 0
///   t_end = 1
///   points = 101
///   alphas = [0.9, 0.99]
///   rk4_step = 0.001
///
///   [output]
///   dir = "out"
struct RunConfig {
  ProblemSpec problem;
  int iterations = 1;
  double t_start = 0.0;
  double t_end = 1.0;
  int points = 101;
  std::vector<double> alphas = {0.9, 0.99};
  double rk4_step = 1e-3;
  std::string out_dir = ".";

  /// Throws ConfigError for violated invariants.
  void validate() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace fadm
