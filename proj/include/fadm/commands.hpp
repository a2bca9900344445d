#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "fadm/config.hpp"

namespace fadm::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericFailure = 3 };

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

/// Writes series.txt (paper-style text) and solution.json (series dumps plus
/// iterations, valid_grade, residual lowest grade) into `out`.
int cmd_solve(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);

/// Writes eval.csv with header "t,y_approx" over the configured grid.
int cmd_eval(const RunConfig& cfg, double alpha, const std::filesystem::path& out, std::ostream& log);

/// Writes figure1.csv: "t,y_alpha_<a1>,...,y_exact_rk4", one column per
/// configured alpha plus the classical (alpha = 1) RK4 reference.
int cmd_figure1(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);

/// Oracle cross-validation table; kNumericFailure if any row fails.
int cmd_check(const RunConfig& cfg, std::ostream& log);

}  // namespace fadm::cli
