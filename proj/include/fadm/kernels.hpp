#pragma once

#include <span>
#include <vector>

#include "fadm/series.hpp"

namespace fadm::kernels {

/// `points` evenly spaced values from start to end inclusive (points >= 2).
std::vector<double> linspace(double start, double end, int points);

/// Series values at every t. The coefficients are evaluated once; the grid
/// loop is the data-parallel part.
std::vector<double> evaluate_grid_serial(const FracSeries& s, double alpha, std::span<const double> ts);
std::vector<double> evaluate_grid(const FracSeries& s, double alpha, std::span<const double> ts);

/// One row per alpha, one column per t.
using SweepTable = std::vector<std::vector<double>>;
SweepTable sweep_serial(const FracSeries& s, std::span<const double> alphas, std::span<const double> ts);
SweepTable sweep(const FracSeries& s, std::span<const double> alphas, std::span<const double> ts);

}  // namespace fadm::kernels
