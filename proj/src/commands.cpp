#include "fadm/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "fadm/json_io.hpp"
#include "fadm/kernels.hpp"
#include "fadm/oracles.hpp"
#include "fadm/solver.hpp"

namespace fadm::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

json problem_json(const ProblemSpec& p) {
  json init = json::array();
  for (const auto& q : p.init) init.push_back(to_json(q));
  return {{"n", p.n},
          {"alpha", p.alpha},
          {"N", to_string(p.nonlinearity)},
          {"f", to_json(p.forcing)},
          {"init", init},
          {"max_grade", p.max_grade}};
}

std::vector<double> grid(const RunConfig& cfg) {
  return kernels::linspace(cfg.t_start, cfg.t_end, cfg.points);
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// The forcing as a function of t for the classical alpha = 1 equation.
oracles::Rk4Problem classical_problem(const ProblemSpec& p) {
  oracles::Rk4Problem rk;
  rk.nonlinearity = p.nonlinearity;
  FracSeries forcing = p.forcing;
  rk.forcing = [forcing](double t) { return evaluate(forcing, 1.0, t); };
  for (const auto& q : p.init) rk.init.push_back(q.get_d());
  return rk;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto& p = cfg.problem;
  const AdmSolution sol = adm_iterate(p, cfg.iterations);
  const FracSeries res = residual(p, sol);
  const auto lowest = res.lowest_grade();

  std::string text;
  text += "# D^(" + std::to_string(p.n) + "a) y = " + to_string(p.nonlinearity) +
          " + f,  f = " + to_string(p.forcing) + "\n";
  for (std::size_t k = 0; k < sol.ys.size(); ++k) {
    text += "y" + std::to_string(k) + " = " + to_string(sol.ys[k]) + "\n";
  }
  text += "partial = " + to_string(sol.partial) + "\n";

  json ys = json::array();
  for (const auto& y : sol.ys) ys.push_back(to_json(y));
  json doc = {{"problem", problem_json(p)},
              {"iterations", sol.iterations},
              {"truncated", sol.truncated},
              {"valid_grade", sol.valid_grade},
              {"residual_lowest_grade", lowest ? json(*lowest) : json(nullptr)},
              {"ys", ys},
              {"partial", to_json(sol.partial)},
              {"residual", to_json(res)},
              {"partial_text", to_string(sol.partial)}};

  write_file(out / "series.txt", text);
  write_file(out / "solution.json", doc.dump(2) + "\n");

  log << text;
  log << "iterations: " << sol.iterations << "\n";
  log << "valid_grade: " << sol.valid_grade << (sol.truncated ? " (truncated)" : "") << "\n";
  log << "residual lowest grade: " << (lowest ? std::to_string(*lowest) : std::string("none")) << "\n";
  return kOk;
}

int cmd_eval(const RunConfig& cfg, double alpha, const fs::path& out, std::ostream& log) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError(0, "alpha", "alpha must lie in (0, 1]");
  const AdmSolution sol = adm_iterate(cfg.problem, cfg.iterations);
  const auto ts = grid(cfg);
  const auto ys = kernels::evaluate_grid(sol.partial, alpha, ts);

  std::string csv = "t,y_approx\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv += format_number(ts[i]) + "," + format_number(ys[i]) + "\n";
  }
  write_file(out / "eval.csv", csv);
  if (!all_finite(ys)) {
    log << "eval: non-finite values in the evaluated series\n";
    return kNumericFailure;
  }
  log << "wrote " << (out / "eval.csv").string() << " (" << ts.size() << " rows, alpha "
      << format_number(alpha) << ")\n";
  return kOk;
}

int cmd_figure1(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const AdmSolution sol = adm_iterate(cfg.problem, cfg.iterations);
  const auto ts = grid(cfg);
  const auto table = kernels::sweep(sol.partial, cfg.alphas, ts);
  const auto rk = oracles::rk4_solve(classical_problem(cfg.problem), ts, cfg.rk4_step);

  std::string csv = "t";
  for (double a : cfg.alphas) csv += ",y_alpha_" + format_number(a);
  csv += ",y_exact_rk4\n";
  bool finite = !rk.blew_up;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i >= rk.y.size()) break;
    csv += format_number(ts[i]);
    for (const auto& row : table) {
      csv += "," + format_number(row[i]);
      finite = finite && std::isfinite(row[i]);
    }
    csv += "," + format_number(rk.y[i]) + "\n";
  }
  write_file(out / "figure1.csv", csv);
  if (!finite) {
    log << "figure1: reference solution blew up or series produced non-finite values; "
        << "table ends at t = " << (rk.t.empty() ? 0.0 : rk.t.back()) << "\n";
    return kNumericFailure;
  }
  log << "wrote " << (out / "figure1.csv").string() << " (" << ts.size() << " rows, rk4 est_error "
      << format_number(rk.est_error) << ")\n";
  return kOk;
}

namespace {

struct CheckRow {
  std::string name;
  double measured;
  double tolerance;
  bool pass;
};

std::string check_line(const CheckRow& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(52) << r.name << " measured "
    << std::setw(12) << std::scientific << std::setprecision(3) << r.measured << " tol "
    << r.tolerance;
  return s.str();
}

}  // namespace

int cmd_check(const RunConfig& cfg, std::ostream& log) {
  std::vector<CheckRow> rows;

  {
    double worst = 0.0;
    bool pass = true;
    for (double alpha : {0.3, 0.5, 0.9}) {
      for (int k = 0; k <= 6; ++k) {
        const auto symbolic = jumarie_integral(FracSeries::monomial(k, Rational(1)));
        for (double t : {0.5, 1.0}) {
          const double expected = evaluate(symbolic, alpha, t);
          const auto q = oracles::quad_jumarie_integral(
              [&](double tau) { return k == 0 ? 1.0 : std::pow(tau, k * alpha); }, alpha, t);
          const double err = std::abs(q.value - expected);
          worst = std::max(worst, err / std::abs(expected));
          pass = pass && err <= std::max(1e-6, 10.0 * q.est_error);
        }
      }
    }
    rows.push_back({"integral term rule vs quadrature (rel)", worst, 1e-6, pass});
  }
  {
    double worst = 0.0;
    for (double alpha : {0.5, 0.9}) {
      for (int k = 1; k <= 2; ++k) {
        const auto s = FracSeries::monomial(k, GammaCoefficient::gamma_power(k, -1));
        const double expected = evaluate(jumarie_derivative(s), alpha, 0.5);
        const auto d = oracles::gl_derivative([&](double x) { return evaluate(s, alpha, x); }, alpha,
                                              0.5, 1e-4);
        worst = std::max(worst, std::abs(d.value - expected));
      }
    }
    rows.push_back({"derivative term rule vs difference sum", worst, 1e-4, worst < 1e-4});
  }
  {
    double worst = 0.0;
    for (double alpha : {0.3, 0.5, 0.7}) {
      const auto d = oracles::gl_derivative([](double) { return 3.0; }, alpha, 0.5, 1e-4);
      worst = std::max(worst, std::abs(d.value));
    }
    rows.push_back({"difference sum annihilates constants", worst, 1e-4, worst < 1e-4});
  }

  const auto& p = cfg.problem;
  const bool constant_forcing = p.forcing.is_zero() || (p.forcing.terms().size() == 1 &&
                                                        p.forcing.lowest_grade() == 0);
  if (constant_forcing) {
    const Rational f0 = p.forcing.is_zero() ? Rational(0)
                                            : p.forcing.coefficient(0).atoms().front().rational;
    const auto taylor = oracles::taylor_oracle(p.nonlinearity, f0, p.init, 40);
    const auto ts = kernels::linspace(0.0, 0.5, 11);
    const auto rk = oracles::rk4_solve(classical_problem(p), ts, 1e-4);
    double worst = rk.blew_up ? INFINITY : 0.0;
    for (std::size_t i = 0; i < rk.y.size(); ++i) {
      double series = 0.0;
      for (std::size_t k = taylor.size(); k-- > 0;) series = series * ts[i] + taylor[k].get_d();
      worst = std::max(worst, std::abs(series - rk.y[i]));
    }
    rows.push_back({"taylor oracle vs rk4 on [0, 0.5]", worst, 1e-6, worst < 1e-6});

    const AdmSolution sol = adm_iterate(p, cfg.iterations);
    const auto lowest = residual_lowest_grade(p, sol);
    const int exact_through = std::min(lowest ? *lowest + p.n - 1 : sol.valid_grade, sol.valid_grade);
    double worst_coeff = 0.0;
    for (int k = 0; k <= exact_through && k < static_cast<int>(taylor.size()); ++k) {
      worst_coeff = std::max(worst_coeff,
                             std::abs(evaluate(sol.partial.coefficient(k), 1.0) - taylor[k].get_d()));
    }
    rows.push_back({"alpha=1 partial sum vs taylor through grade " + std::to_string(exact_through),
                    worst_coeff, 1e-12, worst_coeff <= 1e-12});
  }

  bool all = true;
  for (const auto& r : rows) {
    log << check_line(r) << "\n";
    all = all && r.pass;
  }
  log << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kNumericFailure;
}

}  // namespace fadm::cli
