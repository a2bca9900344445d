// fadm: fractional Adomian decomposition solver.
//
//   fadm solve   --config problem.toml [--out dir] [--iterations m]
//   fadm eval    --config problem.toml [--out dir] [--alpha a]
//   fadm figure1 --config problem.toml [--out dir]
//   fadm check   --config problem.toml
#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "fadm/commands.hpp"

int main(int argc, char** argv) {
  using namespace fadm;

  CLI::App app{"Fractional Adomian decomposition for Jumarie-derivative initial value problems"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> iterations;
  std::optional<double> alpha;

  auto add_common = [&](CLI::App* sub, bool with_alpha) {
    sub->add_option("--config", config_path, "Problem configuration file")->required();
    sub->add_option("--out", out_dir, "Output directory (overrides [output] dir)");
    sub->add_option("--iterations", iterations, "Number of Adomian iterations m");
    if (with_alpha) sub->add_option("--alpha", alpha, "Fractional order override");
  };
  auto* solve = app.add_subcommand("solve", "Solve symbolically and dump the series");
  auto* eval = app.add_subcommand("eval", "Evaluate the partial sum on the grid (CSV)");
  auto* figure1 = app.add_subcommand("figure1", "Alpha sweep against the classical RK4 reference (CSV)");
  auto* check = app.add_subcommand("check", "Cross-validate the engine against the numeric oracles");
  add_common(solve, true);
  add_common(eval, true);
  add_common(figure1, false);
  add_common(check, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kConfigError;
  }

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
    if (iterations) cfg.iterations = *iterations;
    if (alpha) cfg.problem.alpha = *alpha;
    if (out_dir) cfg.out_dir = *out_dir;
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kConfigError;
  }

  try {
    if (*solve) return cli::cmd_solve(cfg, cfg.out_dir, std::cout);
    if (*eval) return cli::cmd_eval(cfg, cfg.problem.alpha, cfg.out_dir, std::cout);
    if (*figure1) return cli::cmd_figure1(cfg, cfg.out_dir, std::cout);
    return cli::cmd_check(cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return cli::kNumericFailure;
  }
}
