#include "rdhweno/csv_io.hpp"
#include "rdhweno/error_norms.hpp"
#include "rdhweno/problems.hpp"
#include "rdhweno/steady_driver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

void add_run_options(CLI::App* cmd, rdh::RunConfig& cfg) {
  cmd->add_option("--problem", cfg.problem, "problem id (see `list`)")->required();
  cmd->add_option("--n", cfg.n, "cells (x direction)");
  cmd->add_option("--m", cfg.m, "cells in y (2D; default: problem default or n)");
  cmd->add_option("--cfl", cfg.cfl, "CFL number");
  cmd->add_option("--sigma", cfg.sigma, "2D dissipation coefficient");
  cmd->add_option("--delta", cfg.delta, "Roe entropy parameter");
  cmd->add_option("--epsilon", cfg.epsilon, "WENO weight regularizer");
  cmd->add_option("--max-iters", cfg.max_iters, "pseudo-time iteration cap");
  cmd->add_option("--tol", cfg.residue_tol, "relative residue tolerance");
  cmd->add_option("--out", cfg.out_dir, "output directory for CSV files");
  cmd->set_config("--config", "", "key=value config file (CLI flags override it)");
}

void print_report(const rdh::RunReport& rep, const rdh::ProblemSpec& spec) {
  std::printf("problem:    %s\n", rep.problem.c_str());
  std::printf("iterations: %ld\n", rep.iterations);
  std::printf("residue:    %.6e (initial %.6e)\n", rep.final_residue(), rep.initial_residue());
  std::printf("result:     %s", rdh::to_string(rep.reason));
  if (rep.reason == rdh::Termination::diverged)
    std::printf(" at iteration %ld (%s)", rep.diverged_iteration, rep.diagnostic.c_str());
  std::printf("\n");
  std::printf("wall time:  %.2fs\n", rep.wall_seconds);
  if (rep.sol1 && spec.p1 && spec.p1->exact) {
    const auto e = rdh::error_norms_1d(*rep.sol1, spec.p1->exact, spec.p1->error_mask,
                                       spec.p1->error_component);
    std::printf("errors:     L1 %.6e  L2 %.6e  Linf %.6e\n", e.l1, e.l2, e.linf);
  }
  if (rep.sol2 && spec.p2 && spec.p2->exact) {
    const auto e = rdh::error_norms_2d(*rep.sol2, spec.p2->exact, spec.p2->error_component);
    std::printf("errors:     L1 %.6e  L2 %.6e  Linf %.6e\n", e.l1, e.l2, e.linf);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steady-state residual-distribution HWENO solver"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "print the problem registry");

  rdh::RunConfig run_cfg;
  auto* run_cmd = app.add_subcommand("run", "run one problem to steady state");
  add_run_options(run_cmd, run_cfg);

  rdh::RunConfig study_cfg;
  std::vector<int> grids;
  auto* conv_cmd = app.add_subcommand("convergence", "grid-refinement error study");
  add_run_options(conv_cmd, study_cfg);
  conv_cmd->add_option("--grids", grids, "comma-separated cell counts")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& [id, spec] : rdh::problem_registry()) {
        std::printf("%-28s %dD  n=%d", id.c_str(), spec.dimension, spec.defaults.n);
        if (spec.dimension == 2)
          std::printf("x%d", spec.defaults.m > 0 ? spec.defaults.m : spec.defaults.n);
        std::printf("  cfl=%.2g sigma=%.2g delta=%.2g\n  %s\n", spec.defaults.cfl,
                    spec.defaults.sigma, spec.defaults.delta, spec.description.c_str());
      }
      return 0;
    }

    if (run_cmd->parsed()) {
      const rdh::ProblemSpec& spec = rdh::find_problem(run_cfg.problem);
      const rdh::RunReport rep = rdh::run_to_steady(run_cfg);
      print_report(rep, spec);
      if (!run_cfg.out_dir.empty()) {
        for (const auto& p : rdh::emit_outputs(rep, spec, run_cfg.out_dir))
          std::printf("wrote %s\n", p.string().c_str());
      }
      return rep.reason == rdh::Termination::diverged ? 2 : 0;
    }

    if (conv_cmd->parsed()) {
      const rdh::ProblemSpec& spec = rdh::find_problem(study_cfg.problem);
      if (grids.empty()) grids = spec.defaults.grids;
      const auto rows = rdh::convergence_study(study_cfg.problem, grids, study_cfg);
      std::printf("%8s %14s %8s %14s %8s %14s %8s\n", "N", "L1", "order", "L2", "order", "Linf",
                  "order");
      bool any_failed = false;
      for (const auto& r : rows) {
        if (!r.ok) {
          any_failed = true;
          std::printf("%8d  failed: %s\n", r.n, r.failure.c_str());
          continue;
        }
        auto ord = [](double o) { return std::isnan(o) ? std::string("-") : std::to_string(o).substr(0, 5); };
        std::printf("%8d %14.6e %8s %14.6e %8s %14.6e %8s\n", r.n, r.e.l1,
                    ord(r.l1_order).c_str(), r.e.l2, ord(r.l2_order).c_str(), r.e.linf,
                    ord(r.linf_order).c_str());
      }
      if (!study_cfg.out_dir.empty()) {
        const auto p = rdh::emit_error_table(rows, study_cfg.out_dir);
        std::printf("wrote %s\n", p.string().c_str());
      }
      return any_failed ? 2 : 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
