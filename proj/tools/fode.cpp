// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: solve, convergence, apply, verify.

#include <iostream>
#include <CLI11.hpp>
#include "fode/cli.hpp"

int main(int argc, char **argv)
{
  using namespace fode::cli;

  CLI::App app{"Fractional ODE solver (decomposition into an integer-order ODE and "
               "Abel-integral relations)"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto *solve_cmd = app.add_subcommand("solve", "Solve a problem file and write t,y[,z1][,dy...] CSV");
  solve_cmd->add_option("--problem", solve.problem, "Problem file")->required();
  solve_cmd->add_option("--step", solve.step, "Grid step h")->required();
  solve_cmd->add_option("--t-end", solve.t_end, "End time T")->required();
  solve_cmd->add_option("--inversion", solve.inversion, "direct | babenko")
      ->check(CLI::IsMember({"direct", "babenko"}));
  solve_cmd->add_option("--babenko-terms", solve.babenko_terms, "Babenko series terms K");
  solve_cmd->add_flag("--z1", solve.write_z1, "Also write the temporary function z1");
  solve_cmd->add_flag("--derivatives", solve.write_derivatives, "Also write y', ..., y^(m1-1)");
  solve_cmd->add_option("--manufactured", solve.manufactured,
                        "Replace the forcing so that y = t^p is exact");
  solve_cmd->add_option("--out", solve.out, "Output CSV (default stdout)");

  ConvergenceOptions conv;
  auto *conv_cmd = app.add_subcommand("convergence", "Step-refinement study, writes h,sup_error,observed_order");
  conv_cmd->add_option("--problem", conv.problem, "Problem file")->required();
  conv_cmd->add_option("--steps", conv.steps, "Comma-separated step values")
      ->required()
      ->delimiter(',');
  conv_cmd->add_option("--t-end", conv.t_end, "End time T")->required();
  conv_cmd->add_option("--inversion", conv.inversion, "direct | babenko")
      ->check(CLI::IsMember({"direct", "babenko"}));
  conv_cmd->add_option("--babenko-terms", conv.babenko_terms, "Babenko series terms K");
  conv_cmd->add_option("--oracle", conv.oracle, "gl | self | exact")
      ->check(CLI::IsMember({"gl", "self", "exact"}));
  conv_cmd->add_option("--manufactured", conv.manufactured,
                       "Replace the forcing so that y = t^p is exact");
  conv_cmd->add_option("--out", conv.out, "Output CSV (default stdout)");

  ApplyOptions apply;
  auto *apply_cmd = app.add_subcommand("apply", "Apply D^mu (mu > 0) or I^|mu| (mu < 0) to t,value CSV");
  apply_cmd->add_option("--input", apply.input, "Input CSV t,value on a uniform grid from 0")
      ->required();
  apply_cmd->add_option("--order", apply.order, "Signed operator order mu")->required();
  apply_cmd->add_option("--out", apply.out, "Output CSV (default stdout)");

  VerifyCommandOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run the built-in property suite");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify_cmd->add_flag("--inject-gamma-fault", verify.inject_gamma_fault)->group("");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return kUsage;
  }

  if (solve_cmd->parsed())
  {
    return run_solve(solve, std::cout, std::cerr);
  }
  if (conv_cmd->parsed())
  {
    return run_convergence(conv, std::cout, std::cerr);
  }
  if (apply_cmd->parsed())
  {
    return run_apply(apply, std::cout, std::cerr);
  }
  return run_verify(verify, std::cout, std::cerr);
}
