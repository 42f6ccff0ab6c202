// Copyright The fode Authors
// SPDX-License-Identifier: Apache-2.0

#include "fode/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <json.hpp>
#include "fode/csv.hpp"
#include "fode/errors.hpp"
#include "fode/fracops.hpp"
#include "fode/gamma.hpp"
#include "fode/oracle.hpp"
#include "fode/problem_io.hpp"
#include "fode/stepper.hpp"
#include "fode/verify.hpp"

namespace fode::cli
{

namespace
{

using json = nlohmann::json;

// Thrown inside the command bodies and mapped to an exit code at the top.
struct CommandFailure
{
  ExitCode code;
  std::string message;
};

[[noreturn]] void Fail(ExitCode code, const std::string &message)
{
  throw CommandFailure{code, message};
}

// Writes to a file when a path is given, otherwise to the fallback stream.
class Destination
{
public:
  Destination(const std::string &path, std::ostream &fallback) : stream_(&fallback)
  {
    if (!path.empty() && path != "-")
    {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_)
      {
        Fail(kInput, "cannot open output file '" + path + "'");
      }
      stream_ = &file_;
    }
  }

  std::ostream &stream() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream *stream_;
};

InversionMethod ParseInversion(const std::string &name, int terms)
{
  if (name == "direct")
  {
    return DirectVolterraInversion{};
  }
  if (name == "babenko")
  {
    if (terms < 1)
    {
      Fail(kUsage, "--babenko-terms must be at least 1");
    }
    return BabenkoInversion{terms};
  }
  Fail(kUsage, "--inversion must be 'direct' or 'babenko', got '" + name + "'");
}

SolverConfig MakeConfig(double step, double t_end, const InversionMethod &inversion,
                        bool derivatives)
{
  SolverConfig cfg{step, t_end, inversion, derivatives};
  try
  {
    cfg.Validate();
  }
  catch (const DomainError &e)
  {
    Fail(kUsage, e.what());
  }
  return cfg;
}

std::string Located(const std::string &path, const ParseError &e)
{
  std::ostringstream os;
  os << (path.empty() ? "<input>" : path);
  if (e.line() > 0)
  {
    os << ':' << e.line() << ':' << e.column();
  }
  os << ": " << e.message();
  return os.str();
}

ProblemSpec LoadProblem(const std::string &path, int manufactured)
{
  if (path.empty())
  {
    Fail(kUsage, "--problem is required");
  }
  ProblemSpec spec;
  try
  {
    spec = load_problem(path).spec;
  }
  catch (const ParseError &e)
  {
    Fail(kInput, Located(path, e));
  }
  if (manufactured < 0)
  {
    Fail(kUsage, "--manufactured must be positive");
  }
  if (manufactured > 0)
  {
    try
    {
      spec = manufacture(spec, manufactured).problem;
    }
    catch (const DomainError &e)
    {
      Fail(kInput, std::string("cannot manufacture solution: ") + e.what());
    }
  }
  return spec;
}

void RequireForcingCoverage(const ProblemSpec &p, const SolverConfig &cfg)
{
  if (const auto *f = std::get_if<PiecewiseForcing>(&p.forcing))
  {
    const double end = cfg.h * static_cast<double>(cfg.Steps());
    if (f->CoverageEnd() < end && std::abs(f->CoverageEnd() - end) > 1e-12 * std::max(1.0, end))
    {
      Fail(kInput, "forcing segments end at t = " + FormatNumber(f->CoverageEnd()) +
                       " but the run reaches t = " + FormatNumber(end));
    }
  }
}

// Runs the decomposition solver, mapping library errors to exit codes.
Trajectory RunSolver(const ProblemSpec &p, const SolverConfig &cfg)
{
  RequireForcingCoverage(p, cfg);
  try
  {
    return solve(p, cfg);
  }
  catch (const BuildError &e)
  {
    Fail(kInput, e.what());
  }
  catch (const SingularInversionError &e)
  {
    Fail(kNumerical, e.what());
  }
  catch (const DomainError &e)
  {
    Fail(kInput, e.what());
  }
}

template <typename Body>
int Guarded(std::ostream &err, const Body &body)
{
  try
  {
    return body();
  }
  catch (const CommandFailure &f)
  {
    err << "error: " << f.message << '\n';
    return f.code;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

std::vector<double> Times(std::size_t n, double h)
{
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; i++)
  {
    t[i] = static_cast<double>(i) * h;
  }
  return t;
}

}  // namespace

int run_solve(const SolveOptions &options, std::ostream &out, std::ostream &err)
{
  return Guarded(err, [&]
  {
    const auto inversion = ParseInversion(options.inversion, options.babenko_terms);
    const auto cfg = MakeConfig(options.step, options.t_end, inversion, options.write_derivatives);
    const auto problem = LoadProblem(options.problem, options.manufactured);
    const auto traj = RunSolver(problem, cfg);

    const auto t = Times(traj.y.size(), traj.h);
    std::vector<std::string> header = {"t", "y"};
    std::vector<std::span<const double>> columns = {t, traj.y.values()};
    if (options.write_z1)
    {
      header.emplace_back("z1");
      columns.push_back(traj.z1.values());
    }
    if (traj.y_derivs)
    {
      for (std::size_t k = 0; k < traj.y_derivs->size(); k++)
      {
        header.push_back("dy" + std::to_string(k + 1));
        columns.push_back((*traj.y_derivs)[k].values());
      }
    }
    Destination dest(options.out, out);
    WriteCsv(dest.stream(), header, columns);

    if (traj.diagnostics.babenko_tail)
    {
      const double tail = *traj.diagnostics.babenko_tail;
      if (tail > BabenkoInversion{}.tolerance)
      {
        err << "warning: Babenko series not converged (last term sup norm " << FormatNumber(tail)
            << "); increase --babenko-terms or use --inversion direct\n";
      }
    }
    if (traj.diagnostics.nan_node)
    {
      err << "error: non-finite value at node " << *traj.diagnostics.nan_node << " (t = "
          << FormatNumber(static_cast<double>(*traj.diagnostics.nan_node) * traj.h)
          << "); CSV holds the nodes before it\n";
      return static_cast<int>(kNumerical);
    }
    return static_cast<int>(kSuccess);
  });
}

int run_convergence(const ConvergenceOptions &options, std::ostream &out, std::ostream &err)
{
  return Guarded(err, [&]
  {
    if (options.steps.size() < 2)
    {
      Fail(kUsage, "--steps needs at least two step values");
    }
    const auto inversion = ParseInversion(options.inversion, options.babenko_terms);
    std::vector<double> steps = options.steps;
    std::sort(steps.begin(), steps.end(), std::greater<>());
    if (std::adjacent_find(steps.begin(), steps.end()) != steps.end())
    {
      Fail(kUsage, "--steps values must be distinct");
    }
    std::vector<SolverConfig> configs;
    for (double h : steps)
    {
      configs.push_back(MakeConfig(h, options.t_end, inversion, false));
    }
    const double finest = steps.back();
    std::vector<std::size_t> strides;
    for (double h : steps)
    {
      const double ratio = h / finest;
      if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio)
      {
        Fail(kUsage, "every step must be an integer multiple of the finest step");
      }
      strides.push_back(static_cast<std::size_t>(std::llround(ratio)));
    }
    if (options.oracle != "self" && options.oracle != "gl" && options.oracle != "exact")
    {
      Fail(kUsage, "--oracle must be 'gl', 'self' or 'exact'");
    }
    if (options.oracle == "exact" && options.manufactured <= 0)
    {
      Fail(kUsage, "--oracle exact needs --manufactured <p>");
    }
    const auto problem = LoadProblem(options.problem, options.manufactured);

    std::vector<std::future<Trajectory>> runs;
    for (const auto &cfg : configs)
    {
      RequireForcingCoverage(problem, cfg);
      runs.push_back(std::async(std::launch::async, [&problem, cfg] { return solve(problem, cfg); }));
    }
    std::optional<Trajectory> gl;
    if (options.oracle == "gl")
    {
      try
      {
        gl = gl_direct_solve(problem, configs.back());
      }
      catch (const UnsupportedProblemError &e)
      {
        Fail(kInput, std::string("GL oracle: ") + e.what());
      }
    }
    std::vector<Trajectory> trajectories;
    for (auto &run : runs)
    {
      try
      {
        trajectories.push_back(run.get());
      }
      catch (const BuildError &e)
      {
        Fail(kInput, e.what());
      }
      catch (const SingularInversionError &e)
      {
        Fail(kNumerical, e.what());
      }
      catch (const DomainError &e)
      {
        Fail(kInput, e.what());
      }
    }
    for (std::size_t k = 0; k < trajectories.size(); k++)
    {
      if (!trajectories[k].ok())
      {
        Fail(kNumerical, "non-finite value at node " +
                             std::to_string(*trajectories[k].diagnostics.nan_node) +
                             " with step " + FormatNumber(steps[k]));
      }
    }
    if (gl && !gl->ok())
    {
      Fail(kNumerical, "GL oracle produced a non-finite value");
    }

    const std::size_t rows = options.oracle == "self" ? steps.size() - 1 : steps.size();
    std::vector<double> hs, errors, orders;
    for (std::size_t k = 0; k < rows; k++)
    {
      const auto &y = trajectories[k].y;
      double e = 0.0;
      for (std::size_t i = 0; i < y.size(); i++)
      {
        const std::size_t fine = i * strides[k];
        double reference = 0.0;
        if (options.oracle == "exact")
        {
          reference = std::pow(y.time(i), options.manufactured);
        }
        else
        {
          const auto &ref = options.oracle == "gl" ? gl->y : trajectories.back().y;
          if (fine >= ref.size())
          {
            break;
          }
          reference = ref[fine];
        }
        e = std::max(e, std::abs(y[i] - reference));
      }
      hs.push_back(steps[k]);
      errors.push_back(e);
      orders.push_back(k == 0 ? std::nan("")
                              : std::log(errors[k - 1] / e) / std::log(steps[k - 1] / steps[k]));
    }
    Destination dest(options.out, out);
    WriteCsv(dest.stream(), {"h", "sup_error", "observed_order"}, {hs, errors, orders});
    return static_cast<int>(kSuccess);
  });
}

int run_apply(const ApplyOptions &options, std::ostream &out, std::ostream &err)
{
  return Guarded(err, [&]
  {
    std::optional<OperatorOrder> order;
    try
    {
      order.emplace(options.order);
    }
    catch (const DomainError &e)
    {
      Fail(kUsage, e.what());
    }
    if (options.input.empty())
    {
      Fail(kUsage, "--input is required");
    }
    std::ifstream in(options.input, std::ios::binary);
    if (!in)
    {
      Fail(kInput, "cannot open input file '" + options.input + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    CsvTable table;
    try
    {
      table = ReadCsv(text.str());
    }
    catch (const ParseError &e)
    {
      Fail(kInput, Located(options.input, e));
    }
    if (table.header.size() != 2)
    {
      Fail(kInput, "input CSV must have exactly two columns: t,value");
    }
    const auto &t = table.columns[0];
    const auto &values = table.columns[1];
    if (t.size() < 2)
    {
      Fail(kInput, "input CSV needs at least two rows");
    }
    if (t[0] != 0.0)
    {
      Fail(kInput, "the grid must start at t = 0");
    }
    const double h = t[1] - t[0];
    if (!(h > 0.0))
    {
      Fail(kInput, "time column must be increasing");
    }
    for (std::size_t i = 0; i < t.size(); i++)
    {
      const double expected = static_cast<double>(i) * h;
      if (std::abs(t[i] - expected) > 1e-9 * std::max(h, std::abs(expected)))
      {
        Fail(kInput, "non-uniform grid at row " + std::to_string(i + 2));
      }
    }

    const SampleSeries z(h, values);
    std::vector<double> result(z.size());
    const double mu = order->value();
    try
    {
      if (mu > 0.0 && mu < 1.0 && z[0] != 0.0)
      {
        // The derivative is unbounded at the origin when z(0) != 0.
        const NodeOperator op(*order, h, z.size());
        result[0] = std::copysign(std::numeric_limits<double>::infinity(), z[0]);
        for (std::size_t i = 1; i < z.size(); i++)
        {
          result[i] = op(z.values(), i);
        }
        err << "note: z(0) != 0, the derivative is singular at t = 0 (written as inf)\n";
      }
      else
      {
        const auto applied = apply_operator(z, *order);
        result.assign(applied.values().begin(), applied.values().end());
      }
    }
    catch (const PreconditionError &e)
    {
      Fail(kInput, e.what());
    }
    catch (const SingularOriginError &e)
    {
      Fail(kInput, e.what());
    }
    Destination dest(options.out, out);
    WriteCsv(dest.stream(), {"t", "value"}, {t, result});
    return static_cast<int>(kSuccess);
  });
}

int run_verify(const VerifyCommandOptions &options, std::ostream &out, std::ostream &err)
{
  return Guarded(err, [&]
  {
    VerifyOptions verify_options;
    if (options.inject_gamma_fault)
    {
      verify_options.reference_gamma = [](double x) { return gamma(x) * (1.0 + 1e-3); };
    }
    const auto results = run_property_suite(verify_options);
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const PropertyResult &r) { return r.passed; });
    if (options.json)
    {
      json report;
      report["passed"] = all;
      report["properties"] = json::array();
      for (const auto &r : results)
      {
        report["properties"].push_back({{"name", r.name},
                                        {"passed", r.passed},
                                        {"measured", r.measured},
                                        {"threshold", r.threshold},
                                        {"detail", r.detail}});
      }
      out << report.dump(2) << '\n';
    }
    else
    {
      for (const auto &r : results)
      {
        out << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(50) << r.name
            << "  measured=" << FormatNumber(r.measured) << "  bound=" << FormatNumber(r.threshold)
            << "  " << r.detail << '\n';
      }
      out << (all ? "all properties passed" : "some properties FAILED") << '\n';
    }
    return static_cast<int>(all ? kSuccess : kNumerical);
  });
}

}  // namespace fode::cli
