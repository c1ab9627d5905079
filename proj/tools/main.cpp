// massprec: condition numbers, spectra and CG experiments for the
// mass-matrix-preconditioned finite-difference Poisson problem.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "experiments.hpp"
#include "massprec/krylov.hpp"
#include "massprec/spectrum.hpp"

namespace {

using namespace massprec;
using namespace massprec::cli;

struct Options {
  int dim = 0;
  std::vector<int> ns;
  double tol = 1e-8;
  std::string precond = "none";
  std::string rhs = "ones";
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "csv";
  std::string kind = "preconditioned";
  std::string stopping = "relative";
  std::size_t max_iter = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) { return s == "markdown" ? Format::kMarkdown : Format::kCsv; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << text;
}

SolveConfig solve_config(const Options& opt) {
  SolveConfig cfg;
  cfg.tol = opt.tol;
  cfg.precondition = opt.precond == "mass" ? Preconditioner::kMass : Preconditioner::kNone;
  cfg.stopping = opt.stopping == "absolute" ? StoppingRule::kAbsolute : StoppingRule::kRelative;
  if (opt.max_iter > 0) cfg.max_iter = opt.max_iter;
  return cfg;
}

RhsKind rhs_kind(const Options& opt) { return opt.rhs == "random" ? RhsKind::kRandom : RhsKind::kOnes; }

GridSpec single_grid(const Options& opt) {
  if (opt.dim == 0) throw UsageError("--dim is required");
  if (opt.ns.size() != 1) throw UsageError("exactly one --n is required");
  return GridSpec(opt.dim, opt.ns.front());
}

int cmd_condition(const Options& opt) {
  if (opt.dim == 0) throw UsageError("--dim is required");
  if (opt.ns.empty()) throw UsageError("at least one --n is required");
  std::vector<RatioReport> rows;
  for (int n : opt.ns) rows.push_back(ratio_report(GridSpec(opt.dim, n)));
  write_output(opt.out, render_condition(rows, parse_format(opt.format)));
  return kExitOk;
}

int cmd_table1(const Options& opt) {
  std::vector<RatioReport> rows;
  if (opt.ns.empty()) {
    rows = table1_reports();
  } else {
    for (int d = 1; d <= 3; ++d) {
      if (opt.dim != 0 && d != opt.dim) continue;
      for (int n : opt.ns) rows.push_back(ratio_report(GridSpec(d, n)));
    }
  }
  write_output(opt.out, render_table1(rows, parse_format(opt.format)));
  return kExitOk;
}

int cmd_table2(const Options& opt) {
  std::vector<GridCase> cases;
  for (const auto& c : table2_cases()) {
    if (opt.dim != 0 && c.dim != opt.dim) continue;
    if (!opt.ns.empty() && std::find(opt.ns.begin(), opt.ns.end(), c.n) == opt.ns.end()) continue;
    cases.push_back(c);
  }
  if (opt.dim != 0 && !opt.ns.empty() && cases.empty()) {
    for (int n : opt.ns) cases.push_back({opt.dim, n});
  }
  Table2Options t2{solve_config(opt), rhs_kind(opt), opt.seed, &std::cerr};
  const auto rows = run_table2(cases, t2);
  write_output(opt.out, render_table2(rows, parse_format(opt.format)));
  for (const auto& r : rows) {
    if (!r.unprec_converged || !r.prec_converged) return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_spectrum(const Options& opt) {
  const auto spec = single_grid(opt);
  const auto kind = parse_operator_kind(opt.kind);
  if (!kind) throw UsageError("unknown operator kind " + opt.kind);
  write_output(opt.out, render_spectrum(full_spectrum(*kind, spec), parse_format(opt.format)));
  return kExitOk;
}

int cmd_solve(const Options& opt) {
  const auto spec = single_grid(opt);
  const auto b = make_rhs(spec, rhs_kind(opt), opt.seed);
  const auto report = cg_solve(spec, b, GridVector(spec), solve_config(opt));
  write_output(opt.out, render_history(report.residual_history, parse_format(opt.format)));
  std::cerr << fmt::format("{} after {} iterations, residual {:.3e} (threshold {:.3e})\n",
                           report.converged ? "converged" : "NOT converged", report.iterations,
                           report.true_residual, report.threshold);
  return report.converged ? kExitOk : kExitNotConverged;
}

int cmd_figures(const Options& opt) {
  const std::filesystem::path dir = opt.out.empty() ? "figures" : opt.out;
  std::filesystem::create_directories(dir);
  const auto format = parse_format(opt.format);
  const std::string ext = format == Format::kCsv ? ".csv" : ".md";

  const GridSpec fig1(2, 32);
  for (auto kind : {OperatorKind::kLaplacian, OperatorKind::kPreconditioned}) {
    write_output((dir / ("fig1_" + std::string(to_string(kind)) + ext)).string(),
                 render_spectrum(full_spectrum(kind, fig1), format));
  }

  std::vector<GridCase> histories = {{2, 128}, {2, 256}, {3, 64}, {3, 128}};
  if (opt.dim != 0 || !opt.ns.empty()) {
    histories.clear();
    for (int n : opt.ns.empty() ? std::vector<int>{32} : opt.ns) {
      histories.push_back({opt.dim == 0 ? 2 : opt.dim, n});
    }
  }

  int status = kExitOk;
  for (const auto& c : histories) {
    const GridSpec spec(c.dim, c.n);
    const auto b = make_rhs(spec, rhs_kind(opt), opt.seed);
    std::cerr << fmt::format("{}D n={}: at most ~{:.1f} s\n", c.dim, c.n,
                             estimate_solve_seconds(spec, opt.tol));
    for (const char* pc : {"none", "mass"}) {
      Options o = opt;
      o.precond = pc;
      const auto report = cg_solve(spec, b, GridVector(spec), solve_config(o));
      const auto name = fmt::format("fig_history_{}d_n{}_{}{}", c.dim, c.n, pc, ext);
      write_output((dir / name).string(), render_history(report.residual_history, format));
      if (!report.converged) status = kExitNotConverged;
    }
  }
  return status;
}

void add_grid_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--dim", opt.dim, "Spatial dimension")->check(CLI::IsMember({1, 2, 3}));
  cmd->add_option("--n", opt.ns, "Interior points per axis (repeatable)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  cmd->add_option("--out", opt.out, "Output path (stdout when omitted)");
}

void add_solver_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tol", opt.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--rhs", opt.rhs, "Right-hand side")->check(CLI::IsMember({"ones", "random"}));
  cmd->add_option("--seed", opt.seed, "Seed for --rhs random");
  cmd->add_option("--stopping", opt.stopping, "Residual test: relative to ||b|| or absolute")
      ->check(CLI::IsMember({"relative", "absolute"}));
  cmd->add_option("--max-iter", opt.max_iter, "Iteration cap (default 10 n^d)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mass-matrix preconditioned CG for the finite-difference Poisson equation"};
  app.require_subcommand(1);
  Options opt;

  auto* condition = app.add_subcommand("condition", "kappa, kappa_p, r and sqrt(r) for one dimension");
  add_grid_options(condition, opt);

  auto* table1 = app.add_subcommand("table1", "Condition-number ratio table");
  add_grid_options(table1, opt);

  auto* table2 = app.add_subcommand("table2", "Iteration counts with and without preconditioning");
  add_grid_options(table2, opt);
  add_solver_options(table2, opt);

  auto* spectrum = app.add_subcommand("spectrum", "Sorted eigenvalues as index,eigenvalue");
  add_grid_options(spectrum, opt);
  spectrum->add_option("--kind", opt.kind, "Operator")
      ->check(CLI::IsMember({"laplacian", "mass", "preconditioned"}));

  auto* solve = app.add_subcommand("solve", "Run CG and emit iter,residual_norm");
  add_grid_options(solve, opt);
  add_solver_options(solve, opt);
  solve->add_option("--precond", opt.precond, "Preconditioner")->check(CLI::IsMember({"none", "mass"}));

  auto* figures = app.add_subcommand("figures", "Write spectrum and convergence-history CSVs to --out DIR");
  add_grid_options(figures, opt);
  add_solver_options(figures, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*condition) return cmd_condition(opt);
    if (*table1) return cmd_table1(opt);
    if (*table2) return cmd_table2(opt);
    if (*spectrum) return cmd_spectrum(opt);
    if (*solve) return cmd_solve(opt);
    if (*figures) return cmd_figures(opt);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const BreakdownError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBreakdown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
