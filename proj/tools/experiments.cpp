#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "massprec/operators.hpp"

namespace massprec::cli {

std::string format_fixed(double value, int decimals) { return fmt::format("{:.{}f}", value, decimals); }

std::vector<RatioReport> table1_reports() {
  std::vector<RatioReport> rows;
  for (int d = 1; d <= 3; ++d) {
    for (int n : {8, 16, 32}) rows.push_back(ratio_report(GridSpec(d, n)));
  }
  return rows;
}

std::string render_condition(const std::vector<RatioReport>& rows, Format format) {
  std::string out;
  if (format == Format::kCsv) {
    out += "dim,n,kappa,kappa_p,ratio,predicted_iter_ratio\n";
    for (const auto& r : rows) {
      out += fmt::format("{},{},{:.4f},{:.4f},{:.4f},{:.4f}\n", r.spec.dim(), r.spec.n(), r.kappa,
                         r.kappa_p, r.r, r.predicted_iter_ratio);
    }
  } else {
    out += "| dim | n | kappa | kappa_p | ratio | predicted_iter_ratio |\n";
    out += "|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      out += fmt::format("| {} | {} | {:.4f} | {:.4f} | {:.4f} | {:.4f} |\n", r.spec.dim(),
                         r.spec.n(), r.kappa, r.kappa_p, r.r, r.predicted_iter_ratio);
    }
  }
  return out;
}

std::string render_table1(const std::vector<RatioReport>& rows, Format format) {
  if (format == Format::kCsv) return render_condition(rows, format);

  std::vector<int> ns;
  for (const auto& r : rows) {
    if (std::find(ns.begin(), ns.end(), r.spec.n()) == ns.end()) ns.push_back(r.spec.n());
  }
  std::string out = "| r_d |";
  std::string rule = "|---|";
  for (int n : ns) {
    out += fmt::format(" {} |", n);
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  for (int d = 1; d <= 3; ++d) {
    std::string line = fmt::format("| r_{} |", d);
    bool any = false;
    for (int n : ns) {
      auto it = std::find_if(rows.begin(), rows.end(),
                             [&](const RatioReport& r) { return r.spec.dim() == d && r.spec.n() == n; });
      if (it == rows.end()) {
        line += " |";
        continue;
      }
      any = true;
      line += fmt::format(" {:.4f}/{:.4f} ≈ {:.1f} |", it->kappa, it->kappa_p, it->r);
    }
    if (any) out += line + "\n";
  }
  return out;
}

std::vector<GridCase> table2_cases() {
  return {{2, 32}, {2, 64}, {2, 128}, {2, 256}, {3, 32}, {3, 64}, {3, 96}, {3, 128}};
}

double estimate_solve_seconds(const GridSpec& spec, double tol) {
  std::vector<double> in(spec.size(), 1.0);
  std::vector<double> out(spec.size());
  std::vector<double> scratch(spec.size());
  kernels::laplacian(spec, in, out);  // first touch
  const auto start = std::chrono::steady_clock::now();
  kernels::laplacian(spec, in, out);
  kernels::mass(spec, out, in, scratch);
  const double matvec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto ratio = ratio_report(spec);
  const double per_sqrt_kappa = 0.5 * std::log(2.0 / tol);
  const double k_plain = std::abs(per_sqrt_kappa) * std::sqrt(ratio.kappa);
  const double k_mass = std::abs(per_sqrt_kappa) * std::sqrt(ratio.kappa_p);
  // A preconditioned step costs roughly one fused matvec plus vector updates.
  return 1.5 * matvec * (k_plain + k_mass);
}

std::vector<IterationComparison> run_table2(const std::vector<GridCase>& cases,
                                            const Table2Options& options) {
  std::vector<IterationComparison> rows;
  rows.reserve(cases.size());
  for (const auto& c : cases) {
    const GridSpec spec(c.dim, c.n);
    if (options.progress) {
      *options.progress << fmt::format("{}D n={} ({} unknowns): at most ~{:.1f} s\n", c.dim, c.n,
                                       spec.size(),
                                       estimate_solve_seconds(spec, options.config.tol));
    }
    const auto b = make_rhs(spec, options.rhs, options.seed);
    rows.push_back(predicted_vs_observed(spec, b, GridVector(spec), options.config));
  }
  return rows;
}

std::string render_table2(const std::vector<IterationComparison>& rows, Format format) {
  std::string out;
  if (format == Format::kCsv) {
    out += "dim,n,mtx_size,itn_unprec,itn_prec,th_itn_ratio,itn_ratio\n";
    for (const auto& r : rows) {
      out += fmt::format("{},{},{},{},{},{:.2f},{:.2f}\n", r.spec.dim(), r.spec.n(), r.spec.size(),
                         r.itn_unprec, r.itn_prec, r.theoretical_ratio, r.observed_ratio);
    }
  } else {
    out += "| Type | n | mtx-size | itn-unprec | itn-prec | th-itn-ratio | itn-ratio |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      out += fmt::format("| {}D | {} | {} | {}{} | {}{} | {:.2f} | {:.2f} |\n", r.spec.dim(),
                         r.spec.n(), r.spec.size(), r.itn_unprec, r.unprec_converged ? "" : "*",
                         r.itn_prec, r.prec_converged ? "" : "*", r.theoretical_ratio,
                         r.observed_ratio);
    }
  }
  return out;
}

std::string render_spectrum(const std::vector<double>& values, Format format) {
  std::string out = format == Format::kCsv ? "index,eigenvalue\n" : "| index | eigenvalue |\n|---|---|\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += format == Format::kCsv ? fmt::format("{},{:.15g}\n", i + 1, values[i])
                                  : fmt::format("| {} | {:.15g} |\n", i + 1, values[i]);
  }
  return out;
}

std::string render_history(const std::vector<double>& history, Format format) {
  std::string out =
      format == Format::kCsv ? "iter,residual_norm\n" : "| iter | residual_norm |\n|---|---|\n";
  for (std::size_t i = 0; i < history.size(); ++i) {
    out += format == Format::kCsv ? fmt::format("{},{}\n", i, history[i])
                                  : fmt::format("| {} | {} |\n", i, history[i]);
  }
  return out;
}

}  // namespace massprec::cli
