#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "massprec/grid.hpp"
#include "massprec/krylov.hpp"
#include "massprec/spectrum.hpp"

namespace massprec::cli {

enum class Format { kCsv, kMarkdown };

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitBreakdown = 4;

/// Condition numbers for n in {8, 16, 32} and d in {1, 2, 3}, ordered by d then n.
std::vector<RatioReport> table1_reports();

/// One row per report: dim, n, kappa, kappa_p, ratio, predicted_iter_ratio.
std::string render_condition(const std::vector<RatioReport>& rows, Format format);

/// Same data as render_condition for CSV; markdown mirrors the
/// "kappa/kappa_p ~ r" grid with one row per dimension.
std::string render_table1(const std::vector<RatioReport>& rows, Format format);

struct GridCase {
  int dim;
  int n;
};

/// 2D: n = 32, 64, 128, 256. 3D: n = 32, 64, 96, 128.
std::vector<GridCase> table2_cases();

struct Table2Options {
  SolveConfig config;
  RhsKind rhs = RhsKind::kOnes;
  std::uint64_t seed = 42;
  /// Receives a time estimate before each case; may be null.
  std::ostream* progress = nullptr;
};

std::vector<IterationComparison> run_table2(const std::vector<GridCase>& cases,
                                            const Table2Options& options);

/// Columns: dim, n, mtx_size, itn_unprec, itn_prec, th_itn_ratio, itn_ratio.
std::string render_table2(const std::vector<IterationComparison>& rows, Format format);

/// `index,eigenvalue`, 1-based index, 15 significant digits.
std::string render_spectrum(const std::vector<double>& values, Format format);

/// `iter,residual_norm`, iter from 0, shortest round-trip decimal.
std::string render_history(const std::vector<double>& history, Format format);

/// Rough upper bound on the wall-clock time of one unpreconditioned plus one
/// preconditioned solve: a timed operator application times the iteration
/// bound k ~ 0.5 ln(2/tol) sqrt(kappa), which overestimates in practice.
double estimate_solve_seconds(const GridSpec& spec, double tol);

std::string format_fixed(double value, int decimals);

}  // namespace massprec::cli
