#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "massprec/grid.hpp"

namespace massprec {

enum class Preconditioner { kNone, kMass };

/// kRelative stops on ||r_k|| < tol * ||b||; kAbsolute on ||r_k|| < tol.
enum class StoppingRule { kRelative, kAbsolute };

struct SolveConfig {
  double tol = 1e-8;
  /// Defaults to 10 * n^d when unset.
  std::optional<std::size_t> max_iter;
  Preconditioner precondition = Preconditioner::kNone;
  StoppingRule stopping = StoppingRule::kRelative;
  bool record_history = true;

  void validate() const;
  std::size_t iteration_limit(const GridSpec& spec) const;
};

struct SolveReport {
  std::size_t iterations = 0;
  bool converged = false;
  /// Residual-norm threshold the stopping test compared against.
  double threshold = 0.0;
  /// ||r_j||_2 for j = 0..iterations (recurrence residual). Empty when
  /// history recording is off.
  std::vector<double> residual_history;
  /// ||r_k||_2 of the final recurrence residual.
  double final_residual = 0.0;
  /// ||b - A x_k||_2 recomputed from scratch at exit.
  double true_residual = 0.0;
  GridVector solution;
};

/// Called after every update of the iterate with (k, x_k); k starts at 1.
using IterateObserver = std::function<void(std::size_t, std::span<const double>)>;

/// z = P r. Must be a fixed SPD linear map.
using PreconditionerFn = std::function<void(std::span<const double> r, std::span<double> z)>;

/// Conjugate gradients on A_d x = b. With Preconditioner::kMass each step
/// applies z = M_d r (one matrix-vector product, no solve).
///
/// Throws BreakdownError on non-finite values or when <z, r> or <p, A p>
/// loses positivity. Reaching the iteration limit is not an error; the
/// report carries converged = false.
SolveReport cg_solve(const GridSpec& spec, const GridVector& b, const GridVector& x0,
                     const SolveConfig& cfg, const IterateObserver& observer = {});

/// Preconditioned CG with an arbitrary preconditioner. `cfg.precondition`
/// is ignored.
SolveReport pcg_solve(const GridSpec& spec, const GridVector& b, const GridVector& x0,
                      const SolveConfig& cfg, const PreconditionerFn& precondition,
                      const IterateObserver& observer = {});

enum class RhsKind { kOnes, kRandom };

/// Right-hand side for experiments. kRandom draws each entry uniformly in
/// [0, 1) as (mt19937_64() >> 11) * 2^-53, seeded with `seed`.
GridVector make_rhs(const GridSpec& spec, RhsKind kind, std::uint64_t seed = 42);

struct IterationComparison {
  GridSpec spec;
  std::size_t itn_unprec;
  std::size_t itn_prec;
  bool unprec_converged;
  bool prec_converged;
  double observed_ratio;
  double theoretical_ratio;
};

/// Solves the same system with and without the mass preconditioner and
/// pairs the observed iteration ratio with sqrt(kappa / kappa_p).
IterationComparison predicted_vs_observed(const GridSpec& spec, const GridVector& b,
                                          const GridVector& x0, SolveConfig cfg);

}  // namespace massprec
