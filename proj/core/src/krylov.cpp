#include "massprec/krylov.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "massprec/operators.hpp"
#include "massprec/spectrum.hpp"

namespace massprec {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// r = b - A x
void residual(const GridSpec& spec, std::span<const double> b, std::span<const double> x,
              std::span<double> r) {
  kernels::laplacian(spec, x, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
}

void require_positive(double value, const char* what, std::size_t k) {
  if (!std::isfinite(value)) {
    throw BreakdownError(std::string("non-finite ") + what + " at iteration " + std::to_string(k));
  }
  if (value <= 0.0) {
    throw BreakdownError(std::string(what) + " = " + std::to_string(value) +
                         " is not positive at iteration " + std::to_string(k));
  }
}

// `precondition == nullptr` runs plain CG, with z sharing storage with r.
SolveReport run_cg(const GridSpec& spec, const GridVector& b, const GridVector& x0,
                   const SolveConfig& cfg, const PreconditionerFn* precondition,
                   const IterateObserver& observer) {
  require_same_grid(spec, b);
  require_same_grid(spec, x0);
  cfg.validate();
  if (!b.all_finite() || !x0.all_finite()) {
    throw BreakdownError("right-hand side or initial guess contains non-finite values");
  }

  const std::size_t size = spec.size();
  const std::size_t limit = cfg.iteration_limit(spec);

  SolveReport report{.residual_history = {}, .solution = x0};
  auto x = report.solution.values();
  std::vector<double> r(size);
  std::vector<double> p(size);
  std::vector<double> ap(size);
  std::vector<double> z_storage(precondition ? size : 0);
  std::span<double> z = precondition ? std::span<double>(z_storage) : std::span<double>(r);

  const double b_norm = std::sqrt(dot(b.values(), b.values()));
  report.threshold =
      cfg.stopping == StoppingRule::kRelative && b_norm > 0.0 ? cfg.tol * b_norm : cfg.tol;

  auto record = [&](double norm) {
    report.final_residual = norm;
    if (cfg.record_history) report.residual_history.push_back(norm);
  };

  auto restart_direction = [&](std::size_t k) {
    if (precondition) (*precondition)(r, z);
    const double rz = dot(r, z);
    require_positive(rz, "<z, r>", k);
    std::copy(z.begin(), z.end(), p.begin());
    return rz;
  };

  residual(spec, b.values(), x, r);
  double r_norm = std::sqrt(dot(r, r));
  record(r_norm);

  if (r_norm < report.threshold) {
    report.converged = true;
  } else {
    double rz = restart_direction(0);
    for (std::size_t k = 1; k <= limit; ++k) {
      kernels::laplacian(spec, p, ap);
      const double p_ap = dot(p, ap);
      require_positive(p_ap, "<p, A p>", k);
      const double alpha = rz / p_ap;
      for (std::size_t i = 0; i < size; ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * ap[i];
      }
      report.iterations = k;
      if (observer) observer(k, x);

      r_norm = std::sqrt(dot(r, r));
      if (!std::isfinite(r_norm)) {
        throw BreakdownError("non-finite residual at iteration " + std::to_string(k));
      }
      record(r_norm);

      if (r_norm < report.threshold) {
        // Confirm against the true residual; on drift, restart from it.
        residual(spec, b.values(), x, r);
        const double true_norm = std::sqrt(dot(r, r));
        if (true_norm < report.threshold) {
          report.converged = true;
          break;
        }
        report.final_residual = true_norm;
        if (cfg.record_history) report.residual_history.back() = true_norm;
        rz = restart_direction(k);
        continue;
      }

      if (precondition) (*precondition)(r, z);
      const double rz_next = dot(r, z);
      require_positive(rz_next, "<z, r>", k);
      const double beta = rz_next / rz;
      for (std::size_t i = 0; i < size; ++i) p[i] = z[i] + beta * p[i];
      rz = rz_next;
    }
  }

  residual(spec, b.values(), x, r);
  report.true_residual = std::sqrt(dot(r, r));
  return report;
}

}  // namespace

void SolveConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("tolerance must be a positive finite number, got " + std::to_string(tol));
  }
  if (max_iter && *max_iter < 1) {
    throw DomainError("max_iter must be at least 1");
  }
}

std::size_t SolveConfig::iteration_limit(const GridSpec& spec) const {
  return max_iter.value_or(10 * spec.size());
}

SolveReport cg_solve(const GridSpec& spec, const GridVector& b, const GridVector& x0,
                     const SolveConfig& cfg, const IterateObserver& observer) {
  if (cfg.precondition == Preconditioner::kNone) {
    return run_cg(spec, b, x0, cfg, nullptr, observer);
  }
  std::vector<double> scratch(spec.size());
  const PreconditionerFn mass = [&](std::span<const double> r, std::span<double> z) {
    kernels::mass(spec, r, z, scratch);
  };
  return run_cg(spec, b, x0, cfg, &mass, observer);
}

SolveReport pcg_solve(const GridSpec& spec, const GridVector& b, const GridVector& x0,
                      const SolveConfig& cfg, const PreconditionerFn& precondition,
                      const IterateObserver& observer) {
  return run_cg(spec, b, x0, cfg, &precondition, observer);
}

GridVector make_rhs(const GridSpec& spec, RhsKind kind, std::uint64_t seed) {
  if (kind == RhsKind::kOnes) return GridVector::constant(spec, 1.0);
  std::mt19937_64 engine(seed);
  std::vector<double> values(spec.size());
  for (double& v : values) v = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return GridVector(spec, std::move(values));
}

IterationComparison predicted_vs_observed(const GridSpec& spec, const GridVector& b,
                                          const GridVector& x0, SolveConfig cfg) {
  cfg.record_history = false;
  cfg.precondition = Preconditioner::kNone;
  const auto plain = cg_solve(spec, b, x0, cfg);
  cfg.precondition = Preconditioner::kMass;
  const auto mass = cg_solve(spec, b, x0, cfg);
  const auto ratio = ratio_report(spec);

  const double observed = mass.iterations == 0
                              ? std::numeric_limits<double>::quiet_NaN()
                              : static_cast<double>(plain.iterations) / mass.iterations;
  return IterationComparison{spec,           plain.iterations, mass.iterations, plain.converged,
                             mass.converged, observed,         ratio.predicted_iter_ratio};
}

}  // namespace massprec
