#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "massprec/grid.hpp"

namespace massprec {

/// d-tuple of frequency indices, each in 1..n.
using Mode = std::vector<int>;

/// Closed-form eigenvalue of A_d, M_d or T_d for the sine mode `k`.
///   A_d: (2/h^2) sum_j (1 - cos(pi h k_j))
///   M_d: (h^2/3^d) prod_j (2 + cos(pi h k_j))
///   T_d: (2/3^d) prod_j (2 + cos(pi h k_j)) * sum_j (1 - cos(pi h k_j))
double eigenvalue(OperatorKind kind, const GridSpec& spec, std::span<const int> k);

/// Integer part of the continuous maximizer of the T_d mode symbol:
/// [2/(3h)] in 1D, [1/(2h)] in 2D, [arccos(1/4)/(pi h)] in 3D.
int integer_part_maximizer(const GridSpec& spec);

/// Comparison of the integer-part closed form for kappa(T_d) against the
/// discrete scan.
///
/// The integer part of the continuous maximizer need not be the discrete
/// maximizer: the true discrete maximum sits at one of the neighbouring
/// integers {idx, idx+1} in each coordinate. Both evaluations are kept so a
/// mismatch is visible instead of absorbed.
struct ClosedFormCheck {
  int index = 0;
  /// kappa_p with every coordinate at `index`. NaN when index < 1.
  double kappa_p = 0.0;
  /// |kappa_p - scan| / scan.
  double relative_discrepancy = 0.0;
  /// relative_discrepancy <= 1e-12.
  bool index_attains_extremum = false;
  /// Same closed form maximised over {index, index+1}^d (clamped to 1..n).
  double bracketed_kappa_p = 0.0;
  Mode bracketed_argmax;
  double bracketed_relative_discrepancy = 0.0;
};

struct SpectrumReport {
  OperatorKind kind;
  GridSpec spec;
  double lambda_min;
  double lambda_max;
  double kappa;
  Mode argmin;
  Mode argmax;
  /// Present only for OperatorKind::kPreconditioned.
  std::optional<ClosedFormCheck> closed_form;
};

/// Extreme eigenvalues by scanning the discrete spectrum. Separability
/// keeps the work at O(n) for A_d and M_d and O(n^(d-1)) for T_d.
SpectrumReport spectrum_report(OperatorKind kind, const GridSpec& spec);

struct RatioReport {
  GridSpec spec;
  double kappa;
  double kappa_p;
  double r;
  double predicted_iter_ratio;
  double asymptotic_limit;
};

/// 8/3, 9/2 or 512/81.
double asymptotic_ratio_limit(int dim);

RatioReport ratio_report(const GridSpec& spec);

inline constexpr std::size_t kDefaultSpectrumCap = std::size_t{1} << 20;

/// All n^d eigenvalues in ascending order. Throws ResourceError past `cap`.
std::vector<double> full_spectrum(OperatorKind kind, const GridSpec& spec,
                                  std::size_t cap = kDefaultSpectrumCap);

}  // namespace massprec
