#include "massprec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace massprec {
namespace {

// cos(pi h k) for k = 1..n, stored at index k-1.
std::vector<double> mode_cosines(const GridSpec& spec) {
  std::vector<double> c(static_cast<std::size_t>(spec.n()));
  const double h = spec.h();
  for (int k = 1; k <= spec.n(); ++k) {
    c[static_cast<std::size_t>(k - 1)] = std::cos(std::numbers::pi * h * k);
  }
  return c;
}

double pow3(int d) { return d == 1 ? 3.0 : d == 2 ? 9.0 : 27.0; }

struct ModeSymbol {
  double sum;      // sum_j (1 - c_j)
  double product;  // prod_j (2 + c_j)
};

template <typename CosineAt>
ModeSymbol symbol(int dim, CosineAt cosine_at) {
  ModeSymbol s{0.0, 1.0};
  for (int j = 0; j < dim; ++j) {
    const double c = cosine_at(j);
    s.sum += 1.0 - c;
    s.product *= 2.0 + c;
  }
  return s;
}

double from_symbol(OperatorKind kind, const GridSpec& spec, ModeSymbol s) {
  const double h = spec.h();
  switch (kind) {
    case OperatorKind::kLaplacian:
      return 2.0 / (h * h) * s.sum;
    case OperatorKind::kMass:
      return h * h / pow3(spec.dim()) * s.product;
    case OperatorKind::kPreconditioned:
      return 2.0 / pow3(spec.dim()) * s.product * s.sum;
  }
  return 0.0;
}

double eigenvalue_from_table(OperatorKind kind, const GridSpec& spec,
                             const std::vector<double>& cosines, std::span<const int> k) {
  const auto s = symbol(spec.dim(), [&](int j) {
    return cosines[static_cast<std::size_t>(k[static_cast<std::size_t>(j)] - 1)];
  });
  return from_symbol(kind, spec, s);
}

void validate_mode(const GridSpec& spec, std::span<const int> k) {
  if (k.size() != static_cast<std::size_t>(spec.dim())) {
    throw DomainError("mode has " + std::to_string(k.size()) + " indices, " + to_string(spec) +
                      " needs " + std::to_string(spec.dim()));
  }
  for (int kj : k) {
    if (kj < 1 || kj > spec.n()) {
      throw DomainError("mode index " + std::to_string(kj) + " outside 1.." +
                        std::to_string(spec.n()));
    }
  }
}

struct Extreme {
  double value;
  Mode mode;
};

// Advances `k` through {1..n}^len in lexicographic order; false when done.
bool next_mode(Mode& k, std::size_t len, int n) {
  for (std::size_t j = len; j-- > 0;) {
    if (k[j] < n) {
      ++k[j];
      return true;
    }
    k[j] = 1;
  }
  return false;
}

// A_d and M_d are separable (sum or product of positive per-axis terms), so
// each axis is extremised independently.
std::pair<Extreme, Extreme> scan_separable(OperatorKind kind, const GridSpec& spec,
                                           const std::vector<double>& cosines) {
  const auto term = [&](int k) {
    const double c = cosines[static_cast<std::size_t>(k - 1)];
    return kind == OperatorKind::kLaplacian ? 1.0 - c : 2.0 + c;
  };
  int kmin = 1;
  int kmax = 1;
  for (int k = 2; k <= spec.n(); ++k) {
    if (term(k) < term(kmin)) kmin = k;
    if (term(k) > term(kmax)) kmax = k;
  }
  const auto dim = static_cast<std::size_t>(spec.dim());
  Mode lo(dim, kmin);
  Mode hi(dim, kmax);
  return {Extreme{eigenvalue_from_table(kind, spec, cosines, lo), lo},
          Extreme{eigenvalue_from_table(kind, spec, cosines, hi), hi}};
}

// T_d symbol restricted to one coordinate x is P (2 + x)(S + 1 - x), a
// concave quadratic in x with vertex (S - 1)/2. Its minimum over a finite
// set is at an endpoint and its maximum at a neighbour of the vertex.
std::pair<Extreme, Extreme> scan_preconditioned(const GridSpec& spec,
                                                const std::vector<double>& cosines) {
  const int n = spec.n();
  const auto dim = static_cast<std::size_t>(spec.dim());
  constexpr auto kind = OperatorKind::kPreconditioned;

  Extreme lo{0.0, {}};
  {
    Mode k(dim, 1);
    bool first = true;
    // {1, n}^d
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      for (std::size_t j = 0; j < dim; ++j) k[j] = (mask >> (dim - 1 - j)) & 1u ? n : 1;
      const double v = eigenvalue_from_table(kind, spec, cosines, k);
      if (first || v < lo.value) {
        lo = {v, k};
        first = false;
      }
    }
  }

  Extreme hi{0.0, {}};
  bool first = true;
  const std::size_t head = dim - 1;
  Mode k(dim, 1);
  const double pi_h = std::numbers::pi * spec.h();
  do {
    double others = 0.0;
    for (std::size_t j = 0; j < head; ++j) {
      others += 1.0 - cosines[static_cast<std::size_t>(k[j] - 1)];
    }
    const double vertex = std::clamp((others - 1.0) / 2.0, -1.0, 1.0);
    const int centre = static_cast<int>(std::floor(std::acos(vertex) / pi_h));
    const int from = std::max(1, centre - 1);
    const int to = std::min(n, centre + 2);
    for (int last = from; last <= to; ++last) {
      k[head] = last;
      const double v = eigenvalue_from_table(kind, spec, cosines, k);
      if (first || v > hi.value) {
        hi = {v, k};
        first = false;
      }
    }
    k[head] = 1;
  } while (next_mode(k, head, n));
  return {lo, hi};
}

ClosedFormCheck check_closed_form(const GridSpec& spec, const std::vector<double>& cosines,
                                  double scan_kappa) {
  constexpr auto kind = OperatorKind::kPreconditioned;
  const auto dim = static_cast<std::size_t>(spec.dim());
  const int n = spec.n();
  ClosedFormCheck out;
  out.index = integer_part_maximizer(spec);

  const Mode ones(dim, 1);
  const double lambda_min = eigenvalue_from_table(kind, spec, cosines, ones);

  if (out.index >= 1 && out.index <= n) {
    const Mode at(dim, out.index);
    out.kappa_p = eigenvalue_from_table(kind, spec, cosines, at) / lambda_min;
  } else {
    out.kappa_p = std::numeric_limits<double>::quiet_NaN();
  }
  out.relative_discrepancy = std::abs(out.kappa_p - scan_kappa) / scan_kappa;
  out.index_attains_extremum = out.relative_discrepancy <= 1e-12;

  const int lo = std::clamp(out.index, 1, n);
  const int hi = std::clamp(out.index + 1, 1, n);
  double best = -1.0;
  Mode k(dim);
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    for (std::size_t j = 0; j < dim; ++j) k[j] = (mask >> (dim - 1 - j)) & 1u ? hi : lo;
    const double v = eigenvalue_from_table(kind, spec, cosines, k);
    if (v > best) {
      best = v;
      out.bracketed_argmax = k;
    }
  }
  out.bracketed_kappa_p = best / lambda_min;
  out.bracketed_relative_discrepancy = std::abs(out.bracketed_kappa_p - scan_kappa) / scan_kappa;
  return out;
}

}  // namespace

double eigenvalue(OperatorKind kind, const GridSpec& spec, std::span<const int> k) {
  validate_mode(spec, k);
  const double h = spec.h();
  const auto s = symbol(spec.dim(), [&](int j) {
    return std::cos(std::numbers::pi * h * k[static_cast<std::size_t>(j)]);
  });
  return from_symbol(kind, spec, s);
}

int integer_part_maximizer(const GridSpec& spec) {
  const int m = spec.n() + 1;  // 1/h, exactly
  switch (spec.dim()) {
    case 1:
      return (2 * m) / 3;
    case 2:
      return m / 2;
    default:
      return static_cast<int>(std::floor(std::acos(0.25) * m / std::numbers::pi));
  }
}

SpectrumReport spectrum_report(OperatorKind kind, const GridSpec& spec) {
  const auto cosines = mode_cosines(spec);
  const auto [lo, hi] = kind == OperatorKind::kPreconditioned
                            ? scan_preconditioned(spec, cosines)
                            : scan_separable(kind, spec, cosines);
  SpectrumReport report{kind, spec, lo.value, hi.value, hi.value / lo.value, lo.mode, hi.mode,
                        std::nullopt};
  if (kind == OperatorKind::kPreconditioned) {
    report.closed_form = check_closed_form(spec, cosines, report.kappa);
  }
  return report;
}

double asymptotic_ratio_limit(int dim) {
  switch (dim) {
    case 1:
      return 8.0 / 3.0;
    case 2:
      return 9.0 / 2.0;
    case 3:
      return 512.0 / 81.0;
    default:
      throw DomainError("no ratio limit for dimension " + std::to_string(dim));
  }
}

RatioReport ratio_report(const GridSpec& spec) {
  const auto a = spectrum_report(OperatorKind::kLaplacian, spec);
  const auto t = spectrum_report(OperatorKind::kPreconditioned, spec);
  const double r = a.kappa / t.kappa;
  return RatioReport{spec, a.kappa, t.kappa, r, std::sqrt(r), asymptotic_ratio_limit(spec.dim())};
}

std::vector<double> full_spectrum(OperatorKind kind, const GridSpec& spec, std::size_t cap) {
  if (spec.size() > cap) {
    throw ResourceError("full spectrum of " + to_string(spec) + " exceeds the enumeration cap",
                        spec.size(), cap);
  }
  const auto cosines = mode_cosines(spec);
  const auto dim = static_cast<std::size_t>(spec.dim());
  std::vector<double> values;
  values.reserve(spec.size());
  Mode k(dim, 1);
  do {
    values.push_back(eigenvalue_from_table(kind, spec, cosines, k));
  } while (next_mode(k, dim, spec.n()));
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace massprec
