#include "massprec/operators.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace massprec {
namespace {

void require_size(const GridSpec& spec, std::span<const double> v, const char* what) {
  if (v.size() != spec.size()) {
    throw DimensionError(std::string(what) + " has " + std::to_string(v.size()) + " entries, " +
                         to_string(spec) + " needs " + std::to_string(spec.size()));
  }
}

// Pads the grid to three axes with leading extents of 1.
std::array<std::size_t, 3> padded_extents(const GridSpec& spec) {
  std::array<std::size_t, 3> e{1, 1, 1};
  for (int a = 0; a < spec.dim(); ++a) {
    e[3 - spec.dim() + a] = static_cast<std::size_t>(spec.n());
  }
  return e;
}

struct Line {
  std::size_t outer;
  std::size_t length;
  std::size_t inner;
};

Line line_layout(const GridSpec& spec, int axis) {
  const std::size_t inner = spec.stride(axis);
  const std::size_t length = static_cast<std::size_t>(spec.n());
  return {spec.size() / (length * inner), length, inner};
}

// out = c_off * (in[i-1] + in[i+1]) + c_mid * in[i] along one axis.
void tridiagonal_sweep(const GridSpec& spec, int axis, double c_off, double c_mid,
                       std::span<const double> in, std::span<double> out) {
  const auto [outer, length, inner] = line_layout(spec, axis);
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = o * length * inner;
    for (std::size_t i = 0; i < length; ++i) {
      const std::size_t row = base + i * inner;
      for (std::size_t j = 0; j < inner; ++j) {
        const std::size_t c = row + j;
        double neighbors = 0.0;
        if (i > 0) neighbors += in[c - inner];
        if (i + 1 < length) neighbors += in[c + inner];
        out[c] = c_mid * in[c] + c_off * neighbors;
      }
    }
  }
}

}  // namespace

double mass_scale(const GridSpec& spec) {
  switch (spec.dim()) {
    case 1:
      return spec.h();
    case 2:
      return 1.0;
    default:
      return 1.0 / spec.h();
  }
}

namespace kernels {

void laplacian(const GridSpec& spec, std::span<const double> in, std::span<double> out) {
  require_size(spec, in, "input");
  require_size(spec, out, "output");
  const auto e = padded_extents(spec);
  const double inv_h2 = 1.0 / (spec.h() * spec.h());
  const double diag = 2.0 * spec.dim();
  const std::size_t s0 = e[1] * e[2];
  const std::size_t s1 = e[2];

  for (std::size_t i = 0; i < e[0]; ++i) {
    for (std::size_t j = 0; j < e[1]; ++j) {
      const std::size_t row = i * s0 + j * s1;
      for (std::size_t k = 0; k < e[2]; ++k) {
        const std::size_t c = row + k;
        double neighbors = 0.0;
        if (i > 0) neighbors += in[c - s0];
        if (i + 1 < e[0]) neighbors += in[c + s0];
        if (j > 0) neighbors += in[c - s1];
        if (j + 1 < e[1]) neighbors += in[c + s1];
        if (k > 0) neighbors += in[c - 1];
        if (k + 1 < e[2]) neighbors += in[c + 1];
        out[c] = inv_h2 * (diag * in[c] - neighbors);
      }
    }
  }
}

void laplacian_along(const GridSpec& spec, int axis, std::span<const double> in,
                     std::span<double> out) {
  require_size(spec, in, "input");
  require_size(spec, out, "output");
  const double inv_h2 = 1.0 / (spec.h() * spec.h());
  tridiagonal_sweep(spec, axis, -inv_h2, 2.0 * inv_h2, in, out);
}

void mass_along(const GridSpec& spec, int axis, std::span<const double> in,
                std::span<double> out) {
  require_size(spec, in, "input");
  require_size(spec, out, "output");
  const double w = spec.h() / 6.0;
  tridiagonal_sweep(spec, axis, w, 4.0 * w, in, out);
}

void mass(const GridSpec& spec, std::span<const double> in, std::span<double> out,
          std::span<double> scratch) {
  require_size(spec, in, "input");
  require_size(spec, out, "output");
  require_size(spec, scratch, "scratch");

  // Ping-pong between out and scratch so the last sweep lands in out.
  std::span<double> bufs[2] = {out, scratch};
  int cur = (spec.dim() % 2 == 1) ? 0 : 1;
  mass_along(spec, 0, in, bufs[cur]);
  for (int axis = 1; axis < spec.dim(); ++axis) {
    mass_along(spec, axis, bufs[cur], bufs[1 - cur]);
    cur = 1 - cur;
  }
  const double scale = mass_scale(spec);
  if (scale != 1.0) {
    for (double& v : out) v *= scale;
  }
}

}  // namespace kernels

GridVector apply_laplacian(const GridSpec& spec, const GridVector& u) {
  require_same_grid(spec, u);
  GridVector out(spec);
  kernels::laplacian(spec, u.values(), out.values());
  return out;
}

GridVector apply_mass(const GridSpec& spec, const GridVector& u) {
  require_same_grid(spec, u);
  GridVector out(spec);
  std::vector<double> scratch(spec.size());
  kernels::mass(spec, u.values(), out.values(), scratch);
  return out;
}

GridVector apply_preconditioned(const GridSpec& spec, const GridVector& u) {
  return apply_mass(spec, apply_laplacian(spec, u));
}

GridVector apply(OperatorKind kind, const GridSpec& spec, const GridVector& u) {
  switch (kind) {
    case OperatorKind::kLaplacian:
      return apply_laplacian(spec, u);
    case OperatorKind::kMass:
      return apply_mass(spec, u);
    case OperatorKind::kPreconditioned:
      return apply_preconditioned(spec, u);
  }
  throw DomainError("unknown operator kind");
}

double dot(const GridVector& u, const GridVector& v) {
  require_same_grid(u.spec(), v);
  double s = 0.0;
  const auto a = u.values();
  const auto b = v.values();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const GridVector& u) { return std::sqrt(dot(u, u)); }

GridVector axpy(double alpha, const GridVector& u, const GridVector& v) {
  require_same_grid(u.spec(), v);
  GridVector out(v);
  auto o = out.values();
  const auto a = u.values();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += alpha * a[i];
  return out;
}

}  // namespace massprec
