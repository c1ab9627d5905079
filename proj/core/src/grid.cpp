#include "massprec/grid.hpp"

#include <cmath>
#include <utility>

namespace massprec {

GridSpec::GridSpec(int dim, int n) : dim_(dim), n_(n), size_(1) {
  if (dim < 1 || dim > kMaxDim) {
    throw DomainError("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
  }
  if (n < 1) {
    throw DomainError("interior points per axis must be positive, got " + std::to_string(n));
  }
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n);
}

std::size_t GridSpec::stride(int axis) const {
  if (axis < 0 || axis >= dim_) {
    throw DomainError("axis " + std::to_string(axis) + " out of range for " + massprec::to_string(*this));
  }
  std::size_t s = 1;
  for (int a = axis + 1; a < dim_; ++a) s *= static_cast<std::size_t>(n_);
  return s;
}

std::string to_string(const GridSpec& spec) {
  return std::to_string(spec.dim()) + "D grid with n=" + std::to_string(spec.n());
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kLaplacian:
      return "laplacian";
    case OperatorKind::kMass:
      return "mass";
    case OperatorKind::kPreconditioned:
      return "preconditioned";
  }
  return "unknown";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view name) {
  if (name == "laplacian") return OperatorKind::kLaplacian;
  if (name == "mass") return OperatorKind::kMass;
  if (name == "preconditioned") return OperatorKind::kPreconditioned;
  return std::nullopt;
}

GridVector::GridVector(const GridSpec& spec) : spec_(spec), values_(spec.size(), 0.0) {}

GridVector::GridVector(const GridSpec& spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
  if (values_.size() != spec_.size()) {
    throw DimensionError("vector of length " + std::to_string(values_.size()) + " does not match " +
                         to_string(spec_) + " (" + std::to_string(spec_.size()) + " unknowns)");
  }
}

GridVector GridVector::constant(const GridSpec& spec, double value) {
  return GridVector(spec, std::vector<double>(spec.size(), value));
}

bool GridVector::all_finite() const noexcept {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void require_same_grid(const GridSpec& spec, const GridVector& v) {
  if (!(v.spec() == spec) || v.size() != spec.size()) {
    throw DimensionError("vector on " + to_string(v.spec()) + " used with " + to_string(spec));
  }
}

}  // namespace massprec
