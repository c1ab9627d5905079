#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace massprec {

/// Raised when a vector does not belong to the grid it is used with.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for out-of-range arguments (bad dimension, mode index, tolerance).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a request would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t required, std::size_t allowed)
      : std::runtime_error(what + " (required " + std::to_string(required) +
                           ", allowed " + std::to_string(allowed) + ")"),
        required_(required),
        allowed_(allowed) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t allowed() const noexcept { return allowed_; }

 private:
  std::size_t required_;
  std::size_t allowed_;
};

/// Raised by the Krylov solver on non-finite values or loss of positivity.
class BreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform grid of n interior points per axis on the unit d-cube,
/// mesh width h = 1/(n+1). Unknowns are ordered row-major: axis 0 is the
/// slowest-varying index, axis d-1 the fastest.
class GridSpec {
 public:
  static constexpr int kMaxDim = 3;

  GridSpec(int dim, int n);

  int dim() const noexcept { return dim_; }
  int n() const noexcept { return n_; }
  double h() const noexcept { return 1.0 / static_cast<double>(n_ + 1); }

  /// Total number of unknowns, n^d.
  std::size_t size() const noexcept { return size_; }

  /// Distance in the flat array between neighbors along `axis`.
  std::size_t stride(int axis) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int dim_;
  int n_;
  std::size_t size_;
};

std::string to_string(const GridSpec& spec);

enum class OperatorKind { kLaplacian, kMass, kPreconditioned };

std::string_view to_string(OperatorKind kind);
std::optional<OperatorKind> parse_operator_kind(std::string_view name);

/// Grid function: n^d values tied to a GridSpec.
class GridVector {
 public:
  explicit GridVector(const GridSpec& spec);
  GridVector(const GridSpec& spec, std::vector<double> values);

  static GridVector constant(const GridSpec& spec, double value);

  const GridSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  bool all_finite() const noexcept;

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

/// Throws DimensionError unless `v` lives on `spec`.
void require_same_grid(const GridSpec& spec, const GridVector& v);

}  // namespace massprec
