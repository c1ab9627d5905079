#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "massprec/grid.hpp"
#include "massprec/spectrum.hpp"

namespace massprec::oracle {

// Brute-force reference: dense matrices assembled straight from the stencil
// definitions, independent of the matrix-free kernels. Tiny grids only.

inline constexpr std::size_t kDenseCap = 4096;

class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const double> entries() const noexcept { return entries_; }

  std::vector<double> multiply(std::span<const double> x) const;

  /// Largest |a_ij - a_ji| relative to the largest |a_ij|.
  double asymmetry() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Laplacian rows are written point by point from the (2d+1)-point stencil;
/// the mass matrix is the explicit Kronecker power of (h/6) tridiag(1,4,1)
/// times the dimensional scale; the preconditioned operator is the dense
/// product M_d A_d.
DenseMatrix assemble_dense(OperatorKind kind, const GridSpec& spec);

/// Tensor-product sine vector with entries prod_j sin(i_j k_j pi h), i_j = 1..n.
std::vector<double> sine_vector(const GridSpec& spec, std::span<const int> k);

struct RayleighEntry {
  Mode mode;
  double eigenvalue;
  /// ||D v - lambda v||_2 / ||v||_2
  double residual;
};

/// Rayleigh quotients of the dense operator on every sine tensor vector,
/// in lexicographic mode order.
std::vector<RayleighEntry> rayleigh_eigenvalues(OperatorKind kind, const GridSpec& spec);

}  // namespace massprec::oracle
