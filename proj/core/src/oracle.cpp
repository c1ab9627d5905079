#include "massprec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace massprec::oracle {
namespace {

void require_cap(const GridSpec& spec) {
  if (spec.size() > kDenseCap) {
    throw ResourceError("dense assembly of " + to_string(spec) + " exceeds the oracle cap",
                        spec.size(), kDenseCap);
  }
}

// Grid coordinates (0-based) of flat index `idx`, axis 0 slowest.
std::vector<int> coordinates(const GridSpec& spec, std::size_t idx) {
  std::vector<int> c(static_cast<std::size_t>(spec.dim()));
  for (int a = spec.dim() - 1; a >= 0; --a) {
    c[static_cast<std::size_t>(a)] = static_cast<int>(idx % static_cast<std::size_t>(spec.n()));
    idx /= static_cast<std::size_t>(spec.n());
  }
  return c;
}

std::size_t flat_index(const GridSpec& spec, const std::vector<int>& c) {
  std::size_t idx = 0;
  for (int v : c) idx = idx * static_cast<std::size_t>(spec.n()) + static_cast<std::size_t>(v);
  return idx;
}

DenseMatrix dense_laplacian(const GridSpec& spec) {
  const std::size_t size = spec.size();
  const double inv_h2 = 1.0 / (spec.h() * spec.h());
  DenseMatrix a(size, size);
  for (std::size_t row = 0; row < size; ++row) {
    const auto c = coordinates(spec, row);
    a(row, row) = 2.0 * spec.dim() * inv_h2;
    for (std::size_t axis = 0; axis < c.size(); ++axis) {
      for (int step : {-1, 1}) {
        auto nb = c;
        nb[axis] += step;
        if (nb[axis] < 0 || nb[axis] >= spec.n()) continue;
        a(row, flat_index(spec, nb)) = -inv_h2;
      }
    }
  }
  return a;
}

DenseMatrix dense_mass(const GridSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n());
  const double h = spec.h();
  DenseMatrix m1(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m1(i, i) = 4.0 * h / 6.0;
    if (i > 0) m1(i, i - 1) = h / 6.0;
    if (i + 1 < n) m1(i, i + 1) = h / 6.0;
  }
  DenseMatrix m = m1;
  for (int a = 1; a < spec.dim(); ++a) m = kronecker(m, m1);

  const double scale = spec.dim() == 1 ? h : spec.dim() == 2 ? 1.0 : 1.0 / h;
  DenseMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) = scale * m(i, j);
  }
  return scaled;
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw DimensionError("dense multiply: " + std::to_string(x.size()) + " entries for " +
                         std::to_string(cols_) + " columns");
  }
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += entries_[i * cols_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

double DenseMatrix::asymmetry() const {
  double worst = 0.0;
  double largest = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      largest = std::max(largest, std::abs((*this)(i, j)));
      if (j < rows_ && i < cols_) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return largest > 0.0 ? worst / largest : 0.0;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("dense product: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          c(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return c;
}

DenseMatrix assemble_dense(OperatorKind kind, const GridSpec& spec) {
  require_cap(spec);
  switch (kind) {
    case OperatorKind::kLaplacian:
      return dense_laplacian(spec);
    case OperatorKind::kMass:
      return dense_mass(spec);
    case OperatorKind::kPreconditioned:
      return dense_mass(spec) * dense_laplacian(spec);
  }
  throw DomainError("unknown operator kind");
}

std::vector<double> sine_vector(const GridSpec& spec, std::span<const int> k) {
  if (k.size() != static_cast<std::size_t>(spec.dim())) {
    throw DomainError("sine vector mode has the wrong number of indices");
  }
  std::vector<double> v(spec.size());
  const double h = spec.h();
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const auto c = coordinates(spec, idx);
    double prod = 1.0;
    for (std::size_t a = 0; a < c.size(); ++a) {
      prod *= std::sin((c[a] + 1) * k[a] * std::numbers::pi * h);
    }
    v[idx] = prod;
  }
  return v;
}

std::vector<RayleighEntry> rayleigh_eigenvalues(OperatorKind kind, const GridSpec& spec) {
  const auto d = assemble_dense(kind, spec);
  std::vector<RayleighEntry> out;
  out.reserve(spec.size());
  for (std::size_t idx = 0; idx < spec.size(); ++idx) {
    auto mode = coordinates(spec, idx);
    for (int& m : mode) ++m;
    const auto v = sine_vector(spec, mode);
    const auto dv = d.multiply(v);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      num += dv[i] * v[i];
      den += v[i] * v[i];
    }
    const double lambda = num / den;
    std::vector<double> res(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) res[i] = dv[i] - lambda * v[i];
    out.push_back({std::move(mode), lambda, norm(res) / std::sqrt(den)});
  }
  return out;
}

}  // namespace massprec::oracle
