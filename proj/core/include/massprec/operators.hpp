#pragma once

#include <span>

#include "massprec/grid.hpp"

namespace massprec {

// Matrix-free operators on the interior grid with homogeneous Dirichlet
// closure: neighbors outside the grid contribute zero.
//
//   A_d  the (2d+1)-point finite-difference Laplacian, scaled by 1/h^2
//   M_d  the scaled linear/bilinear/trilinear FE mass matrix:
//        M_1 = h M,  M_2 = M (x) M,  M_3 = h^-1 M (x) M (x) M,
//        with M = (h/6) tridiag(1, 4, 1)
//   T_d  = M_d A_d

GridVector apply_laplacian(const GridSpec& spec, const GridVector& u);
GridVector apply_mass(const GridSpec& spec, const GridVector& u);
GridVector apply_preconditioned(const GridSpec& spec, const GridVector& u);
GridVector apply(OperatorKind kind, const GridSpec& spec, const GridVector& u);

/// Global factor applied after the d tensor sweeps of apply_mass: h, 1, 1/h.
double mass_scale(const GridSpec& spec);

namespace kernels {

// Allocation-free forms used by the solver. `in` and `out` must both have
// spec.size() entries and must not alias.

void laplacian(const GridSpec& spec, std::span<const double> in, std::span<double> out);

/// `scratch` must hold spec.size() entries; it may not alias in or out.
void mass(const GridSpec& spec, std::span<const double> in, std::span<double> out,
          std::span<double> scratch);

/// 1D Laplacian (1/h^2)(-1, 2, -1) along a single axis.
void laplacian_along(const GridSpec& spec, int axis, std::span<const double> in,
                     std::span<double> out);

/// Unscaled 1D mass stencil (h/6)(1, 4, 1) along a single axis.
void mass_along(const GridSpec& spec, int axis, std::span<const double> in,
                std::span<double> out);

}  // namespace kernels

double dot(const GridVector& u, const GridVector& v);
double norm2(const GridVector& u);

/// alpha * u + v
GridVector axpy(double alpha, const GridVector& u, const GridVector& v);

}  // namespace massprec
