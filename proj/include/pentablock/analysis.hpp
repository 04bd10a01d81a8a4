#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>

#include "pentablock/complex_core.hpp"

namespace pentablock {

/// Real-valued function of k complex variables.
using RealFunction = std::function<double(const Eigen::VectorXcd&)>;

struct WirtingerHessian {
  /// entry (i, j) = d^2 f / dz_i dconj(z_j); Hermitian.
  Eigen::MatrixXcd matrix;
  double step;
};

/// Mixed Wirtinger second derivatives from central differences on the real
/// coordinates (x_j, y_j), combined as
///   d^2 f / dz_i dconj(z_j) = (f_{x_i x_j} + f_{y_i y_j} + i (f_{x_i y_j} - f_{y_i x_j})) / 4.
/// Second order in `step`; the output is Hermitian-symmetrized. Throws
/// EvaluationDomain if f throws or returns a non-finite value on the stencil.
WirtingerHessian wirtinger_mixed_second(const RealFunction& f, const Eigen::VectorXcd& point,
                                        double step = 1e-4);

/// df/dz_j = (f_x - i f_y) / 2 by central differences of order 2 or 4.
Eigen::VectorXcd wirtinger_gradient(const RealFunction& f, const Eigen::VectorXcd& point,
                                    double step = 1e-4, int order = 2);

/// Largest singular value of the mixed Hessian; zero for pluriharmonic f.
double pluriharmonicity_defect(const RealFunction& f, const Eigen::VectorXcd& point,
                               double step = 1e-4);

/// u(s, p) as a function of two complex variables.
double u_of(const Eigen::VectorXcd& z);

/// rho(a, s, p) = |a|^2 - e^{-u(s, p)}: defining function of the smooth part.
double smooth_part_defining_function(const Eigen::VectorXcd& z);

/// rho(a, s, p) = |s - conj(s) p| + |p|^2 - 1: defining function of the base
/// boundary, smooth away from the Shilov boundary.
double base_boundary_defining_function(const Eigen::VectorXcd& z);

Eigen::VectorXcd to_vector(const Point3& pt);

struct LeviReport {
  Point3 point;
  std::array<Eigen::Vector3cd, 2> tangent_basis;
  /// Ascending by value.
  std::array<double, 2> restricted_eigenvalues;
  int rank_estimate;
  /// max_k |sum_j drho/dz_j v_kj| over the tangent basis.
  double tangent_defect;
};

inline constexpr double kLeviRankTol = 1e-3;

/// Levi form of |a|^2 - e^{-u} restricted to the complex tangent space at a
/// point of the smooth boundary part. The rank counts eigenvalues above
/// rank_tol times the largest magnitude. `step` is the largest difference
/// step; it is capped by the local length scale (distance to the base
/// boundary and fibre radius) and refined by Ridders extrapolation.
/// Throws NotOnSmoothBoundary unless the point classifies SmoothBoundary at
/// 1e-8, DegenerateGradient when the complex gradient is below 1e-10.
LeviReport levi_form_on_boundary(const Point3& pt, double step = 1e-4,
                                 double rank_tol = kLeviRankTol);

/// Largest magnitude of the Levi form of the base boundary defining function
/// restricted to span{(1, 0, 0), (0, 1, zeta)}, where zeta is the unimodular
/// root of z^2 - s z + p. The second vector is tangent to the analytic disc
/// l -> (a, sigma(zeta, l)) inside the Levi-flat part. `step` is handled as
/// in levi_form_on_boundary, with the distance to the Shilov boundary as the
/// length scale. Throws NotOnLeviFlat
/// unless the point classifies LeviFlatBoundary at 1e-8.
double levi_flat_check_d2(const Point3& pt, double step = 1e-4);

}  // namespace pentablock
