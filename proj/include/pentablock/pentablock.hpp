#pragma once

#include <string_view>
#include <utility>

#include "pentablock/bidisc.hpp"
#include "pentablock/complex_core.hpp"
#include "pentablock/error.hpp"

namespace pentablock {

/// beta = (s - conj(s) p) / (1 - |p|^2). Throws DegenerateBase when
/// |1 - |p|^2| < 1e-14.
Complex beta(const Point2& pt);

/// Fibre potential of the Hartogs description
///   u(s, p) = -2 log |1 - (s conj(beta) / 2) / (1 + sqrt(1 - |beta|^2))|,
/// with 1 - |beta|^2 clamped to 0 when it is within 1e-14 below zero.
/// Throws DegenerateBase (|p| = 1) or OutsideBase (|beta| > 1 beyond the clamp).
double u_potential(const Point2& pt);

/// e^{-u(s, p)}: the squared fibre radius over (s, p).
double fibre_bound(const Point2& pt);

/// (1/2)|1 - l1 conj(l2)| + (1/2) sqrt(1 - |l1|^2) sqrt(1 - |l2|^2), which is
/// e^{-u(sigma(l1, l2)) / 2}. Moduli above one are clamped to the circle.
double radius_via_parametrization(Complex lambda1, Complex lambda2);

enum class PentaVerdict { Interior, SmoothBoundary, LeviFlatBoundary, OverShilov, Exterior };

std::string_view to_string(PentaVerdict v);

struct PentaClassification {
  PentaVerdict verdict;
  /// |a|^2 - e^{-u(s, p)}; over the Shilov boundary the squared fibre radius
  /// comes from the root parametrization instead. NaN over an exterior base.
  double hartogs_defect;
  G2Classification base;
  /// True for every point of the closed pentablock, including the edge
  /// |a|^2 = e^{-u} over the base boundary, which is reported as Exterior
  /// because it belongs to neither boundary stratum.
  bool in_closure;

  bool interior() const { return verdict == PentaVerdict::Interior; }
};

/// Stratifies C^3 into the interior, the smooth part (base interior,
/// |a|^2 = e^{-u}), the Levi-flat part (base boundary off the Shilov
/// boundary, |a|^2 < e^{-u}), points over the Shilov boundary, and the rest.
/// On the base boundary u is the same closed form with beta pushed onto the
/// circle, i.e. its continuous extension.
PentaClassification penta_classify(const Point3& pt, double tol = kExactTol);

/// Strict membership (no tolerance band).
bool in_pentablock(const Point3& pt);

struct MatrixWitness {
  Matrix2 matrix;
  double norm;
  double residual;
};

struct WitnessOptions {
  double grid_half_width = 2.0;
  double grid_step = 0.1;
  int starts = 3;
  int max_iterations = 200;
  double simplex_size = 1e-10;
  double residual_limit = 1e-9;
};

/// Thrown when no witness meets the residual limit; carries the best one.
class WitnessFailure : public Error {
public:
  WitnessFailure(const std::string& what, MatrixWitness best)
      : Error(ErrorKind::OptimizerFailure, what), best_(best) {}
  const MatrixWitness& best() const { return best_; }

private:
  MatrixWitness best_;
};

/// Smallest-norm matrix A with (a21, tr A, det A) = pt, searched over the
/// free entry a11 (a22 = s - a11, a12 = (a11 a22 - p) / a). For a = 0 the
/// diagonal matrix of the roots is returned. The norm is below one exactly
/// when pt lies in the pentablock.
MatrixWitness matrix_witness(const Point3& pt, const WitnessOptions& options = {});

/// Gauge of the (1,1,2)-balanced structure: the t > 0 with
/// (a/t, s/t, p/t^2) on the boundary. Throws ZeroPoint at the origin.
double minkowski_functional(const Point3& pt);

/// (r a, r s, r^2 p).
Point3 scale_quasi_homogeneous(const Point3& pt, double r);

/// |a| + |s|^2 / 4 < 1.
bool ellipsoid_membership(Complex a, Complex s);

/// Projects a point of the royal slice {(a, 2l, l^2)} to (a, s). Throws
/// NotOnRoyalSlice when s^2 != 4p within tol.
std::pair<Complex, Complex> slice_to_ellipsoid(const Point3& pt, double tol = kExactTol);

}  // namespace pentablock
