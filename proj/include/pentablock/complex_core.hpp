#pragma once

#include <array>
#include <complex>
#include <utility>

namespace pentablock {

using Complex = std::complex<double>;

// Default tolerances. Algebraic identities are checked at kIdentityTol; the
// boundary band is kExactTol for exact inputs and kPropagatedTol for points
// that went through sampling or a map evaluation.
inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kExactTol = 1e-9;
inline constexpr double kPropagatedTol = 1e-6;

struct Point2 {
  Complex s;
  Complex p;
};

struct Point3 {
  Complex a;
  Complex s;
  Complex p;

  Point2 base() const { return {s, p}; }
};

bool is_finite(Complex z);
bool is_finite(const Point2& pt);
bool is_finite(const Point3& pt);

/// 2x2 complex matrix, row-major.
struct Matrix2 {
  Complex a11, a12, a21, a22;

  Complex trace() const { return a11 + a22; }
  Complex det() const { return a11 * a22 - a12 * a21; }
  Matrix2 adjoint() const;
  Matrix2 operator*(const Matrix2& rhs) const;
};

/// Largest singular value, from the closed form
/// ||A||^2 = (F + sqrt(F^2 - 4|det A|^2)) / 2 with F the squared Frobenius norm.
double operator_norm(const Matrix2& m);

/// (a21, tr A, det A).
Point3 penta_from_matrix(const Matrix2& m);

/// Roots of z^2 - s z + p. The pair is unordered; use canonical_order()
/// only for display.
struct RootPair {
  Complex first;
  Complex second;
};

RootPair solve_quadratic_roots(Complex s, Complex p);

/// Sorts the pair by (re, im).
RootPair canonical_order(RootPair roots);

}  // namespace pentablock
