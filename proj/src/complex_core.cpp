#include "pentablock/complex_core.hpp"

#include <algorithm>
#include <cmath>

namespace pentablock {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
bool is_finite(const Point2& pt) { return is_finite(pt.s) && is_finite(pt.p); }
bool is_finite(const Point3& pt) { return is_finite(pt.a) && is_finite(pt.s) && is_finite(pt.p); }

Matrix2 Matrix2::adjoint() const {
  return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
}

Matrix2 Matrix2::operator*(const Matrix2& rhs) const {
  return {a11 * rhs.a11 + a12 * rhs.a21, a11 * rhs.a12 + a12 * rhs.a22,
          a21 * rhs.a11 + a22 * rhs.a21, a21 * rhs.a12 + a22 * rhs.a22};
}

double operator_norm(const Matrix2& m) {
  const double frob = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
  const double det = std::abs(m.det());
  // F^2 - 4|det|^2 = (F - 2|det|)(F + 2|det|) keeps the gap accurate when the
  // singular values nearly coincide.
  const double disc = std::max(0.0, (frob - 2.0 * det) * (frob + 2.0 * det));
  return std::sqrt(0.5 * (frob + std::sqrt(disc)));
}

Point3 penta_from_matrix(const Matrix2& m) { return {m.a21, m.trace(), m.det()}; }

RootPair solve_quadratic_roots(Complex s, Complex p) {
  const Complex root = std::sqrt(s * s - 4.0 * p);
  // Pick the sign that adds magnitudes, then recover the small root from p.
  const Complex big = 0.5 * (std::real(std::conj(s) * root) >= 0.0 ? s + root : s - root);
  if (big == Complex{}) return {Complex{}, Complex{}};
  return {big, p / big};
}

RootPair canonical_order(RootPair roots) {
  auto key = [](Complex z) { return std::pair{z.real(), z.imag()}; };
  if (key(roots.second) < key(roots.first)) std::swap(roots.first, roots.second);
  return roots;
}

}  // namespace pentablock
