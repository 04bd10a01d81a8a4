#include "pentablock/bidisc.hpp"

#include <cmath>

#include "pentablock/error.hpp"

namespace pentablock {

namespace {

// Sum of terms carried in double-double.
class ExactSum {
 public:
  explicit ExactSum(double x) : hi_(x) {}
  ExactSum& add(double x) {
    const double s = hi_ + x;
    const double bb = s - hi_;
    lo_ += (hi_ - (s - bb)) + (x - bb);
    hi_ = s;
    return *this;
  }
  ExactSum& add_product(double x, double y) {
    const double h = x * y;
    return add(h).add(std::fma(x, y, -h));
  }
  double value() const { return hi_ + lo_; }

 private:
  double hi_;
  double lo_ = 0.0;
};


void require_closure(const Point2& pt, double tol) {
  if (!is_finite(pt) || g2_classify(pt, tol).verdict == G2Verdict::Exterior) {
    throw Error(ErrorKind::ExteriorInput, "point lies outside the closed symmetrized bidisc");
  }
}

}  // namespace

std::string_view to_string(G2Verdict v) {
  switch (v) {
    case G2Verdict::Interior: return "Interior";
    case G2Verdict::Boundary: return "Boundary";
    case G2Verdict::ShilovBoundary: return "ShilovBoundary";
    case G2Verdict::RoyalBoundary: return "RoyalBoundary";
    case G2Verdict::Exterior: return "Exterior";
  }
  return "Unknown";
}

Point2 sigma(Complex lambda1, Complex lambda2) { return {lambda1 + lambda2, lambda1 * lambda2}; }

BaseTerms base_terms(const Point2& pt) {
  const double sr = pt.s.real(), si = pt.s.imag(), pr = pt.p.real(), pi = pt.p.imag();
  const double d = ExactSum(1.0).add_product(-pr, pr).add_product(-pi, pi).value();
  const double nr = ExactSum(sr).add_product(-sr, pr).add_product(-si, pi).value();
  const double ni = ExactSum(si).add_product(-sr, pi).add_product(si, pr).value();
  return {d, {nr, ni}};
}

double g2_defect(const Point2& pt) {
  const BaseTerms t = base_terms(pt);
  return std::abs(t.numer) - t.denom;
}

G2Classification g2_classify(const Point2& pt, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!is_finite(pt)) return {G2Verdict::Exterior, INFINITY};

  const double defect = g2_defect(pt);
  if (defect < -tol) return {G2Verdict::Interior, defect};
  if (std::abs(defect) > tol || std::abs(pt.s) > 2.0 + tol) return {G2Verdict::Exterior, defect};

  if (std::abs(std::abs(pt.p) - 1.0) > tol) return {G2Verdict::Boundary, defect};
  if (std::abs(pt.s * pt.s - 4.0 * pt.p) < tol) return {G2Verdict::RoyalBoundary, defect};
  return {G2Verdict::ShilovBoundary, defect};
}

std::optional<RoyalPoint> royal_membership(const Point2& pt, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!is_finite(pt)) return std::nullopt;
  const Complex lambda = 0.5 * pt.s;
  if (std::abs(pt.s * pt.s - 4.0 * pt.p) < tol && std::abs(lambda) <= 1.0 + tol) {
    return RoyalPoint{lambda};
  }
  return std::nullopt;
}

Point2 lift_blaschke_to_g2(const BlaschkeProduct& b, const Point2& pt, double tol) {
  require_closure(pt, tol);
  const auto [l1, l2] = solve_quadratic_roots(pt.s, pt.p);
  const Complex b1 = b(l1);
  const Complex b2 = b(l2);
  return {b1 + b2, b1 * b2};
}

Point2 g2_automorphism_apply(const MoebiusMap& m, const Point2& pt, double tol) {
  require_closure(pt, tol);
  const Complex eta = m.eta();
  const Complex alpha = m.alpha();
  const Complex ca = std::conj(alpha);
  // (1 - conj(alpha) l1)(1 - conj(alpha) l2)
  const Complex den = 1.0 - ca * pt.s + ca * ca * pt.p;
  if (std::abs(den) < 1e-14) {
    throw Error(ErrorKind::DenominatorDegenerate, "1 - conj(alpha) s + conj(alpha)^2 p vanishes");
  }
  const Complex s = eta * ((pt.s - 2.0 * alpha) - ca * (2.0 * pt.p - alpha * pt.s)) / den;
  const Complex p = eta * eta * (pt.p - alpha * pt.s + alpha * alpha) / den;
  return {s, p};
}

Point2 g2_automorphism_apply_via_roots(const MoebiusMap& m, const Point2& pt, double tol) {
  return lift_blaschke_to_g2(BlaschkeProduct::from_moebius(m), pt, tol);
}

}  // namespace pentablock
