#pragma once

#include <optional>
#include <string_view>

#include "pentablock/blaschke.hpp"
#include "pentablock/complex_core.hpp"

namespace pentablock {

/// Strata of the closed symmetrized bidisc, most specific first:
/// RoyalBoundary ⊂ ShilovBoundary ⊂ Boundary.
enum class G2Verdict { Interior, Boundary, ShilovBoundary, RoyalBoundary, Exterior };

std::string_view to_string(G2Verdict v);

struct G2Classification {
  G2Verdict verdict;
  /// |s - conj(s) p| + |p|^2 - 1; negative inside.
  double defect;

  bool interior() const { return verdict == G2Verdict::Interior; }
  bool on_boundary() const {
    return verdict != G2Verdict::Interior && verdict != G2Verdict::Exterior;
  }
  bool shilov() const {
    return verdict == G2Verdict::ShilovBoundary || verdict == G2Verdict::RoyalBoundary;
  }
};

struct RoyalPoint {
  Complex lambda;
};

/// (l1 + l2, l1 l2).
Point2 sigma(Complex lambda1, Complex lambda2);

/// 1 - |p|^2 and s - conj(s) p, evaluated in compensated arithmetic so both
/// keep full relative precision near the boundary.
struct BaseTerms {
  double denom;
  Complex numer;
};
BaseTerms base_terms(const Point2& pt);

/// |s - conj(s) p| + |p|^2 - 1.
double g2_defect(const Point2& pt);

/// Boundary band |defect| <= tol with |s| <= 2 + tol. On that band the
/// Shilov test is ||p| - 1| <= tol: over the closure both roots of
/// z^2 - s z + p lie in the closed disc, so both sit on the circle exactly
/// when their product does. Royal additionally needs |s^2 - 4p| < tol.
G2Classification g2_classify(const Point2& pt, double tol = kExactTol);

/// lambda = s/2 when (s, p) lies on the royal variety within tol.
std::optional<RoyalPoint> royal_membership(const Point2& pt, double tol = kExactTol);

/// (B(l1) + B(l2), B(l1) B(l2)) where {l1, l2} solve z^2 - s z + p = 0.
/// Throws ExteriorInput if pt classifies Exterior at tol.
Point2 lift_blaschke_to_g2(const BlaschkeProduct& b, const Point2& pt,
                           double tol = kPropagatedTol);

/// Action of a disc automorphism on G2, evaluated through the symmetrized
/// closed form (no root solve). Its denominator is 1 - conj(alpha) s + conj(alpha)^2 p.
Point2 g2_automorphism_apply(const MoebiusMap& m, const Point2& pt, double tol = kPropagatedTol);

/// Same action evaluated through the roots; used as the reference path.
Point2 g2_automorphism_apply_via_roots(const MoebiusMap& m, const Point2& pt,
                                       double tol = kPropagatedTol);

}  // namespace pentablock
