#pragma once

#include <algorithm>
#include <cstdint>

#include "pentablock/blaschke.hpp"
#include "pentablock/pentablock.hpp"

namespace pentablock {

/// f(a, s, p) = (omega (1 - |alpha|^2) a / (1 - conj(alpha) s + conj(alpha)^2 p),
///               nu acting on (s, p))
/// with nu(l) = eta (l - alpha) / (1 - conj(alpha) l) and |omega| = 1.
class PentaAutomorphism {
public:
  PentaAutomorphism() = default;
  PentaAutomorphism(Complex omega, MoebiusMap nu);
  PentaAutomorphism(Complex omega, Complex eta, Complex alpha)
      : PentaAutomorphism(omega, MoebiusMap(eta, alpha)) {}

  static PentaAutomorphism identity() { return {}; }

  Complex omega() const { return omega_; }
  const MoebiusMap& nu() const { return nu_; }

  /// Coefficient of a in the first component at base point (s, p).
  Complex fibre_factor(const Point2& base) const;

private:
  Complex omega_{1.0, 0.0};
  MoebiusMap nu_;
};

/// Throws ExteriorInput unless pt lies in the closed pentablock at tol, and
/// DenominatorDegenerate if 1 - conj(alpha) s + conj(alpha)^2 p vanishes.
Point3 penta_aut_apply(const PentaAutomorphism& f, const Point3& pt, double tol = kPropagatedTol);

/// Evaluates the formula without the domain check.
Point3 penta_aut_eval(const PentaAutomorphism& f, const Point3& pt);

/// f ∘ g. The Moebius parts compose directly; omega is fixed by matching the
/// first component at the probe (0.1, 0, 0).
PentaAutomorphism penta_aut_compose(const PentaAutomorphism& f, const PentaAutomorphism& g);

PentaAutomorphism penta_aut_inverse(const PentaAutomorphism& f);

struct CheckReport {
  std::size_t cases = 0;
  double max_deviation = 0.0;
  bool passed = true;
};

/// Applies f to two points of each sampled fibre and compares the base
/// components of the images. Passes when every deviation is below 1e-12.
CheckReport check_fiber_preservation(const PentaAutomorphism& f, std::size_t samples,
                                     std::uint64_t seed = 0);

/// For alpha = 0, checks that f restricted to the royal slice acts on the
/// ellipsoid coordinates as (a, s) -> (omega a, eta s). Throws
/// PreconditionViolated when alpha != 0.
CheckReport check_origin_fixing_form(const PentaAutomorphism& f, std::size_t samples = 1000,
                                     std::uint64_t seed = 0);

/// Largest distance between `candidate` and `reference` (a callable
/// Point3 -> Point3) over `points`. Used to validate recovered parameters.
template <typename Reference, typename Points>
double fit_residual(const PentaAutomorphism& candidate, Reference&& reference,
                    const Points& points) {
  double worst = 0.0;
  for (const Point3& pt : points) {
    const Point3 lhs = penta_aut_eval(candidate, pt);
    const Point3 rhs = reference(pt);
    worst = std::max({worst, std::abs(lhs.a - rhs.a), std::abs(lhs.s - rhs.s),
                      std::abs(lhs.p - rhs.p)});
  }
  return worst;
}

}  // namespace pentablock
