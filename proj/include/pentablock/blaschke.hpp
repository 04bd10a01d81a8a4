#pragma once

#include <vector>

#include "pentablock/complex_core.hpp"

namespace pentablock {

/// Disc automorphism  lambda -> eta (lambda - alpha) / (1 - conj(alpha) lambda)
/// with |eta| = 1 and |alpha| < 1.
class MoebiusMap {
public:
  /// Identity map.
  MoebiusMap() = default;

  /// Throws InvalidArgument unless |eta| = 1 to 1e-12 and |alpha| < 1.
  MoebiusMap(Complex eta, Complex alpha);

  static MoebiusMap identity() { return {}; }
  static MoebiusMap rotation(Complex eta) { return {eta, Complex{}}; }

  Complex eta() const { return eta_; }
  Complex alpha() const { return alpha_; }

  /// Valid on the closed disc. Throws PoleInDomain if the denominator
  /// vanishes, which can only happen for |lambda| > 1.
  Complex operator()(Complex lambda) const;

  MoebiusMap inverse() const;

  /// this ∘ inner. Computed through the 2x2 matrix representative and
  /// renormalized so that the result's eta is exactly unimodular.
  MoebiusMap compose(const MoebiusMap& inner) const;

  /// Derivative at lambda: eta (1 - |alpha|^2) / (1 - conj(alpha) lambda)^2.
  Complex derivative(Complex lambda) const;

private:
  Complex eta_{1.0, 0.0};
  Complex alpha_{};
};

Complex moebius_eval(const MoebiusMap& m, Complex lambda);
MoebiusMap moebius_inverse(const MoebiusMap& m);
MoebiusMap moebius_compose(const MoebiusMap& outer, const MoebiusMap& inner);

/// Finite Blaschke product eta * prod_j (lambda - z_j) / (1 - conj(z_j) lambda),
/// stored in factored form.
///
/// `BlaschkeProduct(eta, zeros)` requires at least one zero, every zero strictly
/// inside the disc. `BlaschkeProduct::rotation(eta)` builds the degree-0
/// constant product, which is the only way to get one without zeros.
class BlaschkeProduct {
public:
  BlaschkeProduct(Complex eta, std::vector<Complex> zeros);

  static BlaschkeProduct rotation(Complex eta);
  static BlaschkeProduct from_moebius(const MoebiusMap& m);

  Complex eta() const { return eta_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  std::size_t degree() const { return zeros_.size(); }

  Complex operator()(Complex lambda) const;

private:
  BlaschkeProduct() = default;

  Complex eta_{1.0, 0.0};
  std::vector<Complex> zeros_;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex lambda);

}  // namespace pentablock
