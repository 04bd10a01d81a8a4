#include "pentablock/blaschke.hpp"

#include <cmath>
#include <sstream>

#include "pentablock/error.hpp"

namespace pentablock {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kPoleTol = 1e-14;

void require_unimodular(Complex eta, const char* what) {
  if (!is_finite(eta) || std::abs(std::abs(eta) - 1.0) > kUnimodularTol) {
    std::ostringstream os;
    os << what << " must be unimodular, got |" << what << "| = " << std::abs(eta);
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

void require_in_disc(Complex z, const char* what) {
  if (!is_finite(z) || !(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << what << " must lie in the open unit disc, got modulus " << std::abs(z);
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

Complex factor(Complex zero, Complex lambda) {
  const Complex den = 1.0 - std::conj(zero) * lambda;
  if (std::abs(den) < kPoleTol) {
    throw Error(ErrorKind::PoleInDomain, "Moebius factor evaluated at its pole");
  }
  return (lambda - zero) / den;
}

}  // namespace

MoebiusMap::MoebiusMap(Complex eta, Complex alpha) : eta_(eta), alpha_(alpha) {
  require_unimodular(eta, "eta");
  require_in_disc(alpha, "alpha");
}

Complex MoebiusMap::operator()(Complex lambda) const { return eta_ * factor(alpha_, lambda); }

MoebiusMap MoebiusMap::inverse() const {
  // lambda = conj(eta) (w + eta alpha) / (1 + conj(eta alpha) w)
  MoebiusMap inv;
  inv.eta_ = std::conj(eta_);
  inv.alpha_ = -eta_ * alpha_;
  return inv;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& inner) const {
  // Matrix representative of eta (z - alpha) / (1 - conj(alpha) z):
  // [[eta, -eta alpha], [-conj(alpha), 1]].
  const Matrix2 outer_m{eta_, -eta_ * alpha_, -std::conj(alpha_), 1.0};
  const Matrix2 inner_m{inner.eta_, -inner.eta_ * inner.alpha_, -std::conj(inner.alpha_), 1.0};
  const Matrix2 prod = outer_m * inner_m;
  // Normalize d = 1; then c = -conj(alpha') and a = eta'.
  MoebiusMap out;
  const Complex eta = prod.a11 / prod.a22;
  out.eta_ = eta / std::abs(eta);
  out.alpha_ = -std::conj(prod.a21 / prod.a22);
  return out;
}

Complex MoebiusMap::derivative(Complex lambda) const {
  const Complex den = 1.0 - std::conj(alpha_) * lambda;
  return eta_ * (1.0 - std::norm(alpha_)) / (den * den);
}

Complex moebius_eval(const MoebiusMap& m, Complex lambda) { return m(lambda); }
MoebiusMap moebius_inverse(const MoebiusMap& m) { return m.inverse(); }
MoebiusMap moebius_compose(const MoebiusMap& outer, const MoebiusMap& inner) {
  return outer.compose(inner);
}

BlaschkeProduct::BlaschkeProduct(Complex eta, std::vector<Complex> zeros)
    : eta_(eta), zeros_(std::move(zeros)) {
  require_unimodular(eta_, "eta");
  if (zeros_.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "a Blaschke product needs at least one zero; use rotation() for constants");
  }
  for (Complex z : zeros_) require_in_disc(z, "zero");
}

BlaschkeProduct BlaschkeProduct::rotation(Complex eta) {
  require_unimodular(eta, "eta");
  BlaschkeProduct b;
  b.eta_ = eta;
  return b;
}

BlaschkeProduct BlaschkeProduct::from_moebius(const MoebiusMap& m) {
  return BlaschkeProduct(m.eta(), {m.alpha()});
}

Complex BlaschkeProduct::operator()(Complex lambda) const {
  Complex out = eta_;
  for (Complex z : zeros_) out *= factor(z, lambda);
  return out;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex lambda) { return b(lambda); }

}  // namespace pentablock
