#include "pentablock/automorphisms.hpp"

#include <cmath>

#include "pentablock/sampling.hpp"

namespace pentablock {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kCheckTol = 1e-12;
const Point3 kProbe{0.1, 0.0, 0.0};

Complex unimodular(Complex z) { return z / std::abs(z); }

}  // namespace

PentaAutomorphism::PentaAutomorphism(Complex omega, MoebiusMap nu) : omega_(omega), nu_(nu) {
  if (!is_finite(omega) || std::abs(std::abs(omega) - 1.0) > kUnimodularTol) {
    throw Error(ErrorKind::InvalidArgument, "omega must be unimodular");
  }
}

Complex PentaAutomorphism::fibre_factor(const Point2& base) const {
  const Complex ca = std::conj(nu_.alpha());
  const Complex den = 1.0 - ca * base.s + ca * ca * base.p;
  if (std::abs(den) < 1e-14) {
    throw Error(ErrorKind::DenominatorDegenerate, "1 - conj(alpha) s + conj(alpha)^2 p vanishes");
  }
  return omega_ * (1.0 - std::norm(nu_.alpha())) / den;
}

Point3 penta_aut_eval(const PentaAutomorphism& f, const Point3& pt) {
  const Complex a = f.fibre_factor(pt.base()) * pt.a;
  const Complex eta = f.nu().eta();
  const Complex alpha = f.nu().alpha();
  const Complex ca = std::conj(alpha);
  const Complex den = 1.0 - ca * pt.s + ca * ca * pt.p;
  const Complex s = eta * ((pt.s - 2.0 * alpha) - ca * (2.0 * pt.p - alpha * pt.s)) / den;
  const Complex p = eta * eta * (pt.p - alpha * pt.s + alpha * alpha) / den;
  return {a, s, p};
}

Point3 penta_aut_apply(const PentaAutomorphism& f, const Point3& pt, double tol) {
  if (!is_finite(pt) || !penta_classify(pt, tol).in_closure) {
    throw Error(ErrorKind::ExteriorInput, "point lies outside the closed pentablock");
  }
  return penta_aut_eval(f, pt);
}

PentaAutomorphism penta_aut_compose(const PentaAutomorphism& f, const PentaAutomorphism& g) {
  const MoebiusMap nu = f.nu().compose(g.nu());
  // The first component at (0.1, 0, 0) is 0.1 omega' (1 - |alpha'|^2).
  const Complex image = penta_aut_eval(f, penta_aut_eval(g, kProbe)).a;
  const Complex omega = image / (kProbe.a * (1.0 - std::norm(nu.alpha())));
  return {unimodular(omega), nu};
}

PentaAutomorphism penta_aut_inverse(const PentaAutomorphism& f) {
  // The first component is linear in omega; solve f(g(probe)) = probe.
  const PentaAutomorphism unit_omega(1.0, f.nu().inverse());
  const Complex image = penta_aut_eval(f, penta_aut_eval(unit_omega, kProbe)).a;
  return {unimodular(kProbe.a / image), unit_omega.nu()};
}

CheckReport check_fiber_preservation(const PentaAutomorphism& f, std::size_t samples,
                                     std::uint64_t seed) {
  Rng rng = Rng(seed).substream("fiber-preservation");
  CheckReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point3 first = sample_penta_interior(rng);
    const double scale = rng.uniform();
    const Point3 second{first.a * scale, first.s, first.p};
    const Point3 x = penta_aut_eval(f, first);
    const Point3 y = penta_aut_eval(f, second);
    const double dev = std::max(std::abs(x.s - y.s), std::abs(x.p - y.p));
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.cases;
  }
  report.passed = report.max_deviation < kCheckTol;
  return report;
}

CheckReport check_origin_fixing_form(const PentaAutomorphism& f, std::size_t samples,
                                     std::uint64_t seed) {
  if (f.nu().alpha() != Complex{}) {
    throw Error(ErrorKind::PreconditionViolated,
                "the origin-fibre form applies only to automorphisms with alpha = 0");
  }
  Rng rng = Rng(seed).substream("slice-rigidity");
  CheckReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    const Point3 pt = sample_royal_slice(rng);
    const auto [a, s] = slice_to_ellipsoid(pt);
    const auto [a_img, s_img] = slice_to_ellipsoid(penta_aut_apply(f, pt));
    const double dev =
        std::max(std::abs(a_img - f.omega() * a), std::abs(s_img - f.nu().eta() * s));
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.cases;
  }
  report.passed = report.max_deviation < kCheckTol;
  return report;
}

}  // namespace pentablock
