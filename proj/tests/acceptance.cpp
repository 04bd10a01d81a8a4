// Acceptance run: one PASS/FAIL line per criterion, at full case counts.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pentablock/analysis.hpp"
#include "pentablock/automorphisms.hpp"
#include "pentablock/bidisc.hpp"
#include "pentablock/pentablock.hpp"
#include "pentablock/sampling.hpp"

using namespace pentablock;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double distance(const Point3& x, const Point3& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.s - y.s), std::abs(x.p - y.p)});
}

Outcome curvature_at_origin() {
  Eigen::VectorXcd origin = Eigen::VectorXcd::Zero(2);
  auto err = [&](double h) {
    return std::abs(wirtinger_mixed_second(u_of, origin, h).matrix(0, 0).real() - 0.5);
  };
  const double e = err(1e-4);
  const double r1 = err(1e-2) / err(5e-3);
  const double r2 = err(5e-3) / err(2.5e-3);
  const bool second_order = std::abs(r1 - 4.0) < 0.4 && std::abs(r2 - 4.0) < 0.4;
  return {e < 1e-5 && second_order, fmt("|err| at 1e-4 = %.3g, halving ratios %.4g %.4g", e, r1, r2)};
}

Outcome dual_formula() {
  Rng rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const Complex l1 = rng.disc(), l2 = rng.disc();
    const double lhs = radius_via_parametrization(l1, l2);
    const double rhs = std::exp(-0.5 * u_potential(sigma(l1, l2)));
    worst = std::max(worst, std::abs(lhs - rhs));
    worst = std::max(worst, std::abs(lhs - oracle::radius(l1, l2)));
  }
  return {worst < 1e-9, fmt("max deviation %.3g over 1e5 pairs", worst)};
}

Outcome royal_identity() {
  Rng rng(1002);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex l = rng.disc();
    worst = std::max(worst, std::abs(std::exp(-0.5 * u_potential({2.0 * l, l * l})) -
                                     (1.0 - std::norm(l))));
  }
  return {worst < 1e-10, fmt("max deviation %.3g over 1e3 points", worst)};
}

// Interior labels come from contractions, exterior labels from the root
// description of the fibre radius; neither uses the Hartogs predicate.
Outcome witness_consistency() {
  Rng rng(1003);
  int agree = 0, total = 0, outside_band = 0;
  auto judge = [&](const Point3& pt, bool inside) {
    const bool witness_inside = matrix_witness(pt).norm < 1.0;
    ++total;
    if (witness_inside == inside) {
      ++agree;
    } else if (!(std::abs(penta_classify(pt, 1e-4).hartogs_defect) < 1e-4)) {
      ++outside_band;
    }
  };
  while (total < 1000) {
    Matrix2 m{rng.disc(), rng.disc(), rng.disc(), rng.disc()};
    const double k = rng.uniform(0.0, 0.999) / operator_norm(m);
    m = {k * m.a11, k * m.a12, k * m.a21, k * m.a22};
    judge(penta_from_matrix(m), true);
  }
  while (total < 2000) {
    const Point3 pt{rng.disc(1.5), rng.disc(2.0), rng.disc(1.0)};
    if (oracle::in_pentablock(pt.a, pt.s, pt.p)) continue;
    judge(pt, false);
  }
  const double rate = static_cast<double>(agree) / total;
  return {rate >= 0.999 && outside_band == 0,
          fmt("agreement %.4f, %g disagreements outside the 1e-4 band", rate, outside_band)};
}

Outcome aut_group() {
  Rng rng(1004);
  const PentaAutomorphism id;
  double law = 0.0, fit = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PentaAutomorphism f = sample_automorphism(rng);
    const PentaAutomorphism g = sample_automorphism(rng);
    const PentaAutomorphism fi = penta_aut_inverse(f);
    const PentaAutomorphism fg = penta_aut_compose(f, g);
    std::vector<Point3> pts;
    for (int j = 0; j < 100; ++j) pts.push_back(sample_penta_interior(rng));
    for (const Point3& x : pts) {
      const Point3 fx = penta_aut_eval(f, x);
      law = std::max(law, distance(penta_aut_eval(id, x), x));
      law = std::max(law, distance(penta_aut_eval(fi, fx), x));
      law = std::max(law, distance(penta_aut_eval(f, penta_aut_eval(fi, x)), x));
      law = std::max(law, distance(penta_aut_eval(fg, x), penta_aut_eval(f, penta_aut_eval(g, x))));
    }
    fit = std::max(fit, fit_residual(fg, [&](const Point3& x) {
      const auto gx = oracle::automorphism(g.omega(), g.nu().eta(), g.nu().alpha(), {x.a, x.s, x.p});
      const auto fgx = oracle::automorphism(f.omega(), f.nu().eta(), f.nu().alpha(), gx);
      return Point3{fgx.a, fgx.s, fgx.p};
    }, pts));
  }
  return {law < 1e-10 && fit < 1e-9, fmt("law deviation %.3g, fit residual %.3g", law, fit)};
}

Outcome stratum_preservation() {
  Rng rng(1005);
  double d1_worst = 0.0;
  int d2_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const PentaAutomorphism f = sample_automorphism(rng);
    const Point3 y = penta_aut_apply(f, sample_penta_d1(rng));
    d1_worst = std::max(d1_worst, std::abs(std::norm(y.a) - std::exp(-u_potential(y.base()))));
  }
  for (int i = 0; i < 1000; ++i) {
    const PentaAutomorphism f = sample_automorphism(rng);
    const auto cls = penta_classify(penta_aut_apply(f, sample_penta_d2(rng)), 1e-6);
    if (!(cls.base.verdict == G2Verdict::Boundary && cls.hartogs_defect < 0.0)) ++d2_bad;
  }
  return {d1_worst < 1e-8 && d2_bad == 0,
          fmt("smooth part deviation %.3g, %g flat-part points lost", d1_worst, d2_bad)};
}

Outcome blaschke_properness() {
  Rng rng(1006);
  double worst = 0.0, shilov = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BlaschkeProduct b = sample_blaschke(rng);
    worst = std::max(worst, std::abs(g2_defect(lift_blaschke_to_g2(b, sample_g2_boundary(rng)))));
    const Point2 img = lift_blaschke_to_g2(b, sample_g2_shilov(rng));
    shilov = std::max(shilov, std::max(std::abs(std::abs(img.p) - 1.0), std::abs(g2_defect(img))));
  }
  return {worst < 1e-8 && shilov < 1e-8,
          fmt("boundary defect %.3g, Shilov defect %.3g", worst, shilov)};
}

Outcome levi_rank() {
  Rng rng(1007);
  int points = 0, stable = 0;
  while (points < 50) {
    const Point3 pt = sample_penta_d1(rng);
    const auto [l1, l2] = solve_quadratic_roots(pt.s, pt.p);
    if (1.0 - std::max(std::abs(l1), std::abs(l2)) < 1e-4) continue;
    ++points;
    bool ok = true;
    for (double step : {1e-3, 1e-4}) {
      for (double tol : {1e-3, 1e-4}) ok = ok && levi_form_on_boundary(pt, step, tol).rank_estimate == 1;
    }
    if (ok) ++stable;
  }
  return {stable == 50, fmt("rank 1 at %g of 50 points under 4 step/tolerance pairs", stable)};
}

Outcome minkowski_law() {
  Rng rng(1008);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Point3 x{rng.disc(1.5), rng.disc(2.5), rng.disc(1.5)};
    const double r = rng.uniform(0.1, 3.0);
    const double m = minkowski_functional(x);
    worst = std::max(worst, std::abs(minkowski_functional(scale_quasi_homogeneous(x, r)) - r * m) / (r * m));
  }
  return {worst < 1e-8, fmt("max relative deviation %.3g", worst)};
}

Outcome slice_rigidity() {
  Rng rng(1009);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PentaAutomorphism f(rng.unit_circle(), rng.unit_circle(), 0.0);
    const Point3 pt = sample_royal_slice(rng);
    const auto [a, s] = slice_to_ellipsoid(pt);
    const auto [a2, s2] = slice_to_ellipsoid(penta_aut_apply(f, pt));
    worst = std::max({worst, std::abs(a2 - f.omega() * a), std::abs(s2 - f.nu().eta() * s)});
  }
  return {worst < 1e-12, fmt("max deviation %.3g over 1e3 slice points", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "curvature of u at the origin", 1, curvature_at_origin},
      {2, "dual formula agreement", 10, dual_formula},
      {3, "royal identity", 1, royal_identity},
      {4, "matrix witness consistency", 60, witness_consistency},
      {5, "automorphism group laws", 5, aut_group},
      {6, "stratum preservation", 10, stratum_preservation},
      {7, "Blaschke properness", 5, blaschke_properness},
      {8, "Levi rank", 10, levi_rank},
      {9, "Minkowski quasi-homogeneity", 10, minkowski_law},
      {10, "slice rigidity", 1, slice_rigidity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.passed && secs < c.budget_seconds;
    failures += ok ? 0 : 1;
    std::printf("%s %2d %-30s %s (%.3f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_seconds);
  }
  return failures == 0 ? 0 : 1;
}
