#include "pentablock/pentablock.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

namespace pentablock {

namespace {

constexpr double kDegenerateTol = 1e-14;
constexpr double kBetaClamp = 1e-14;

// u from a precomputed beta with |beta| <= 1.
double u_from_beta(Complex s, Complex b) {
  const double root = std::sqrt(std::max(0.0, 1.0 - std::norm(b)));
  const Complex inner = 1.0 - 0.5 * s * std::conj(b) / (1.0 + root);
  return -2.0 * std::log(std::abs(inner));
}

Complex beta_unchecked(const Point2& pt) {
  const BaseTerms parts = base_terms(pt);
  return parts.numer / parts.denom;
}

}  // namespace

Complex beta(const Point2& pt) {
  const BaseTerms parts = base_terms(pt);
  if (std::abs(parts.denom) < kDegenerateTol) {
    throw Error(ErrorKind::DegenerateBase, "beta is undefined for |p| = 1");
  }
  return parts.numer / parts.denom;
}

double u_potential(const Point2& pt) {
  const BaseTerms parts = base_terms(pt);
  if (std::abs(parts.denom) < kDegenerateTol) {
    throw Error(ErrorKind::DegenerateBase, "beta is undefined for |p| = 1");
  }
  // 1 - |beta|^2 as a product of two factors; only D - |N| cancels.
  const double n = std::abs(parts.numer);
  const double d = std::abs(parts.denom);
  const double gap = (d - n) * (d + n) / (d * d);
  if (gap < -kBetaClamp) {
    throw Error(ErrorKind::OutsideBase, "|beta| > 1: point lies outside the closed base");
  }
  const Complex b = parts.numer / parts.denom;
  const double root = std::sqrt(std::max(0.0, gap));
  const Complex inner = 1.0 - 0.5 * pt.s * std::conj(b) / (1.0 + root);
  return -2.0 * std::log(std::abs(inner));
}

double fibre_bound(const Point2& pt) { return std::exp(-u_potential(pt)); }

double radius_via_parametrization(Complex lambda1, Complex lambda2) {
  const double r1 = std::sqrt(std::max(0.0, 1.0 - std::norm(lambda1)));
  const double r2 = std::sqrt(std::max(0.0, 1.0 - std::norm(lambda2)));
  return 0.5 * std::abs(1.0 - lambda1 * std::conj(lambda2)) + 0.5 * r1 * r2;
}

std::string_view to_string(PentaVerdict v) {
  switch (v) {
    case PentaVerdict::Interior: return "Interior";
    case PentaVerdict::SmoothBoundary: return "SmoothBoundary";
    case PentaVerdict::LeviFlatBoundary: return "LeviFlatBoundary";
    case PentaVerdict::OverShilov: return "OverShilov";
    case PentaVerdict::Exterior: return "Exterior";
  }
  return "Unknown";
}

PentaClassification penta_classify(const Point3& pt, double tol) {
  const G2Classification base = g2_classify(pt.base(), tol);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (!is_finite(pt.a) || base.verdict == G2Verdict::Exterior) {
    return {PentaVerdict::Exterior, nan, base, false};
  }

  const double a2 = std::norm(pt.a);
  if (base.shilov()) {
    // u degenerates (0/0) here; the fibre radius comes from the roots.
    const auto [l1, l2] = solve_quadratic_roots(pt.s, pt.p);
    const double r = radius_via_parametrization(l1, l2);
    const double defect = a2 - r * r;
    const bool inside = defect <= tol;
    return {inside ? PentaVerdict::OverShilov : PentaVerdict::Exterior, defect, base, inside};
  }

  double bound;
  if (base.interior()) {
    bound = std::exp(-u_potential(pt.base()));
  } else {
    // Continuous extension to the base boundary band: |beta| is 1 there.
    Complex b = beta_unchecked(pt.base());
    if (std::abs(b) > 1.0) b /= std::abs(b);
    bound = std::exp(-u_from_beta(pt.s, b));
  }
  const double defect = a2 - bound;

  if (base.interior()) {
    if (defect < -tol) return {PentaVerdict::Interior, defect, base, true};
    if (std::abs(defect) <= tol) return {PentaVerdict::SmoothBoundary, defect, base, true};
    return {PentaVerdict::Exterior, defect, base, false};
  }
  if (defect < -tol) return {PentaVerdict::LeviFlatBoundary, defect, base, true};
  return {PentaVerdict::Exterior, defect, base, defect <= tol};
}

bool in_pentablock(const Point3& pt) {
  if (!is_finite(pt) || !(g2_defect(pt.base()) < 0.0)) return false;
  // Rounding can put |p| = 1 points a hair inside the base; they are boundary points.
  if (std::abs(base_terms(pt.base()).denom) < kDegenerateTol) return false;
  return std::norm(pt.a) < fibre_bound(pt.base());
}

namespace {

Matrix2 witness_matrix(const Point3& pt, Complex a11) {
  const Complex a22 = pt.s - a11;
  return {a11, (a11 * a22 - pt.p) / pt.a, pt.a, a22};
}

double witness_residual(const Point3& pt, const Matrix2& m) {
  return std::max({std::abs(m.a21 - pt.a), std::abs(m.trace() - pt.s), std::abs(m.det() - pt.p)});
}

struct Objective {
  const Point3* pt;
};

double gsl_objective(const gsl_vector* x, void* params) {
  const auto* obj = static_cast<const Objective*>(params);
  const Complex a11{gsl_vector_get(x, 0), gsl_vector_get(x, 1)};
  const double norm = operator_norm(witness_matrix(*obj->pt, a11));
  return std::isfinite(norm) ? norm : std::numeric_limits<double>::max();
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

// Nelder-Mead refinement from one start.
std::pair<Complex, double> refine(const Point3& pt, Complex start, const WitnessOptions& opt) {
  Objective obj{&pt};
  gsl_multimin_function fn{&gsl_objective, 2, &obj};

  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(2));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(2));
  gsl_vector_set(x.get(), 0, start.real());
  gsl_vector_set(x.get(), 1, start.imag());
  gsl_vector_set_all(step.get(), opt.grid_step);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2));
  gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), step.get());

  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver.get()), opt.simplex_size) ==
        GSL_SUCCESS) {
      break;
    }
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(solver.get());
  return {Complex{gsl_vector_get(best, 0), gsl_vector_get(best, 1)},
          gsl_multimin_fminimizer_minimum(solver.get())};
}

}  // namespace

MatrixWitness matrix_witness(const Point3& pt, const WitnessOptions& opt) {
  if (!is_finite(pt)) throw Error(ErrorKind::InvalidArgument, "non-finite point");

  if (std::abs(pt.a) < kDegenerateTol) {
    const auto [l1, l2] = solve_quadratic_roots(pt.s, pt.p);
    const Matrix2 m{l1, 0.0, pt.a, l2};
    return {m, operator_norm(m), witness_residual(pt, m)};
  }

  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;

  struct Candidate {
    Complex a11;
    double norm;
  };
  std::vector<Candidate> grid;
  const int n = static_cast<int>(std::lround(2.0 * opt.grid_half_width / opt.grid_step));
  grid.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Complex a11{-opt.grid_half_width + i * opt.grid_step,
                        -opt.grid_half_width + j * opt.grid_step};
      const double norm = operator_norm(witness_matrix(pt, a11));
      if (std::isfinite(norm)) grid.push_back({a11, norm});
    }
  }
  const auto starts = std::min<std::size_t>(static_cast<std::size_t>(std::max(opt.starts, 1)),
                                            grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Candidate& x, const Candidate& y) { return x.norm < y.norm; });

  Complex best_a11 = grid.empty() ? Complex{} : grid.front().a11;
  double best_norm = grid.empty() ? INFINITY : grid.front().norm;
  for (std::size_t k = 0; k < starts; ++k) {
    const auto [a11, norm] = refine(pt, grid[k].a11, opt);
    if (norm < best_norm) {
      best_norm = norm;
      best_a11 = a11;
    }
  }

  const Matrix2 m = witness_matrix(pt, best_a11);
  MatrixWitness w{m, operator_norm(m), witness_residual(pt, m)};
  if (!(w.residual < opt.residual_limit)) {
    throw WitnessFailure("witness residual above limit", w);
  }
  return w;
}

Point3 scale_quasi_homogeneous(const Point3& pt, double r) {
  return {r * pt.a, r * pt.s, r * r * pt.p};
}

double minkowski_functional(const Point3& pt) {
  if (!is_finite(pt)) throw Error(ErrorKind::InvalidArgument, "non-finite point");
  if (pt.a == Complex{} && pt.s == Complex{} && pt.p == Complex{}) {
    throw Error(ErrorKind::ZeroPoint, "the Minkowski functional is not defined at the origin");
  }
  // inside(t): pt / t lies in the domain. Monotone in t because the domain
  // is (1,1,2)-balanced.
  auto inside = [&](double t) { return in_pentablock(scale_quasi_homogeneous(pt, 1.0 / t)); };

  double hi = 1.0;
  while (!inside(hi)) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw Error(ErrorKind::InvalidArgument, "bracket expansion failed");
  }
  double lo = hi;
  do {
    lo *= 0.5;
    if (lo < std::numeric_limits<double>::min()) return 0.0;
  } while (inside(lo));

  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

bool ellipsoid_membership(Complex a, Complex s) { return std::abs(a) + 0.25 * std::norm(s) < 1.0; }

std::pair<Complex, Complex> slice_to_ellipsoid(const Point3& pt, double tol) {
  if (!royal_membership(pt.base(), tol)) {
    throw Error(ErrorKind::NotOnRoyalSlice, "s^2 != 4p: point is off the royal slice");
  }
  return {pt.a, pt.s};
}

}  // namespace pentablock
