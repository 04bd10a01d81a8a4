#include "pentablock/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pentablock/error.hpp"
#include "pentablock/pentablock.hpp"

namespace pentablock {

namespace {

constexpr double kStratumTol = 1e-8;

// f evaluated with real coordinate `k` (x_j = 2j, y_j = 2j+1) shifted.
class Stencil {
public:
  Stencil(const RealFunction& f, const Eigen::VectorXcd& point) : f_(f), point_(point) {}

  double at(int k1, double h1, int k2 = -1, double h2 = 0.0) const {
    Eigen::VectorXcd z = point_;
    shift(z, k1, h1);
    if (k2 >= 0) shift(z, k2, h2);
    double value;
    try {
      value = f_(z);
    } catch (const std::exception& e) {
      throw Error(ErrorKind::EvaluationDomain, std::string("function failed on stencil: ") + e.what());
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::EvaluationDomain, "function is not finite on the stencil");
    }
    return value;
  }

private:
  static void shift(Eigen::VectorXcd& z, int k, double h) {
    z[k / 2] += (k % 2 == 0) ? Complex{h, 0.0} : Complex{0.0, h};
  }

  const RealFunction& f_;
  const Eigen::VectorXcd& point_;
};

Eigen::MatrixXd real_hessian(const RealFunction& f, const Eigen::VectorXcd& point, double h) {
  const Stencil st(f, point);
  const int n = 2 * static_cast<int>(point.size());
  const double f0 = st.at(0, 0.0);
  Eigen::MatrixXd r(n, n);
  for (int i = 0; i < n; ++i) {
    r(i, i) = (st.at(i, h) - 2.0 * f0 + st.at(i, -h)) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      r(i, j) = (st.at(i, h, j, h) - st.at(i, h, j, -h) - st.at(i, -h, j, h) +
                 st.at(i, -h, j, -h)) /
                (4.0 * h * h);
      r(j, i) = r(i, j);
    }
  }
  return r;
}

// Ridders' extrapolation over a shrinking step for a central-difference
// estimate `eval(h)` whose error expands in even powers of h. Returns the
// tableau entry with the smallest error estimate, which balances truncation
// against roundoff without a hand-tuned step.
// The first step is halved while its stencil leaves the domain.
template <class Eval>
auto ridders(Eval&& eval, double h0) -> decltype(eval(h0)) {
  using Value = decltype(eval(h0));
  constexpr int kLevels = 16;
  constexpr int kBackoffs = 40;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  auto gap = [](const Value& x, const Value& y) { return (x - y).cwiseAbs().maxCoeff(); };

  std::vector<std::vector<Value>> table(kLevels, std::vector<Value>(kLevels));
  double h = h0;
  for (int k = 0;; ++k) {
    try {
      table[0][0] = eval(h);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EvaluationDomain || k == kBackoffs) throw;
      h *= 0.5;
    }
  }
  Value best = table[0][0];
  double err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kLevels; ++i) {
    h /= kShrink;
    table[0][i] = eval(h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      table[j][i] = (fac * table[j - 1][i] - table[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double e = std::max(gap(table[j][i], table[j - 1][i]),
                                gap(table[j][i], table[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = table[j][i];
      }
    }
    if (gap(table[i][i], table[i - 1][i - 1]) >= 2.0 * err) break;
  }
  return best;
}

// The stratum edges (base boundary, Shilov corner) make the higher
// derivatives grow without bound, so the fixed-step schemes are refined here.
Eigen::MatrixXcd refined_hessian(const RealFunction& f, const Eigen::VectorXcd& z, double h0) {
  return ridders([&](double h) { return wirtinger_mixed_second(f, z, h).matrix; }, h0);
}

Eigen::VectorXcd refined_gradient(const RealFunction& f, const Eigen::VectorXcd& z, double h0) {
  return ridders([&](double h) { return wirtinger_gradient(f, z, h, 2); }, h0);
}

Eigen::Matrix2cd restrict_form(const Eigen::MatrixXcd& hessian, const Eigen::Vector3cd& v0,
                               const Eigen::Vector3cd& v1) {
  Eigen::Matrix<Complex, 3, 2> t;
  t.col(0) = v0;
  t.col(1) = v1;
  // L(v) = sum H_ij v_i conj(v_j) = v^* H^T v.
  Eigen::Matrix2cd m = t.adjoint() * hessian.transpose() * t;
  return 0.5 * (m + m.adjoint());
}

}  // namespace

WirtingerHessian wirtinger_mixed_second(const RealFunction& f, const Eigen::VectorXcd& point,
                                        double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  const Eigen::MatrixXd r = real_hessian(f, point, step);
  const auto k = point.size();
  Eigen::MatrixXcd h(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double xx = r(2 * i, 2 * j);
      const double yy = r(2 * i + 1, 2 * j + 1);
      const double xy = r(2 * i, 2 * j + 1);
      const double yx = r(2 * i + 1, 2 * j);
      h(i, j) = 0.25 * Complex{xx + yy, xy - yx};
    }
  }
  return {0.5 * (h + h.adjoint()), step};
}

Eigen::VectorXcd wirtinger_gradient(const RealFunction& f, const Eigen::VectorXcd& point,
                                    double step, int order) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  if (order != 2 && order != 4) throw Error(ErrorKind::InvalidArgument, "order must be 2 or 4");
  const Stencil st(f, point);
  auto partial = [&](int k) {
    if (order == 2) return (st.at(k, step) - st.at(k, -step)) / (2.0 * step);
    return (-st.at(k, 2.0 * step) + 8.0 * st.at(k, step) - 8.0 * st.at(k, -step) +
            st.at(k, -2.0 * step)) /
           (12.0 * step);
  };
  Eigen::VectorXcd g(point.size());
  for (Eigen::Index j = 0; j < point.size(); ++j) {
    const int x = 2 * static_cast<int>(j);
    g[j] = 0.5 * Complex{partial(x), -partial(x + 1)};
  }
  return g;
}

double pluriharmonicity_defect(const RealFunction& f, const Eigen::VectorXcd& point, double step) {
  const WirtingerHessian h = wirtinger_mixed_second(f, point, step);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.matrix, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

double u_of(const Eigen::VectorXcd& z) { return u_potential({z[0], z[1]}); }

double smooth_part_defining_function(const Eigen::VectorXcd& z) {
  return std::norm(z[0]) - fibre_bound({z[1], z[2]});
}

double base_boundary_defining_function(const Eigen::VectorXcd& z) {
  return g2_defect({z[1], z[2]});
}

Eigen::VectorXcd to_vector(const Point3& pt) {
  Eigen::VectorXcd z(3);
  z << pt.a, pt.s, pt.p;
  return z;
}

LeviReport levi_form_on_boundary(const Point3& pt, double step, double rank_tol) {
  if (penta_classify(pt, kStratumTol).verdict != PentaVerdict::SmoothBoundary) {
    throw Error(ErrorKind::NotOnSmoothBoundary, "point is not on the smooth boundary part");
  }
  const RealFunction rho = smooth_part_defining_function;
  const Eigen::VectorXcd z = to_vector(pt);
  // u loses smoothness at the base boundary, which a root reaches at the
  // circle, and the fibre radius |a| shrinks to 0 toward the Shilov corner.
  // A root moves by about dp / |l1 - l2| (by sqrt(dp) when they coincide), so
  // the base boundary is about edge * max(separation, edge) away in (s, p).
  // The largest stencil stays inside these length scales.
  const auto [l1, l2] = solve_quadratic_roots(pt.s, pt.p);
  const double edge = 1.0 - std::max(std::abs(l1), std::abs(l2));
  const double reach = edge * std::max(std::abs(l1 - l2), edge);
  step = std::min(step, 0.1 * std::min(reach, std::abs(pt.a)));

  const Eigen::Vector3cd grad = refined_gradient(rho, z, step);
  if (grad.norm() < 1e-10) throw Error(ErrorKind::DegenerateGradient, "complex gradient vanishes");

  // The complex tangent space {v : sum grad_j v_j = 0} is the Hermitian
  // orthogonal complement of conj(grad); Householder QR completes it.
  const Eigen::Vector3cd normal = grad.conjugate().normalized();
  const Eigen::Matrix3cd q = Eigen::HouseholderQR<Eigen::Vector3cd>(normal).householderQ();
  const Eigen::Vector3cd t0 = q.col(1);
  const Eigen::Vector3cd t1 = q.col(2);

  const Eigen::MatrixXcd hess = refined_hessian(rho, z, step);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(restrict_form(hess, t0, t1),
                                                      Eigen::EigenvaluesOnly);
  const Eigen::Vector2d values = eig.eigenvalues();
  const double largest = values.cwiseAbs().maxCoeff();

  LeviReport report{pt, {t0, t1}, {values[0], values[1]}, 0, 0.0};
  for (double v : values) {
    if (std::abs(v) > rank_tol * largest) ++report.rank_estimate;
  }
  report.tangent_defect =
      std::max(std::abs(grad.conjugate().dot(t0)), std::abs(grad.conjugate().dot(t1)));
  return report;
}

double levi_flat_check_d2(const Point3& pt, double step) {
  if (penta_classify(pt, kStratumTol).verdict != PentaVerdict::LeviFlatBoundary) {
    throw Error(ErrorKind::NotOnLeviFlat, "point is not on the Levi-flat boundary part");
  }
  const auto [l1, l2] = solve_quadratic_roots(pt.s, pt.p);
  const bool first_outer = std::abs(l1) > std::abs(l2);
  const Complex zeta = (first_outer ? l1 : l2) / std::abs(first_outer ? l1 : l2);
  // The defining function is not smooth across the Shilov edge, which the
  // inner root reaches at the circle; the stencil stays well clear of it.
  const double edge = 1.0 - std::abs(first_outer ? l2 : l1);
  const double h = std::min(step, 0.1 * edge);

  const Eigen::Vector3cd fibre(1.0, 0.0, 0.0);
  const Eigen::Vector3cd disc = Eigen::Vector3cd(0.0, 1.0, zeta).normalized();
  const Eigen::MatrixXcd hess =
      refined_hessian(base_boundary_defining_function, to_vector(pt), h);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(restrict_form(hess, fibre, disc),
                                                      Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace pentablock
