#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pentablock/error.hpp"
#include "pentablock/pentablock.hpp"
#include "pentablock/sampling.hpp"

using namespace pentablock;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("beta") {
  CHECK(beta({0, 0}) == Complex{});
  CHECK(std::abs(beta({1, 0}) - 1.0) < 1e-16);
  CHECK(std::abs(beta({0.5, 0}) - 0.5) < 1e-16);
  CHECK(kind_of([] { beta({0, 1}); }) == ErrorKind::DegenerateBase);
}

TEST_CASE("fibre potential at reference points") {
  CHECK(u_potential({0, 0}) == 0.0);
  CHECK(std::abs(u_potential({1, 0}) - 2.0 * std::log(2.0)) < 1e-15);
  CHECK(std::abs(fibre_bound({1, 0}) - 0.25) < 1e-15);

  // Roots {0.5, 0}: e^{-u/2} = 1/2 + sqrt(0.75)/2.
  const double r = oracle::radius(0.5, 0.0);
  CHECK(std::abs(r - (0.5 + 0.5 * std::sqrt(0.75))) < 1e-16);
  CHECK(std::abs(u_potential({0.5, 0}) - (-2.0 * std::log(r))) < 1e-14);
  CHECK(std::abs(u_potential({0.5, 0}) - 0.1386729283901479) < 1e-14);
  CHECK(std::abs(std::exp(-0.5 * u_potential({0.5, 0})) - 0.9330127018922193) < 1e-14);

  CHECK(kind_of([] { u_potential({0, 1}); }) == ErrorKind::DegenerateBase);
  CHECK(kind_of([] { u_potential({1.5, 0}); }) == ErrorKind::OutsideBase);
}

TEST_CASE("radius from the roots") {
  CHECK(radius_via_parametrization(0, 0) == 1.0);
  CHECK(std::abs(radius_via_parametrization(0.5, 0.5) - 0.75) < 1e-16);
  CHECK(std::abs(radius_via_parametrization(0.5, 0) - 0.9330127018922193) < 1e-15);
}

TEST_CASE("both descriptions of the fibre radius agree") {
  Rng rng(41);
  for (int i = 0; i < 20000; ++i) {
    const Complex l1 = rng.disc(), l2 = rng.disc();
    const double via_u = std::exp(-0.5 * u_potential(sigma(l1, l2)));
    CHECK(std::abs(via_u - oracle::radius(l1, l2)) < 1e-9);
  }
}

TEST_CASE("fibre radius on the royal variety") {
  Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const Complex l = rng.disc();
    CHECK(std::abs(std::exp(-0.5 * u_potential({2.0 * l, l * l})) - (1.0 - std::norm(l))) <
          1e-10);
  }
}

TEST_CASE("classification of reference points") {
  CHECK(penta_classify({0, 0, 0}).verdict == PentaVerdict::Interior);
  CHECK(penta_classify({1, 0, 0}).verdict == PentaVerdict::SmoothBoundary);
  const auto flat = penta_classify({0.3, 1, 0});
  CHECK(flat.verdict == PentaVerdict::LeviFlatBoundary);
  CHECK(std::abs(flat.hartogs_defect - (0.09 - 0.25)) < 1e-15);

  const auto shilov = penta_classify({0, 0, 1});
  CHECK(shilov.verdict == PentaVerdict::OverShilov);
  CHECK(shilov.in_closure);
  CHECK(penta_classify({0.9, 0, 1}).verdict == PentaVerdict::OverShilov);
  CHECK(penta_classify({1.1, 0, 1}).verdict == PentaVerdict::Exterior);

  const auto corner = penta_classify({0.5, 1, 0});
  CHECK(corner.verdict == PentaVerdict::Exterior);
  CHECK(corner.in_closure);

  CHECK(penta_classify({0.6, 1, 0}).verdict == PentaVerdict::Exterior);
  CHECK(penta_classify({0, 3, 0}).verdict == PentaVerdict::Exterior);
  CHECK(std::isnan(penta_classify({0, 3, 0}).hartogs_defect));
  CHECK(penta_classify({Complex(NAN), 0, 0}).verdict == PentaVerdict::Exterior);
}

TEST_CASE("membership agrees with the root-based oracle") {
  Rng rng(43);
  for (int i = 0; i < 5000; ++i) {
    const Complex a = rng.disc(1.2), s = rng.disc(2.2), p = rng.disc(1.2);
    const auto cls = penta_classify({a, s, p}, 1e-9);
    if (cls.verdict != PentaVerdict::Interior && cls.verdict != PentaVerdict::Exterior) continue;
    if (std::abs(cls.hartogs_defect) < 1e-9) continue;
    CHECK(in_pentablock({a, s, p}) == oracle::in_pentablock(a, s, p));
    CHECK(cls.interior() == oracle::in_pentablock(a, s, p));
  }
}

TEST_CASE("matrices of norm below one land inside") {
  Rng rng(44);
  for (int i = 0; i < 2000; ++i) {
    Matrix2 m{rng.disc(), rng.disc(), rng.disc(), rng.disc()};
    const double n = operator_norm(m);
    const double target = 0.999 * rng.uniform();
    const double k = target / n;
    m = {k * m.a11, k * m.a12, k * m.a21, k * m.a22};
    CHECK(in_pentablock(penta_from_matrix(m)));
  }
}

TEST_CASE("samplers land in their strata") {
  Rng rng(45);
  for (int i = 0; i < 300; ++i) {
    CHECK(penta_classify(sample_penta_interior(rng), kSampleTol).verdict == PentaVerdict::Interior);
    const Point3 d1 = sample_penta_d1(rng);
    CHECK(penta_classify(d1, kSampleTol).verdict == PentaVerdict::SmoothBoundary);
    CHECK(std::abs(std::norm(d1.a) - fibre_bound(d1.base())) < 1e-8);
    CHECK(penta_classify(sample_penta_d2(rng), kSampleTol).verdict ==
          PentaVerdict::LeviFlatBoundary);
    CHECK(penta_classify(sample_penta_exterior(rng), kSampleTol).verdict == PentaVerdict::Exterior);
    const Point3 slice = sample_royal_slice(rng);
    CHECK(penta_classify(slice, kSampleTol).hartogs_defect < 0.0);
    CHECK(std::abs(slice.s * slice.s - 4.0 * slice.p) < 1e-14);
  }
}

TEST_CASE("matrix witness at reference points") {
  const MatrixWitness lower = matrix_witness({0.5, 0, 0});
  CHECK(std::abs(lower.norm - 0.5) < 1e-9);
  CHECK(lower.residual < 1e-12);

  const Complex l1{0.3, 0.4}, l2{-0.6, 0.1};
  const MatrixWitness diag = matrix_witness({0, l1 + l2, l1 * l2});
  CHECK(std::abs(diag.norm - std::max(std::abs(l1), std::abs(l2))) < 1e-12);
  CHECK(diag.norm < 1.0);

  const MatrixWitness outside = matrix_witness({0.6, 1, 0});
  CHECK(outside.norm > 1.0);
  CHECK(outside.residual < 1e-9);
}

TEST_CASE("matrix witness never beats a known matrix and reproduces the point") {
  Rng rng(46);
  for (int i = 0; i < 100; ++i) {
    const Matrix2 m{rng.disc(), rng.disc(), rng.disc(0.8) + 0.1, rng.disc()};
    const Point3 pt = penta_from_matrix(m);
    const MatrixWitness w = matrix_witness(pt);
    CHECK(w.residual < 1e-9);
    CHECK(w.norm <= operator_norm(m) + 1e-9);
    const Point3 back = penta_from_matrix(w.matrix);
    CHECK(std::abs(back.a - pt.a) < 1e-9);
    CHECK(std::abs(back.s - pt.s) < 1e-9);
    CHECK(std::abs(back.p - pt.p) < 1e-9);
  }
}

TEST_CASE("minkowski functional") {
  CHECK(std::abs(minkowski_functional({0.5, 0, 0}) - 0.5) < 1e-14);
  CHECK(std::abs(minkowski_functional({1, 0, 0}) - 1.0) < 1e-14);
  CHECK(kind_of([] { minkowski_functional({0, 0, 0}); }) == ErrorKind::ZeroPoint);

  const Point3 pt{0.25, 0.5, 0};
  const double m = minkowski_functional(pt);
  CHECK(m > 0.0);
  CHECK(m < 1.0);
  const auto cls = penta_classify(scale_quasi_homogeneous(pt, 1.0 / m), 1e-8);
  CHECK((cls.verdict == PentaVerdict::SmoothBoundary || cls.verdict == PentaVerdict::LeviFlatBoundary));

  Rng rng(47);
  for (int i = 0; i < 300; ++i) {
    const Point3 x{rng.disc(1.5), rng.disc(2.5), rng.disc(1.5)};
    const double g = minkowski_functional(x);
    CHECK(std::abs(g - oracle::gauge(x.a, x.s, x.p)) < 1e-9 * std::max(1.0, g));
    const double r = rng.uniform(0.1, 3.0);
    CHECK(std::abs(minkowski_functional(scale_quasi_homogeneous(x, r)) - r * g) < 1e-8 * r * g);
  }
}

TEST_CASE("royal slice and the ellipsoid") {
  CHECK(ellipsoid_membership(0, 0));
  CHECK_FALSE(ellipsoid_membership(1, 0));
  CHECK(ellipsoid_membership(0.5, 1.2));

  const auto origin = slice_to_ellipsoid({0, 0, 0});
  CHECK(origin.first == Complex{});
  CHECK(origin.second == Complex{});
  const auto [a, s] = slice_to_ellipsoid({0.5, 1, 0.25});
  CHECK(a == Complex(0.5));
  CHECK(s == Complex(1.0));
  CHECK(ellipsoid_membership(a, s));
  CHECK(kind_of([] { slice_to_ellipsoid({0.5, 1, 0}); }) == ErrorKind::NotOnRoyalSlice);

  Rng rng(48);
  for (int i = 0; i < 2000; ++i) {
    const Complex l = rng.disc();
    const Complex x = rng.disc(1.2);
    const Point3 pt{x, 2.0 * l, l * l};
    if (std::abs(std::abs(x) - (1.0 - std::norm(l))) < 1e-9) continue;
    CHECK(in_pentablock(pt) == ellipsoid_membership(x, 2.0 * l));
  }
}
