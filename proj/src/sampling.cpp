#include "pentablock/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "pentablock/bidisc.hpp"
#include "pentablock/pentablock.hpp"

namespace pentablock {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Draws until `accept` holds. Samplers construct points that are in the
// region by construction; the loop only skips draws that land inside the
// classification band.
template <typename Draw, typename Accept>
auto draw_until(Rng& rng, Draw draw, Accept accept) {
  for (;;) {
    auto x = draw(rng);
    if (accept(x)) return x;
  }
}

Point3 fibre_point(Rng& rng, Complex l1, Complex l2, double c) {
  const double r = radius_via_parametrization(l1, l2);
  const Point2 base = sigma(l1, l2);
  return {c * r * rng.unit_circle(), base.s, base.p};
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kGolden)) {}

Rng Rng::substream(std::string_view label) const { return {mix64(key_ ^ fnv1a(label)), 0}; }

Rng Rng::substream(std::uint64_t index) const {
  return {mix64(key_ ^ mix64(index + 0x632BE59BD9B4E019ULL)), 0};
}

std::uint64_t Rng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Complex Rng::unit_circle() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

Complex Rng::disc(double radius) {
  const double r = radius * std::sqrt(uniform());
  return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

Point2 sample_g2_interior(Rng& rng) {
  return draw_until(
      rng, [](Rng& g) { return sigma(g.disc(), g.disc()); },
      [](const Point2& pt) { return g2_classify(pt, kSampleTol).interior(); });
}

Point2 sample_g2_boundary(Rng& rng) {
  return draw_until(
      rng, [](Rng& g) { return sigma(g.unit_circle(), g.disc()); },
      [](const Point2& pt) { return g2_classify(pt, kSampleTol).verdict == G2Verdict::Boundary; });
}

Point2 sample_g2_shilov(Rng& rng) { return sigma(rng.unit_circle(), rng.unit_circle()); }

Point2 sample_royal(Rng& rng) {
  const Complex l = rng.disc();
  return {2.0 * l, l * l};
}

Point3 sample_penta_interior(Rng& rng) {
  return draw_until(
      rng, [](Rng& g) {
        const Complex l1 = g.disc();
        const Complex l2 = g.disc();
        return fibre_point(g, l1, l2, g.uniform());
      },
      [](const Point3& pt) { return penta_classify(pt, kSampleTol).interior(); });
}

Point3 sample_penta_d1(Rng& rng) {
  return draw_until(
      rng, [](Rng& g) {
        const Complex l1 = g.disc();
        const Complex l2 = g.disc();
        return fibre_point(g, l1, l2, 1.0);
      },
      [](const Point3& pt) {
        return penta_classify(pt, kSampleTol).verdict == PentaVerdict::SmoothBoundary;
      });
}

Point3 sample_penta_d2(Rng& rng) {
  return draw_until(
      rng, [](Rng& g) {
        const Complex zeta = g.unit_circle();
        const Complex mu = g.disc();
        return fibre_point(g, zeta, mu, g.uniform());
      },
      [](const Point3& pt) {
        return penta_classify(pt, kSampleTol).verdict == PentaVerdict::LeviFlatBoundary;
      });
}

Point3 sample_penta_exterior(Rng& rng) {
  return draw_until(
      rng, [](Rng& g) {
        const Complex l1 = g.disc();
        const Complex l2 = g.disc();
        const double c = 1.5 - 0.5 * g.uniform();
        return fibre_point(g, l1, l2, c);
      },
      [](const Point3& pt) {
        const auto cls = penta_classify(pt, kSampleTol);
        return cls.base.interior() && cls.verdict == PentaVerdict::Exterior;
      });
}

Point3 sample_royal_slice(Rng& rng) {
  const Complex l = rng.disc();
  const double radius = 1.0 - std::norm(l);
  return {rng.uniform() * radius * rng.unit_circle(), 2.0 * l, l * l};
}

MoebiusMap sample_moebius(Rng& rng, double max_alpha) {
  const Complex eta = rng.unit_circle();
  return {eta, rng.disc(max_alpha)};
}

BlaschkeProduct sample_blaschke(Rng& rng, int max_degree, double max_zero) {
  const auto degree = 1 + static_cast<int>(rng.uniform() * max_degree);
  const Complex eta = rng.unit_circle();
  std::vector<Complex> zeros;
  for (int i = 0; i < degree; ++i) zeros.push_back(rng.disc(max_zero));
  return {eta, std::move(zeros)};
}

PentaAutomorphism sample_automorphism(Rng& rng, double max_alpha) {
  const Complex omega = rng.unit_circle();
  return {omega, sample_moebius(rng, max_alpha)};
}

}  // namespace pentablock
