#pragma once

#include <cstdint>
#include <string_view>

#include "pentablock/automorphisms.hpp"
#include "pentablock/blaschke.hpp"
#include "pentablock/complex_core.hpp"

namespace pentablock {

/// Counter-based SplitMix64: draw k of stream `key` is mix64(key + k * golden).
/// Streams are split by hashing a label into the key, so independent
/// consumers never share draws and results do not depend on evaluation order.
class Rng {
public:
  static constexpr std::string_view kAlgorithm = "splitmix64-counter";

  explicit Rng(std::uint64_t seed);

  /// Independent stream derived from this one's key and a label.
  Rng substream(std::string_view label) const;
  Rng substream(std::uint64_t index) const;

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// exp(i theta), theta uniform on [0, 2 pi).
  Complex unit_circle();
  /// Uniform on the disc |z| < radius (radius sqrt(U), angle uniform).
  Complex disc(double radius = 1.0);

private:
  Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Tolerance at which every sampler's output re-classifies to its region.
inline constexpr double kSampleTol = 1e-8;

Point2 sample_g2_interior(Rng& rng);
/// sigma(zeta, mu) with |zeta| = 1, |mu| < 1: boundary, off the Shilov boundary.
Point2 sample_g2_boundary(Rng& rng);
/// sigma(zeta1, zeta2), both unimodular.
Point2 sample_g2_shilov(Rng& rng);
/// (2 l, l^2), l uniform on the disc.
Point2 sample_royal(Rng& rng);

/// (c r e^{i phi}, sigma(l1, l2)) with r the fibre radius and c uniform on [0, 1).
Point3 sample_penta_interior(Rng& rng);
/// Same with c = 1: base interior, |a|^2 = e^{-u}.
Point3 sample_penta_d1(Rng& rng);
/// Fibre point over sigma(zeta, mu), |zeta| = 1, with |a| below the radius.
Point3 sample_penta_d2(Rng& rng);
/// Interior base with c uniform on (1, 1.5].
Point3 sample_penta_exterior(Rng& rng);
/// (a, 2l, l^2) with |a| < 1 - |l|^2.
Point3 sample_royal_slice(Rng& rng);

MoebiusMap sample_moebius(Rng& rng, double max_alpha = 0.95);
/// Degree uniform on [1, max_degree], zeros uniform on the disc of radius max_zero.
BlaschkeProduct sample_blaschke(Rng& rng, int max_degree = 4, double max_zero = 0.95);
PentaAutomorphism sample_automorphism(Rng& rng, double max_alpha = 0.95);

}  // namespace pentablock
