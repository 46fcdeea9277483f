#pragma once

// Seeded samplers. Every sampler takes the engine explicitly so that
// sharded runs stay reproducible.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "crooked/core.hpp"
#include "crooked/crooked_ads.hpp"
#include "crooked/sl2.hpp"

namespace crooked {

using Rng = std::mt19937_64;

/// splitmix64 finaliser; derives independent shard seeds from one seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng shard_rng(std::uint64_t seed, std::uint64_t shard) { return Rng(splitmix64(seed ^ splitmix64(shard + 1))); }

inline double normal(Rng& rng, double sd = 1.0) { return std::normal_distribution<double>(0.0, sd)(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Entries N(0, sd^2), rescaled to det 1 (the first row is negated if det < 0).
inline SL2 random_sl2(Rng& rng, double sd = 3.0) {
  for (;;) {
    Mat2 m{normal(rng, sd), normal(rng, sd), normal(rng, sd), normal(rng, sd)};
    double d = m.det();
    if (std::abs(d) < 1e-3 * sd * sd) continue;
    if (d < 0) {
      m.a = -m.a;
      m.b = -m.b;
      d = -d;
    }
    return SL2::normalized(m);
  }
}

/// Traceless matrix with entries uniform in [-bound, bound].
inline TangentSL2 random_tangent(Rng& rng, double bound) {
  return {uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
}

/// exp of a traceless matrix with entries uniform in [-bound, bound]. Keeps
/// group elements well conditioned, unlike random_sl2 near det = 0.
inline SL2 random_moderate_sl2(Rng& rng, double bound = 1.0) {
  return exp_sl2({uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)});
}

/// Unit spacelike s = Ad_h diag(1,-1) for a random h of moderate size.
inline TangentSL2 random_unit_spacelike(Rng& rng) {
  const SL2 h = random_moderate_sl2(rng);
  const TangentSL2 s = adjoint(h, kDiagonalUnit);
  return (1.0 / std::sqrt(lorentz_dot(s, s))) * s;
}

inline AdSCrookedPlane random_ads_plane(Rng& rng) { return {random_sl2(rng, 1.0), random_unit_spacelike(rng)}; }

inline MinkVec3 random_unit_spacelike_mink(Rng& rng) { return sl2_to_mink(random_unit_spacelike(rng)); }

/// Element of SO(3,2)^0: product of rotations and boosts in the orthonormal
/// frame X, Y, (V-U), Z, (U+V).
inline ConformalMap5 random_conformal(Rng& rng, int factors = 6, double sd = 0.6) {
  Mat5 frame = Mat5::Zero();
  frame(kX, 0) = 1;
  frame(kY, 1) = 1;
  frame(kU, 2) = -1;
  frame(kV, 2) = 1;
  frame(kZ, 3) = 1;
  frame(kU, 4) = 1;
  frame(kV, 4) = 1;
  Mat5 a = Mat5::Identity();
  std::uniform_int_distribution<int> pick(0, 4);
  for (int f = 0; f < factors; ++f) {
    int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    const double t = normal(rng, sd);
    Mat5 r = Mat5::Identity();
    const bool pi = i < 3;
    const bool pj = j < 3;
    if (pi == pj) {
      r(i, i) = std::cos(t);
      r(j, j) = std::cos(t);
      r(i, j) = -std::sin(t);
      r(j, i) = std::sin(t);
    } else {
      r(i, i) = std::cosh(t);
      r(j, j) = std::cosh(t);
      r(i, j) = std::sinh(t);
      r(j, i) = std::sinh(t);
    }
    a = r * a;
  }
  return ConformalMap5(frame * a * frame.inverse());
}

/// Random point of Ein^3: a unit timelike part and a unit spacelike part of
/// equal length in the frame above.
inline ProjectivePoint5 random_ein_point(Rng& rng) {
  Eigen::Vector3d sp(normal(rng), normal(rng), normal(rng));
  Eigen::Vector2d tm(normal(rng), normal(rng));
  sp.normalize();
  tm.normalize();
  // sp in (X, Y, V-U), tm in (Z, U+V).
  const Vec5 v = vec5(sp[0], sp[1], tm[0], tm[1] - sp[2], tm[1] + sp[2]);
  return ProjectivePoint5::unchecked(v);
}

}  // namespace crooked
