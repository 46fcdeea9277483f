#pragma once

// Explicit samples of the strata of the standard objects:
//   - the standard crooked plane of E^3 (also the tangent cone at e),
//   - the standard AdS-crooked plane and its lift, written as matrices,
//   - the standard crooked surface in Ein^3.
// The matrix descriptions do not go through the exponential map, so they
// serve as an independent oracle for the log-based membership tests.

#include <cmath>
#include <vector>

#include "crooked/crooked_surface.hpp"
#include "crooked/random.hpp"

namespace crooked::strata {

inline double signed_range(Rng& rng, double lo, double hi) {
  const double m = uniform(rng, lo, hi);
  return uniform(rng, 0.0, 1.0) < 0.5 ? -m : m;
}

inline const std::vector<Stratum>& plane_strata() {
  static const std::vector<Stratum> s{Stratum::StemInterior, Stratum::Hinge1, Stratum::Hinge2, Stratum::Wing1,
                                      Stratum::Wing2,        Stratum::Spine,  Stratum::Vertex, Stratum::Outside};
  return s;
}

inline const std::vector<Stratum>& lift_strata() {
  static const std::vector<Stratum> s{Stratum::StemInterior, Stratum::Hinge1,  Stratum::Hinge2,   Stratum::Wing1,
                                      Stratum::Wing2,        Stratum::Spine,   Stratum::Vertex,   Stratum::Cohinge1,
                                      Stratum::Cohinge2,     Stratum::Cowing1, Stratum::Cowing2,  Stratum::Cospine,
                                      Stratum::Covertex};
  return s;
}

/// Point of the standard E^3 crooked plane in the given stratum, with
/// coordinates bounded by `r` (Lorentzian length below r for stem points).
inline MinkVec3 standard_e3(Stratum s, Rng& rng, double r = 2.5) {
  const double lo = 0.05;
  switch (s) {
    case Stratum::StemInterior: {
      const double rho = uniform(rng, lo, r);
      const double u = uniform(rng, -0.95, 0.95);
      const double z = uniform(rng, 0.0, 1.0) < 0.5 ? -rho : rho;
      return {0.0, u * rho, z};
    }
    case Stratum::Hinge1: {
      const double t = signed_range(rng, lo, r);
      return {0.0, t, t};
    }
    case Stratum::Hinge2: {
      const double t = signed_range(rng, lo, r);
      return {0.0, -t, t};
    }
    case Stratum::Wing1: {
      const double a = signed_range(rng, lo, r);
      return {uniform(rng, lo, r), a, a};
    }
    case Stratum::Wing2: {
      const double a = signed_range(rng, lo, r);
      return {-uniform(rng, lo, r), a, -a};
    }
    case Stratum::Spine: return {signed_range(rng, lo, r), 0.0, 0.0};
    case Stratum::Vertex: return {0.0, 0.0, 0.0};
    default: {
      for (;;) {
        const MinkVec3 p{uniform(rng, -r, r), uniform(rng, -r, r), uniform(rng, -r, r)};
        if (p.sup_norm() > lo && classify_standard(p) == Stratum::Outside) return p;
      }
    }
  }
}

/// Matrix in SL(2,R) of the stratum of the lift of the standard AdS-crooked
/// plane (vertex 1, spine diag(1,-1)):
///   stem    [[a,b],[c,a]], a^2 - bc = 1, |a| < 1
///   hinges  +-[[1,t],[0,1]], +-[[1,0],[t,1]]
///   wings   +-[[a,b],[0,1/a]] with a > 1, +-[[a,0],[c,1/a]] with 0 < a < 1
///   spine   +-diag(a, 1/a), a > 0
/// The minus sign gives the co-strata.
inline SL2 standard_lift_oracle(Stratum s, Rng& rng) {
  const double sign = (s >= Stratum::Cohinge1) ? -1.0 : 1.0;
  const Stratum base = project_label(s);
  auto out = [&](const Mat2& m) { return SL2::unchecked(sign * m); };
  switch (base) {
    case Stratum::StemInterior: {
      const double a = uniform(rng, -0.95, 0.95);
      const double b = signed_range(rng, 0.2, 3.0);
      return SL2::unchecked({a, b, (a * a - 1.0) / b, a});
    }
    case Stratum::Hinge1: return out({1.0, signed_range(rng, 0.05, 4.0), 0.0, 1.0});
    case Stratum::Hinge2: return out({1.0, 0.0, signed_range(rng, 0.05, 4.0), 1.0});
    case Stratum::Wing1: {
      const double a = uniform(rng, 1.05, 6.0);
      return out({a, signed_range(rng, 0.05, 4.0), 0.0, 1.0 / a});
    }
    case Stratum::Wing2: {
      const double a = uniform(rng, 1.0 / 6.0, 0.95);
      return out({a, 0.0, signed_range(rng, 0.05, 4.0), 1.0 / a});
    }
    case Stratum::Spine: {
      double a = uniform(rng, 0.15, 6.0);
      if (std::abs(a - 1.0) < 0.05) a = 2.0;
      return out({a, 0.0, 0.0, 1.0 / a});
    }
    case Stratum::Vertex: return out(Mat2::identity());
    default: {
      // Hyperbolic elements of the stem plane, or the wrong half of a null plane.
      const double pick = uniform(rng, 0.0, 3.0);
      const double sg = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      if (pick < 1.0) {
        const double a = signed_range(rng, 1.05, 4.0);
        const double b = signed_range(rng, 0.2, 3.0);
        return SL2::unchecked(sg * Mat2{a, b, (a * a - 1.0) / b, a});
      }
      if (pick < 2.0) {
        const double a = uniform(rng, 1.0 / 6.0, 0.95);
        return SL2::unchecked(sg * Mat2{a, signed_range(rng, 0.05, 4.0), 0.0, 1.0 / a});
      }
      const double a = uniform(rng, 1.05, 6.0);
      return SL2::unchecked(sg * Mat2{a, 0.0, signed_range(rng, 0.05, 4.0), 1.0 / a});
    }
  }
}

inline const std::vector<EinStratum>& surface_strata() {
  static const std::vector<EinStratum> s{EinStratum::Vertex,      EinStratum::Covertex, EinStratum::Hingepoint1,
                                         EinStratum::Hingepoint2, EinStratum::Hinge,    EinStratum::Cohinge,
                                         EinStratum::StemT1,      EinStratum::StemT2,   EinStratum::Wing1,
                                         EinStratum::Wing2,       EinStratum::SpineCircle};
  return s;
}

/// Representative of a point of the standard crooked surface. Minkowski
/// samples range over several orders of magnitude; wing samples also include
/// I_S-images (the cowings lie in the same bigons).
inline Vec5 standard_surface(EinStratum s, Rng& rng) {
  auto scale = [&] { return std::exp(uniform(rng, std::log(0.05), std::log(20.0))); };
  auto mink = [&](const MinkVec3& m) { return vec5(m.x, m.y, m.z, mink_dot(m, m), 1.0); };
  auto maybe_invert = [&](const Vec5& v) { return uniform(rng, 0.0, 1.0) < 0.5 ? v : inversion_map().apply(v); };
  switch (s) {
    case EinStratum::Vertex: return p0().rep();
    case EinStratum::Covertex: return pinf().rep();
    case EinStratum::Hingepoint1: return p1().rep();
    case EinStratum::Hingepoint2: return p2().rep();
    case EinStratum::Hinge:
    case EinStratum::Cohinge: {
      const double t = scale() * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
      const double e = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const Vec5 v = mink({0.0, e * t, t});
      return s == EinStratum::Hinge ? v : inversion_map().apply(v);
    }
    case EinStratum::StemT1:
    case EinStratum::StemT2: {
      const double rho = scale();
      const double z = s == EinStratum::StemT1 ? rho : -rho;
      return mink({0.0, uniform(rng, -0.95, 0.95) * rho, z});
    }
    case EinStratum::Wing1:
    case EinStratum::Wing2: {
      const double x = scale();
      const double a = scale() * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
      const Vec5 v = s == EinStratum::Wing1 ? mink({x, a, a}) : mink({-x, a, -a});
      return maybe_invert(v);
    }
    case EinStratum::SpineCircle: {
      const double x = scale() * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
      return mink({x, 0.0, 0.0});
    }
    default: return random_ein_point(rng).rep();
  }
}

}  // namespace crooked::strata
