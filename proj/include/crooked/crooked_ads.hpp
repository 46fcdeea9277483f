#pragma once

// AdS-crooked planes CPa(g, s) = Exp_g(CP(0, s)) and their lifts to SL(2,R).
// Strata are read off in the tangent cone at the vertex.

#include <cmath>
#include <optional>

#include "crooked/ads.hpp"
#include "crooked/minkowski.hpp"

namespace crooked {

namespace detail {

/// k in SL(2,R) with k diag(1,-1) k^{-1} = s, for s with s.s = 1.
inline SL2 spine_eigenframe(const TangentSL2& s) {
  const Mat2 m = s.matrix();
  auto column = [](const Mat2& a) {
    return std::hypot(a.a, a.c) >= std::hypot(a.b, a.d) ? std::pair{a.a, a.c} : std::pair{a.b, a.d};
  };
  const auto [p1, p2] = column(m + Mat2::identity());
  auto [m1, m2] = column(m - Mat2::identity());
  Mat2 k{p1, m1, p2, m2};
  if (k.det() < 0) {
    k.b = -k.b;
    k.d = -k.d;
  }
  return SL2::normalized(k);
}

/// Sign making the first clearly nonzero Minkowski coordinate positive.
inline TangentSL2 canonical_spine_sign(const TangentSL2& s) {
  const MinkVec3 m = sl2_to_mink(s);
  for (double v : {m.x, m.y, m.z}) {
    if (std::abs(v) > 1e-12) return v > 0 ? s : -s;
  }
  return s;
}

}  // namespace detail

class AdSCrookedPlane {
 public:
  // Unit length is tested relative to |s|^2: the form cancels for large s.
  AdSCrookedPlane(const SL2& g, const TangentSL2& s, double tol = 1e-9) : g_(g), s_(s) {
    if (std::abs(lorentz_dot(s, s) - 1.0) > tol * std::max(1.0, s.sup_norm() * s.sup_norm())) {
      fail(ErrorCode::NotUnitSpacelike, "spine direction must satisfy s.s = 1");
    }
    k_ = detail::spine_eigenframe(s);
  }

  static AdSCrookedPlane standard() { return {SL2(), kDiagonalUnit}; }

  /// SL(2,R) representative of the vertex.
  const SL2& vertex() const { return g_; }
  AdSPoint vertex_point() const { return AdSPoint(g_); }
  const TangentSL2& spine_dir() const { return s_; }
  /// k with Ad_k diag(1,-1) = s.
  const SL2& frame() const { return k_; }
  /// Isometry (g k, k) carrying the standard plane to this one.
  IsometryG0 from_standard() const { return {g_ * k_, k_}; }

  /// Hinge directions Ad_k(E) and Ad_k(-F); future null, hinge i lies in wing i's plane.
  std::pair<TangentSL2, TangentSL2> hinge_dirs() const {
    return {adjoint(k_, TangentSL2(0, 1, 0)), adjoint(k_, TangentSL2(0, 0, -1))};
  }

 private:
  SL2 g_;
  TangentSL2 s_;
  SL2 k_;
};

inline AdSCrookedPlane construct(const AdSPoint& g, const TangentSL2& s) { return {g.rep(), s}; }

/// Image under an isometry (g1, g2): vertex g1 g g2^{-1}, spine Ad_{g2} s.
inline AdSCrookedPlane transform(const IsometryG0& phi, const AdSCrookedPlane& cp) {
  const TangentSL2 s = adjoint(phi.g2, cp.spine_dir());
  // Renormalise: Ad_{g2} amplifies rounding when g2 is far from the identity.
  return {phi.apply(cp.vertex()), (1.0 / std::sqrt(lorentz_dot(s, s))) * s};
}

inline CrookedPlaneE3 tangent_cone(const AdSCrookedPlane& cp) { return {{0, 0, 0}, sl2_to_mink(cp.spine_dir())}; }

namespace detail {

/// Log at the vertex of h = g^{-1} x, using the representative of
/// nonnegative trace. Returns the log and whether h had to be negated.
inline std::pair<TangentSL2, bool> vertex_log(const SL2& h) {
  const bool negated = h.trace() < 0;
  const SL2 hp = negated ? -h : h;
  // tr(hp) >= 0 > -2, so a logarithm exists.
  return {*geodesic_connect_dbl(hp), negated};
}

inline Stratum classify_log(const CrookedPlaneE3& cone, const TangentSL2& xi, double tol) {
  return membership(cone, sl2_to_mink(xi), tol);
}

}  // namespace detail

inline Stratum membership_ads(const AdSCrookedPlane& cp, const AdSPoint& x,
                              double tol = default_tolerances().membership) {
  const SL2 h = cp.vertex().inverse() * x.rep();
  const auto [xi, negated] = detail::vertex_log(h);
  (void)negated;
  return detail::classify_log(tangent_cone(cp), xi, tol);
}

/// Geodesic (H, l) description: H is the dual plane of the vertex g, and
/// l = stem intersected with g* is given by a point and a left-translated tangent.
struct DualDescription {
  SL2 dual_point;
  SL2 line_point;
  TangentSL2 line_tangent;
};

/// For the standard plane l = {J(t)} with J(0) = K and J(0)^{-1} J(t) = exp(-t diag(1,-1)).
inline DualDescription dual_description(const AdSCrookedPlane& cp) {
  const SL2& k = cp.frame();
  const SL2 t0 = k * SL2::unchecked(kRotationGenerator.matrix()) * k.inverse();
  return {cp.vertex(), cp.vertex() * t0, -cp.spine_dir()};
}

/// Inverse of dual_description up to the sign of s.
inline AdSCrookedPlane from_dual(const DualDescription& d, double tol = 1e-9) {
  const AdSPoint g(d.dual_point);
  for (double t : {-1.0, 0.0, 0.5, 1.0}) {
    if (!dual_plane_contains(g, AdSPoint(exp_at(d.line_point, t * d.line_tangent)), tol)) {
      fail(ErrorCode::GeodesicNotInPlane, "geodesic does not lie in the dual plane");
    }
  }
  if (classify(d.line_tangent) != VectorType::Spacelike) {
    fail(ErrorCode::GeodesicNotInPlane, "the geodesic must be spacelike");
  }
  // g^{-1} P is an involution, i.e. the traceless matrix t0 = exp(pi/2 t0).
  const TangentSL2 t0 = TangentSL2::traceless_part((d.dual_point.inverse() * d.line_point).matrix());
  const TangentSL2 u0 = TangentSL2::traceless_part(t0.matrix() * d.line_tangent.matrix());
  const MinkVec3 n = lorentz_cross(sl2_to_mink(t0), sl2_to_mink(u0));
  const double q = mink_dot(n, n);
  if (!(q > 0)) fail(ErrorCode::GeodesicNotInPlane, "degenerate stem plane");
  const TangentSL2 s = mink_to_sl2((1.0 / std::sqrt(q)) * n);
  return {d.dual_point, detail::canonical_spine_sign(s)};
}

// ---------------------------------------------------------------------------
// Lifts to the double cover.

class HatAdSCrookedPlane {
 public:
  HatAdSCrookedPlane(const SL2& vertex, const TangentSL2& s) : base_(vertex, s) {}

  const SL2& vertex() const { return base_.vertex(); }
  SL2 covertex() const { return -base_.vertex(); }
  const TangentSL2& spine_dir() const { return base_.spine_dir(); }
  const AdSCrookedPlane& base() const { return base_; }

 private:
  AdSCrookedPlane base_;
};

/// Lift with vertex sign * (representative of g).
inline HatAdSCrookedPlane lift(const AdSCrookedPlane& cp, int vertex_sign = 1) {
  return {vertex_sign >= 0 ? cp.vertex() : -cp.vertex(), cp.spine_dir()};
}

/// Labels relative to the vertex, co-labels relative to the covertex
/// (tr(v^{-1} x) < 0). Stem points carry no co-label.
inline Stratum membership_hat(const HatAdSCrookedPlane& hcp, const HatAdSPoint& x,
                              double tol = default_tolerances().membership) {
  const SL2 h = hcp.vertex().inverse() * x;
  const auto [xi, negated] = detail::vertex_log(h);
  const Stratum s = detail::classify_log(tangent_cone(hcp.base()), xi, tol);
  return negated ? deck_swap(s) : s;
}

}  // namespace crooked
