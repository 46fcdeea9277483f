#pragma once

// Crooked surfaces in Ein^3. The standard surface is the closure of the
// standard crooked plane of E^3: vertex p0, covertex pinf, hingepoints p1, p2,
// hinges and cohinges (photons p0-p_i and pinf-p_i), two wing bigons in the
// lightcones L(p1), L(p2), two stem squares in the hypersphere X = 0, and the
// spine circle L(p1) cap L(p2). Any other surface is carried to it by the
// normalising map of its configuration.

#include <cmath>
#include <string_view>

#include "crooked/core.hpp"
#include "crooked/crooked_ads.hpp"
#include "crooked/embedding.hpp"
#include "crooked/minkowski.hpp"

namespace crooked {

enum class EinStratum {
  Vertex,
  Covertex,
  Hingepoint1,
  Hingepoint2,
  Hinge,
  Cohinge,
  StemT1,
  StemT2,
  Wing1,
  Wing2,
  SpineCircle,
  Outside,
};

using EinStratumTag = EinStratum;

constexpr std::string_view to_string(EinStratum s) {
  switch (s) {
    case EinStratum::Vertex: return "Vertex";
    case EinStratum::Covertex: return "Covertex";
    case EinStratum::Hingepoint1: return "Hingepoint1";
    case EinStratum::Hingepoint2: return "Hingepoint2";
    case EinStratum::Hinge: return "Hinge";
    case EinStratum::Cohinge: return "Cohinge";
    case EinStratum::StemT1: return "StemT1";
    case EinStratum::StemT2: return "StemT2";
    case EinStratum::Wing1: return "Wing1";
    case EinStratum::Wing2: return "Wing2";
    case EinStratum::SpineCircle: return "SpineCircle";
    case EinStratum::Outside: return "Outside";
  }
  return "?";
}

using StemConfiguration = Configuration;

class CrookedSurface {
 public:
  explicit CrookedSurface(const StemConfiguration& cfg) : cfg_(cfg), t_(normalize_to_standard(cfg)) {}

  static CrookedSurface standard() { return CrookedSurface(standard_configuration()); }

  const StemConfiguration& configuration() const { return cfg_; }
  /// Normalising map: sends the configuration to (p0, pinf, p1, p2).
  const ConformalMap5& normalizer() const { return t_; }

 private:
  StemConfiguration cfg_;
  ConformalMap5 t_;
};

inline CrookedSurface crooked_surface(const StemConfiguration& cfg) { return CrookedSurface(cfg); }

/// Classification against the standard surface.
inline EinStratum classify_standard_surface(const Vec5& v, double tol = default_tolerances().membership) {
  const ProjectivePoint5 p = ProjectivePoint5::unchecked(v);
  if (projective_distance(p, p0()) <= tol) return EinStratum::Vertex;
  if (projective_distance(p, pinf()) <= tol) return EinStratum::Covertex;
  if (projective_distance(p, p1()) <= tol) return EinStratum::Hingepoint1;
  if (projective_distance(p, p2()) <= tol) return EinStratum::Hingepoint2;
  const Vec5& r = p.rep();
  if (std::abs(r[kV]) > tol) {
    const MinkVec3 m{r[kX] / r[kV], r[kY] / r[kV], r[kZ] / r[kV]};
    switch (classify_standard(m, 1.0, tol)) {
      case Stratum::Hinge1:
      case Stratum::Hinge2: return EinStratum::Hinge;
      case Stratum::StemInterior: return m.z > 0 ? EinStratum::StemT1 : EinStratum::StemT2;
      case Stratum::Wing1: return EinStratum::Wing1;
      case Stratum::Wing2: return EinStratum::Wing2;
      case Stratum::Spine: return EinStratum::SpineCircle;
      case Stratum::Vertex: return EinStratum::Vertex;
      default: return EinStratum::Outside;
    }
  }
  if (std::abs(r[kU]) > tol) {
    // On L(pinf): the inversion carries the cohinges onto the hinge lines.
    const MinkVec3 m{r[kX] / r[kU], r[kY] / r[kU], r[kZ] / r[kU]};
    const Stratum s = classify_standard(m, 1.0, tol);
    if (s == Stratum::Hinge1 || s == Stratum::Hinge2) return EinStratum::Cohinge;
    return EinStratum::Outside;
  }
  return EinStratum::Outside;
}

inline EinStratum cs_membership(const CrookedSurface& cs, const ProjectivePoint5& p,
                                double tol = default_tolerances().membership) {
  return classify_standard_surface(cs.normalizer().apply(p.rep()), tol);
}

inline SpacelikeCircle cs_spine(const CrookedSurface& cs) {
  return spacelike_circle_dual(cs.configuration().q1, cs.configuration().q2);
}

inline bool is_adapted(const StemConfiguration& c, double tol = default_tolerances().proj) {
  return approx_equal(inversion(c.q0), c.qinf, tol) && approx_equal(inversion(c.q1), c.q1, tol) &&
         approx_equal(inversion(c.q2), c.q2, tol);
}
inline bool is_adapted(const CrookedSurface& cs) { return is_adapted(cs.configuration()); }

enum class Adaptedness { Adapted, InvariantOnly, Neither };

constexpr std::string_view to_string(Adaptedness a) {
  switch (a) {
    case Adaptedness::Adapted: return "adapted";
    case Adaptedness::InvariantOnly: return "invariant-only";
    case Adaptedness::Neither: return "neither";
  }
  return "?";
}

/// Invariant-only: I_S preserves {q0, qinf} and {q1, q2} as sets without being adapted.
inline Adaptedness adaptedness(const StemConfiguration& c, double tol = default_tolerances().proj) {
  validate_configuration(c);
  if (is_adapted(c, tol)) return Adaptedness::Adapted;
  auto same = [tol](const ProjectivePoint5& a, const ProjectivePoint5& b) { return approx_equal(a, b, tol); };
  const ProjectivePoint5 i0 = inversion(c.q0), iinf = inversion(c.qinf);
  const ProjectivePoint5 i1 = inversion(c.q1), i2 = inversion(c.q2);
  const bool pair0 = (same(i0, c.qinf) && same(iinf, c.q0)) || (same(i0, c.q0) && same(iinf, c.qinf));
  const bool pair1 = (same(i1, c.q2) && same(i2, c.q1)) || (same(i1, c.q1) && same(i2, c.q2));
  return pair0 && pair1 ? Adaptedness::InvariantOnly : Adaptedness::Neither;
}

/// Configuration (Psi(v), Psi(-v); q1, q2) of the lift with vertex v, where
/// q_i is the point with U = V on the hinge photon through Psi(v).
inline StemConfiguration lift_configuration(const HatAdSCrookedPlane& hcp) {
  const SL2& v = hcp.vertex();
  const auto [n1, n2] = hcp.base().hinge_dirs();
  auto hingepoint = [&](const TangentSL2& n) {
    const PhotonLine photon(psi_vec(v.matrix()), psi_vec(v.matrix() * (Mat2::identity() + n.matrix())));
    return photon_meets_fixed_set(photon);
  };
  return {psi(v), psi(-v), hingepoint(n1), hingepoint(n2)};
}

/// Closure in Ein^3 of the lift of cp; always adapted.
inline CrookedSurface closure_of_lift(const AdSCrookedPlane& cp, int vertex_sign = 1) {
  const StemConfiguration cfg = lift_configuration(lift(cp, vertex_sign));
  if (!is_adapted(cfg)) fail(ErrorCode::NotAdapted, "closure of a lift failed the adaptedness test");
  return CrookedSurface(cfg);
}

/// AdS-crooked plane whose lift closes up to cs: vertex psi_inverse(q0) and
/// hinges n_i = g^{-1} lin^{-1}(q_i). With k = [im n1 | im n2] the hinges are
/// Ad_k(E) and Ad_k(-F) up to scale, so the spine is Ad_k diag(1,-1).
inline AdSCrookedPlane ads_from_adapted(const CrookedSurface& cs) {
  const StemConfiguration& c = cs.configuration();
  if (!is_adapted(c)) fail(ErrorCode::NotAdapted, "configuration is not adapted");
  const SL2 g = psi_inverse(c.q0);
  const SL2 gi = g.inverse();
  auto image = [&](const ProjectivePoint5& q) {
    const Mat2 n = TangentSL2::traceless_part(gi.matrix() * lin_inverse(q.rep())).matrix();
    return rank1_kernel_image((1.0 / n.sup_norm()) * n, 1e-6).second;
  };
  const RP1Point a = image(c.q1);
  const RP1Point b = image(c.q2);
  const Mat2 k{a.u(), b.u(), a.v(), b.v()};
  if (std::abs(k.det()) < 1e-12) fail(ErrorCode::NotAdapted, "hinge directions coincide");
  const Mat2 s = k * Mat2{1, 0, 0, -1} * k.inverse();
  return {g, TangentSL2::traceless_part(s)};
}

/// Label of the standard surface expected for a point of the lift.
inline EinStratum ein_label_of_lift(Stratum s, bool future_stem) {
  switch (s) {
    case Stratum::Vertex: return EinStratum::Vertex;
    case Stratum::Covertex: return EinStratum::Covertex;
    case Stratum::Hinge1:
    case Stratum::Hinge2: return EinStratum::Hinge;
    case Stratum::Cohinge1:
    case Stratum::Cohinge2: return EinStratum::Cohinge;
    case Stratum::Wing1:
    case Stratum::Cowing1: return EinStratum::Wing1;
    case Stratum::Wing2:
    case Stratum::Cowing2: return EinStratum::Wing2;
    case Stratum::Spine:
    case Stratum::Cospine: return EinStratum::SpineCircle;
    case Stratum::StemInterior: return future_stem ? EinStratum::StemT1 : EinStratum::StemT2;
    default: return EinStratum::Outside;
  }
}

}  // namespace crooked
