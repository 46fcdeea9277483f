#pragma once

// Conformal embeddings into Ein^3:
//   E^3:        (x,y,z) -> [x : y : z : x^2+y^2-z^2 : 1]
//   SL(2,R):    M -> [a-d : b+c : b-c : a+d-2 : a+d+2]
// and the inversion I_S swapping U and V.

#include <cmath>
#include <numbers>
#include <string_view>

#include "crooked/ads.hpp"
#include "crooked/core.hpp"
#include "crooked/sl2.hpp"

namespace crooked {

inline ProjectivePoint5 embed_mink(const MinkVec3& v) {
  return ProjectivePoint5::unchecked(vec5(v.x, v.y, v.z, mink_dot(v, v), 1.0));
}

inline MinkVec3 mink_from_ein(const ProjectivePoint5& p, double tol = default_tolerances().patch) {
  const Vec5& r = p.rep();
  if (std::abs(r[kV]) <= tol * sup_norm(r)) fail(ErrorCode::NotInMinkowskiPatch, "V = 0");
  return {r[kX] / r[kV], r[kY] / r[kV], r[kZ] / r[kV]};
}

/// Linear part (a-d, b+c, b-c, a+d, a+d); Q(lin M) = -4 det M.
inline Vec5 lin(const Mat2& m) {
  return vec5(m.a - m.d, m.b + m.c, m.b - m.c, m.trace(), m.trace());
}

/// Inverse of lin on the hyperplane U = V.
inline Mat2 lin_inverse(const Vec5& v) {
  const double w = 0.5 * (v[kU] + v[kV]);
  return {0.5 * (w + v[kX]), 0.5 * (v[kY] + v[kZ]), 0.5 * (v[kY] - v[kZ]), 0.5 * (w - v[kX])};
}

/// Offset (0,0,0,-2,2): B-orthogonal to the image of lin, Q = 4.
inline Vec5 psi_offset() { return vec5(0, 0, 0, -2, 2); }

/// Representative lin(M) + offset; null iff det M = 1.
inline Vec5 psi_vec(const Mat2& m) { return lin(m) + psi_offset(); }

inline ProjectivePoint5 psi(const SL2& m) { return ProjectivePoint5::unchecked(psi_vec(m.matrix())); }

inline SL2 psi_inverse(const ProjectivePoint5& p, double tol = default_tolerances().patch) {
  const Vec5& r = p.rep();
  const double den = r[kV] - r[kU];
  if (std::abs(den) <= tol * sup_norm(r)) fail(ErrorCode::OnEinstein2, "U = V: the point lies on Ein^2");
  return SL2::unchecked({(2 * r[kX] + r[kU] + r[kV]) / den, 2 * (r[kY] + r[kZ]) / den,
                         2 * (r[kY] - r[kZ]) / den, (-2 * r[kX] + r[kU] + r[kV]) / den});
}

inline ProjectivePoint5 inversion(const ProjectivePoint5& p) { return inversion_map().apply(p); }

/// Fix(I_S) = S union C_infinity, the points with U = V.
inline bool fixed_set_contains(const ProjectivePoint5& p, double tol = default_tolerances().proj) {
  return std::abs(p.rep()[kU] - p.rep()[kV]) <= tol;
}

/// Conformal map induced by the isometry x -> g1 x g2^{-1}: acts on the
/// image of lin as M -> g1 M g2^{-1} and fixes the offset.
inline ConformalMap5 conformal_of(const IsometryG0& phi) {
  const Mat2 g1 = phi.g1.matrix();
  const Mat2 g2i = phi.g2.inverse().matrix();
  Mat5 m;
  for (int j = 0; j < 5; ++j) {
    Vec5 e = Vec5::Zero();
    e[j] = 1.0;
    const double mu = 0.25 * (e[kV] - e[kU]);
    const Vec5 flat = e - mu * psi_offset();
    m.col(j) = lin(g1 * lin_inverse(flat) * g2i) + mu * psi_offset();
  }
  return ConformalMap5(m);
}

// ---------------------------------------------------------------------------
// Rulings of the unit sphere S = {x^2 + y^2 - z^2 = 1}.

enum class RulingSign { Plus, Minus };

inline MinkVec3 ruling_point(double theta, RulingSign sign, double eta) {
  const double e = sign == RulingSign::Plus ? 1.0 : -1.0;
  return {std::cos(theta) - e * eta * std::sin(theta), std::sin(theta) + e * eta * std::cos(theta), eta};
}

/// Limit as eta -> infinity: the dominant terms are (-+ sin, +- cos, 1) in X,Y,Z.
inline ProjectivePoint5 ruling_ideal_endpoint(double theta, RulingSign sign) {
  const double e = sign == RulingSign::Plus ? 1.0 : -1.0;
  return ProjectivePoint5::unchecked(vec5(-e * std::sin(theta), e * std::cos(theta), 1.0, 0.0, 0.0));
}

// ---------------------------------------------------------------------------
// Images of one-parameter subgroups and totally geodesic surfaces.

enum class GeodesicKind { Elliptic, Hyperbolic, Unipotent, AntiHyperbolic };

constexpr std::string_view to_string(GeodesicKind k) {
  switch (k) {
    case GeodesicKind::Elliptic: return "elliptic";
    case GeodesicKind::Hyperbolic: return "hyperbolic";
    case GeodesicKind::Unipotent: return "unipotent";
    case GeodesicKind::AntiHyperbolic: return "anti-hyperbolic";
  }
  return "?";
}

/// Elliptic images have z = kEllipticSign * tan(theta/2).
inline constexpr double kEllipticSign = -1.0;

/// Subgroup element: E_theta, exp(t diag(1,-1)), [[1,t],[0,1]] or -exp(t diag(1,-1)).
inline SL2 geodesic_element(GeodesicKind kind, double t) {
  switch (kind) {
    case GeodesicKind::Elliptic: return exp_sl2(t * kRotationGenerator);
    case GeodesicKind::Hyperbolic: return exp_sl2(t * kDiagonalUnit);
    case GeodesicKind::Unipotent: return SL2::unchecked({1.0, t, 0.0, 1.0});
    case GeodesicKind::AntiHyperbolic: return -exp_sl2(t * kDiagonalUnit);
  }
  return SL2();
}

/// Minkowski coordinates of Psi(element). Throws NotInPatch off the chart.
inline MinkVec3 geodesic_image(GeodesicKind kind, double t) {
  const Vec5 r = psi_vec(geodesic_element(kind, t).matrix());
  if (std::abs(r[kV]) <= default_tolerances().patch * sup_norm(r)) {
    fail(ErrorCode::NotInPatch, std::string(to_string(kind)) + " image leaves the Minkowski patch");
  }
  return {r[kX] / r[kV], r[kY] / r[kV], r[kZ] / r[kV]};
}

/// Closed forms: (tanh(t/2),0,0), (coth(t/2),0,0), (0,t/4,t/4), (0,0,-tan(theta/2)).
inline MinkVec3 geodesic_image_expected(GeodesicKind kind, double t) {
  switch (kind) {
    case GeodesicKind::Elliptic: return {0, 0, kEllipticSign * std::tan(t / 2)};
    case GeodesicKind::Hyperbolic: return {std::tanh(t / 2), 0, 0};
    case GeodesicKind::Unipotent: return {0, t / 4, t / 4};
    case GeodesicKind::AntiHyperbolic: return {1.0 / std::tanh(t / 2), 0, 0};
  }
  return {};
}

/// Sup-norm gap between the embedded point and its closed form.
inline double geodesic_image_check(GeodesicKind kind, double t) {
  return (geodesic_image(kind, t) - geodesic_image_expected(kind, t)).sup_norm();
}

enum class SurfaceKind { BorelUpper, BorelLower, Indefinite, DualPlane };

/// Residual of the equation satisfied by Psi of a member of the surface:
/// Y = Z, Y = -Z, X = 0, or x^2+y^2-z^2 = -1 in the Minkowski chart.
/// Throws BadInput when m is not a member.
inline double totally_geodesic_residual(SurfaceKind kind, const SL2& m, double tol = 1e-9) {
  const Mat2& a = m.matrix();
  const double scale = std::max(1.0, a.sup_norm());
  const Vec5 r = psi_vec(a);
  const double n = sup_norm(r);
  switch (kind) {
    case SurfaceKind::BorelUpper:
      if (std::abs(a.c) > tol * scale) fail(ErrorCode::BadInput, "not upper triangular");
      return std::abs(r[kY] - r[kZ]) / n;
    case SurfaceKind::BorelLower:
      if (std::abs(a.b) > tol * scale) fail(ErrorCode::BadInput, "not lower triangular");
      return std::abs(r[kY] + r[kZ]) / n;
    case SurfaceKind::Indefinite:
      if (std::abs(a.a - a.d) > tol * scale) fail(ErrorCode::BadInput, "diagonal entries differ");
      return std::abs(r[kX]) / n;
    case SurfaceKind::DualPlane: {
      if (std::abs(a.trace()) > tol * scale) fail(ErrorCode::BadInput, "trace is not zero");
      const MinkVec3 p{r[kX] / r[kV], r[kY] / r[kV], r[kZ] / r[kV]};
      return std::abs(mink_dot(p, p) + 1.0) / std::max(1.0, p.sup_norm() * p.sup_norm());
    }
  }
  return 0.0;
}

inline bool totally_geodesic_image_check(SurfaceKind kind, const SL2& m, double tol = 1e-9) {
  return totally_geodesic_residual(kind, m) <= tol;
}

}  // namespace crooked
