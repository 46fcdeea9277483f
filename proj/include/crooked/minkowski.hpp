#pragma once

// Crooked planes in Minkowski space E^3 (form x^2 + y^2 - z^2).
//
// The standard plane has vertex 0 and spine direction e_x:
//   stem   x = 0, y^2 - z^2 <= 0
//   hinges the null lines x = 0, y = +-z
//   wing1  y = z, x > 0      wing2  y = -z, x < 0
// Any other plane is carried to it by a translation and an element of SO(2,1)^0.

#include <Eigen/Dense>

#include <cmath>
#include <string_view>
#include <utility>

#include "crooked/core.hpp"
#include "crooked/sl2.hpp"

namespace crooked {

enum class Stratum {
  StemInterior,
  Hinge1,
  Hinge2,
  Wing1,
  Wing2,
  Spine,
  Vertex,
  Outside,
  // Additional labels for lifts to the double cover.
  Cohinge1,
  Cohinge2,
  Cowing1,
  Cowing2,
  Cospine,
  Covertex,
};

using StratumTag = Stratum;
using AdSStratumTag = Stratum;

constexpr std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::StemInterior: return "StemInterior";
    case Stratum::Hinge1: return "Hinge1";
    case Stratum::Hinge2: return "Hinge2";
    case Stratum::Wing1: return "Wing1";
    case Stratum::Wing2: return "Wing2";
    case Stratum::Spine: return "Spine";
    case Stratum::Vertex: return "Vertex";
    case Stratum::Outside: return "Outside";
    case Stratum::Cohinge1: return "Cohinge1";
    case Stratum::Cohinge2: return "Cohinge2";
    case Stratum::Cowing1: return "Cowing1";
    case Stratum::Cowing2: return "Cowing2";
    case Stratum::Cospine: return "Cospine";
    case Stratum::Covertex: return "Covertex";
  }
  return "?";
}

/// Label <-> co-label; stem and outside are fixed.
constexpr Stratum deck_swap(Stratum s) {
  switch (s) {
    case Stratum::Hinge1: return Stratum::Cohinge1;
    case Stratum::Hinge2: return Stratum::Cohinge2;
    case Stratum::Wing1: return Stratum::Cowing1;
    case Stratum::Wing2: return Stratum::Cowing2;
    case Stratum::Spine: return Stratum::Cospine;
    case Stratum::Vertex: return Stratum::Covertex;
    case Stratum::Cohinge1: return Stratum::Hinge1;
    case Stratum::Cohinge2: return Stratum::Hinge2;
    case Stratum::Cowing1: return Stratum::Wing1;
    case Stratum::Cowing2: return Stratum::Wing2;
    case Stratum::Cospine: return Stratum::Spine;
    case Stratum::Covertex: return Stratum::Vertex;
    default: return s;
  }
}

/// Image in AdS^3 of a lifted label: co-labels merge with labels.
constexpr Stratum project_label(Stratum s) {
  switch (s) {
    case Stratum::Cohinge1:
    case Stratum::Cohinge2:
    case Stratum::Cowing1:
    case Stratum::Cowing2:
    case Stratum::Cospine:
    case Stratum::Covertex: return deck_swap(s);
    default: return s;
  }
}

inline Eigen::Vector3d to_eigen(const MinkVec3& v) { return {v.x, v.y, v.z}; }
inline MinkVec3 from_eigen(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }

/// diag(1,1,-1).
inline Eigen::Matrix3d eta3() { return Eigen::Vector3d(1, 1, -1).asDiagonal(); }

/// Lorentz cross product: the vector c with c.w = det(p, q, w) for all w.
inline MinkVec3 lorentz_cross(const MinkVec3& p, const MinkVec3& q) {
  const Eigen::Vector3d e = to_eigen(p).cross(to_eigen(q));
  return {e[0], e[1], -e[2]};
}

namespace detail {
inline MinkVec3 unit_spacelike(const MinkVec3& s) {
  const double q = mink_dot(s, s);
  if (!(q > 0)) fail(ErrorCode::NotSpacelike, "spine direction must be spacelike");
  return (1.0 / std::sqrt(q)) * s;
}
}  // namespace detail

/// Element M of SO(2,1)^0 with M e_x = s (s unit spacelike). Its columns
/// are s, a unit spacelike u and a future unit timelike t.
inline Eigen::Matrix3d spine_frame(const MinkVec3& s_in) {
  const MinkVec3 s = detail::unit_spacelike(s_in);
  const MinkVec3 t = (1.0 / std::sqrt(1.0 + s.z * s.z)) * (MinkVec3{0, 0, 1} + s.z * s);
  MinkVec3 u = lorentz_cross(s, t);
  u = (1.0 / std::sqrt(mink_dot(u, u))) * u;
  Eigen::Matrix3d m;
  m.col(0) = to_eigen(s);
  m.col(1) = to_eigen(u);
  m.col(2) = to_eigen(t);
  if (m.determinant() < 0) m.col(1) = -m.col(1);
  return m;
}

/// Inverse of a Lorentz matrix: eta M^T eta.
inline Eigen::Matrix3d lorentz_inverse(const Eigen::Matrix3d& m) { return eta3() * m.transpose() * eta3(); }

/// Future null directions spanning s^perp, ordered by the standardising frame.
inline std::pair<MinkVec3, MinkVec3> hinge_dirs(const MinkVec3& s) {
  const Eigen::Matrix3d m = spine_frame(s);
  return {from_eigen(m.col(2) + m.col(1)), from_eigen(m.col(2) - m.col(1))};
}

class CrookedPlaneE3 {
 public:
  CrookedPlaneE3(const MinkVec3& vertex, const MinkVec3& s, double tol = 1e-9) : vertex_(vertex), s_(s) {
    if (std::abs(mink_dot(s, s) - 1.0) > tol * std::max(1.0, s.sup_norm() * s.sup_norm())) fail(ErrorCode::NotUnitSpacelike, "spine direction must satisfy s.s = 1");
    frame_ = spine_frame(s);
    to_standard_ = lorentz_inverse(frame_);
  }

  static CrookedPlaneE3 standard() { return {{0, 0, 0}, {1, 0, 0}}; }

  const MinkVec3& vertex() const { return vertex_; }
  const MinkVec3& spine_dir() const { return s_; }
  std::pair<MinkVec3, MinkVec3> hinges() const { return hinge_dirs(s_); }
  /// Coordinates of q relative to the standard plane.
  MinkVec3 standardize(const MinkVec3& q) const { return from_eigen(to_standard_ * to_eigen(q - vertex_)); }
  MinkVec3 from_standard(const MinkVec3& q) const { return vertex_ + from_eigen(frame_ * to_eigen(q)); }

 private:
  MinkVec3 vertex_, s_;
  Eigen::Matrix3d frame_, to_standard_;
};

/// Stratum of a point in standard coordinates. Equations are tested on the
/// sup-normalised point; priority Vertex > Hinge > Spine > Wing > Stem.
inline Stratum classify_standard(const MinkVec3& p, double scale = 1.0,
                                 double tol = default_tolerances().membership) {
  const double n = p.sup_norm();
  if (n <= tol * std::max(1.0, scale)) return Stratum::Vertex;
  const double x = p.x / n;
  const double y = p.y / n;
  const double z = p.z / n;
  const bool x0 = std::abs(x) <= tol;
  if (x0 && std::abs(y - z) <= tol) return Stratum::Hinge1;
  if (x0 && std::abs(y + z) <= tol) return Stratum::Hinge2;
  if (std::abs(y) <= tol && std::abs(z) <= tol) return Stratum::Spine;
  if (std::abs(y - z) <= tol && x > tol) return Stratum::Wing1;
  if (std::abs(y + z) <= tol && x < -tol) return Stratum::Wing2;
  if (x0 && y * y - z * z < -tol) return Stratum::StemInterior;
  return Stratum::Outside;
}

inline Stratum membership(const CrookedPlaneE3& cp, const MinkVec3& q,
                          double tol = default_tolerances().membership) {
  const double scale = std::max(q.sup_norm(), cp.vertex().sup_norm());
  return classify_standard(cp.standardize(q), scale, tol);
}

inline MinkVec3 spine_point(const CrookedPlaneE3& cp, double t) { return cp.vertex() + t * cp.spine_dir(); }

struct IdealPoints {
  ProjectivePoint5 improper;
  std::pair<ProjectivePoint5, ProjectivePoint5> hingepoints;
};

/// Limits in Ein^3 of the hinge rays and of the spine. Along v + t n the
/// embedded point [v + t n : Q(v) + 2t v.n : 1] tends to [n : 2 v.n : 0].
inline IdealPoints closure_ideal_points(const CrookedPlaneE3& cp) {
  const auto [n1, n2] = cp.hinges();
  const MinkVec3& v = cp.vertex();
  auto limit = [&](const MinkVec3& n) {
    return ProjectivePoint5::unchecked(vec5(n.x, n.y, n.z, 2.0 * mink_dot(v, n), 0.0));
  };
  return {pinf(), {limit(n1), limit(n2)}};
}

}  // namespace crooked
