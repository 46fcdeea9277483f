#pragma once

// R^{3,2} with Q = X^2 + Y^2 - Z^2 - UV, and the Einstein universe Ein^3 as
// its projectivised null cone: points, incidence, photons, spacelike circles,
// Einstein hyperspheres and conformal maps.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "crooked/error.hpp"

namespace crooked {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

enum Coord : int { kX = 0, kY = 1, kZ = 2, kU = 3, kV = 4 };

inline Vec5 vec5(double x, double y, double z, double u, double v) {
  Vec5 r;
  r << x, y, z, u, v;
  return r;
}

/// Gram matrix of the bilinear form polarising Q.
inline const Mat5& gram() {
  static const Mat5 g = [] {
    Mat5 m = Mat5::Zero();
    m(kX, kX) = 1;
    m(kY, kY) = 1;
    m(kZ, kZ) = -1;
    m(kU, kV) = -0.5;
    m(kV, kU) = -0.5;
    return m;
  }();
  return g;
}

inline double q_form(const Vec5& v) { return v[kX] * v[kX] + v[kY] * v[kY] - v[kZ] * v[kZ] - v[kU] * v[kV]; }

inline double b_form(const Vec5& v, const Vec5& w) {
  return v[kX] * w[kX] + v[kY] * w[kY] - v[kZ] * w[kZ] - 0.5 * (v[kU] * w[kV] + w[kU] * v[kV]);
}

inline double sup_norm(const Vec5& v) { return v.cwiseAbs().maxCoeff(); }

namespace detail {
constexpr double kLeadZero = 1e-12;

/// Sup-norm 1, first clearly nonzero coordinate positive.
inline Vec5 canonicalize(const Vec5& v) {
  const double n = sup_norm(v);
  Vec5 r = v / n;
  for (int i = 0; i < 5; ++i) {
    if (std::abs(r[i]) > kLeadZero) {
      if (r[i] < 0) r = -r;
      break;
    }
  }
  return r;
}
}  // namespace detail

/// A null line of R^{3,2}, stored through its canonical representative.
class ProjectivePoint5 {
 public:
  /// Canonicalises without testing nullity; callers own the invariant.
  static ProjectivePoint5 unchecked(const Vec5& v) {
    if (!(sup_norm(v) > 0) || !v.allFinite()) fail(ErrorCode::ZeroVector, "zero or non-finite representative");
    return ProjectivePoint5(detail::canonicalize(v));
  }

  const Vec5& rep() const { return rep_; }
  double operator[](int i) const { return rep_[i]; }

 private:
  explicit ProjectivePoint5(const Vec5& v) : rep_(v) {}
  Vec5 rep_;
};

inline ProjectivePoint5 point(const Vec5& v, double tol = default_tolerances().null) {
  const double n = sup_norm(v);
  if (!(n > 0)) fail(ErrorCode::ZeroVector, "zero vector has no projective class");
  if (!v.allFinite()) fail(ErrorCode::BadInput, "non-finite coordinates");
  if (std::abs(q_form(v)) > tol * n * n) fail(ErrorCode::NotNull, "Q(v) = " + std::to_string(q_form(v)));
  return ProjectivePoint5::unchecked(v);
}

/// Projective distance, insensitive to the representative sign.
inline double projective_distance(const ProjectivePoint5& p, const ProjectivePoint5& q) {
  return std::min(sup_norm(p.rep() - q.rep()), sup_norm(p.rep() + q.rep()));
}

inline bool approx_equal(const ProjectivePoint5& p, const ProjectivePoint5& q,
                         double tol = default_tolerances().proj) {
  return projective_distance(p, q) <= tol;
}

// Standard points.
inline ProjectivePoint5 p0() { return ProjectivePoint5::unchecked(vec5(0, 0, 0, 0, 1)); }
inline ProjectivePoint5 pinf() { return ProjectivePoint5::unchecked(vec5(0, 0, 0, 1, 0)); }
inline ProjectivePoint5 p1() { return ProjectivePoint5::unchecked(vec5(0, 1, 1, 0, 0)); }
inline ProjectivePoint5 p2() { return ProjectivePoint5::unchecked(vec5(0, 1, -1, 0, 0)); }

inline bool incident(const ProjectivePoint5& p, const ProjectivePoint5& q,
                     double tol = default_tolerances().incidence) {
  return std::abs(b_form(p.rep(), q.rep())) <= tol;
}

// ---------------------------------------------------------------------------
// Subspace helpers.

namespace detail {

/// Orthonormal (Euclidean) basis of the column span, rank cut at `rel_tol`.
inline Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& cols, double rel_tol = 1e-9) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] > rel_tol * std::max(top, 1e-300)) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

/// B-orthogonal complement of the column span, orthonormal in the Euclidean sense.
inline Eigen::MatrixXd b_complement(const Eigen::MatrixXd& cols) {
  const Eigen::MatrixXd rows = cols.transpose() * gram();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] > 1e-9 * std::max(s[0], 1e-300)) ++rank;
  }
  return svd.matrixV().rightCols(5 - rank);
}

/// Euclidean distance from a unit-normalised v to an orthonormal span.
inline double span_residual(const Eigen::MatrixXd& onb, const Vec5& v) {
  const Vec5 u = v / v.norm();
  return (u - onb * (onb.transpose() * u)).norm();
}

}  // namespace detail

/// Counts of positive, negative and zero eigenvalues of the restricted form.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of B on the span of `cols` (orthonormalised first).
inline Signature signature_of_span(const Eigen::MatrixXd& cols, double zero_tol = 1e-9) {
  const Eigen::MatrixXd onb = detail::orthonormal_span(cols);
  const Eigen::MatrixXd g = onb.transpose() * gram() * onb;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  Signature sig;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()[i];
    if (l > zero_tol) {
      ++sig.positive;
    } else if (l < -zero_tol) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Photons.

/// Projectivised isotropic 2-plane.
class PhotonLine {
 public:
  PhotonLine(const Vec5& b1, const Vec5& b2) : b1_(b1), b2_(b2) {}
  const Vec5& first() const { return b1_; }
  const Vec5& second() const { return b2_; }
  /// Point a*b1 + b*b2.
  ProjectivePoint5 at(double a, double b) const { return ProjectivePoint5::unchecked(a * b1_ + b * b2_); }
  bool contains(const ProjectivePoint5& p, double tol = default_tolerances().subspace) const {
    Eigen::Matrix<double, 5, 2> m;
    m << b1_, b2_;
    return detail::span_residual(detail::orthonormal_span(m), p.rep()) <= tol;
  }

 private:
  Vec5 b1_, b2_;
};

inline PhotonLine photon_through(const ProjectivePoint5& p, const ProjectivePoint5& q) {
  if (approx_equal(p, q)) fail(ErrorCode::SamePoint, "a photon needs two distinct points");
  if (!incident(p, q)) fail(ErrorCode::NotIncident, "B(p,q) = " + std::to_string(b_form(p.rep(), q.rep())));
  return {p.rep(), q.rep()};
}

/// The point of the photon with U = V.
inline ProjectivePoint5 photon_meets_fixed_set(const PhotonLine& phi, double tol = default_tolerances().subspace) {
  const double f1 = phi.first()[kU] - phi.first()[kV];
  const double f2 = phi.second()[kU] - phi.second()[kV];
  const double scale = std::max(sup_norm(phi.first()), sup_norm(phi.second()));
  if (std::abs(f1) <= tol * scale && std::abs(f2) <= tol * scale) {
    fail(ErrorCode::PhotonInsideHypersurface, "photon lies in U = V");
  }
  Vec5 r = f2 * phi.first() - f1 * phi.second();
  // The U and V entries agree in exact arithmetic; remove the rounding.
  const double mean = 0.5 * (r[kU] + r[kV]);
  r[kU] = mean;
  r[kV] = mean;
  return ProjectivePoint5::unchecked(r);
}

// ---------------------------------------------------------------------------
// Spacelike circles and hyperspheres.

/// Projectivised null cone of a signature-(2,1) subspace F.
class SpacelikeCircle {
 public:
  /// `onb` is a Euclidean-orthonormal basis of F (three columns).
  explicit SpacelikeCircle(Eigen::Matrix<double, 5, 3> onb) : onb_(std::move(onb)) {
    const Eigen::Matrix3d g = onb_.transpose() * gram() * onb_;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(g);
    const auto& l = es.eigenvalues();
    const auto& v = es.eigenvectors();
    if (!(l[0] < -1e-9 && l[1] > 1e-9)) fail(ErrorCode::WrongSignature, "subspace is not of signature (2,1)");
    time_ = onb_ * v.col(0) / std::sqrt(-l[0]);
    space1_ = onb_ * v.col(1) / std::sqrt(l[1]);
    space2_ = onb_ * v.col(2) / std::sqrt(l[2]);
  }

  const Eigen::Matrix<double, 5, 3>& basis() const { return onb_; }

  bool contains(const ProjectivePoint5& p, double tol = default_tolerances().subspace) const {
    const double n = sup_norm(p.rep());
    if (std::abs(q_form(p.rep())) > default_tolerances().null * n * n) return false;
    return detail::span_residual(onb_, p.rep()) <= tol;
  }

  /// Null direction at angle theta: cos * e1 + sin * e2 + e3 in a B-orthonormal frame.
  ProjectivePoint5 at(double theta) const {
    return ProjectivePoint5::unchecked(std::cos(theta) * space1_ + std::sin(theta) * space2_ + time_);
  }

 private:
  Eigen::Matrix<double, 5, 3> onb_;
  Vec5 time_, space1_, space2_;
};

/// F = span(p,q)^perp for a non-incident pair.
inline SpacelikeCircle spacelike_circle_dual(const ProjectivePoint5& p, const ProjectivePoint5& q) {
  if (incident(p, q)) fail(ErrorCode::IncidentPair, "dual circle needs a non-incident pair");
  Eigen::Matrix<double, 5, 2> m;
  m << p.rep(), q.rep();
  const Eigen::MatrixXd comp = detail::b_complement(m);
  if (comp.cols() != 3) fail(ErrorCode::DegenerateSpan, "complement is not three-dimensional");
  return SpacelikeCircle(comp);
}

/// Einstein hypersphere: projectivised null cone of a signature-(2,2) subspace.
class EinsteinHypersphere {
 public:
  explicit EinsteinHypersphere(Eigen::Matrix<double, 5, 4> onb) : onb_(std::move(onb)) {}
  const Eigen::Matrix<double, 5, 4>& basis() const { return onb_; }
  bool contains(const ProjectivePoint5& p, double tol = default_tolerances().subspace) const {
    return detail::span_residual(onb_, p.rep()) <= tol;
  }
  /// Unit spacelike normal (B(n,n) = 1), sign unspecified.
  Vec5 normal() const {
    Vec5 n = detail::b_complement(onb_).col(0);
    return n / std::sqrt(b_form(n, n));
  }

 private:
  Eigen::Matrix<double, 5, 4> onb_;
};

inline EinsteinHypersphere hypersphere_through(const ProjectivePoint5& q0, const ProjectivePoint5& qinf,
                                               const ProjectivePoint5& q1, const ProjectivePoint5& q2) {
  Eigen::Matrix<double, 5, 4> m;
  m << q0.rep(), qinf.rep(), q1.rep(), q2.rep();
  const Eigen::MatrixXd onb = detail::orthonormal_span(m);
  if (onb.cols() != 4) fail(ErrorCode::DegenerateSpan, "points span a subspace of dimension " + std::to_string(onb.cols()));
  const Signature sig = signature_of_span(onb);
  if (!(sig == Signature{2, 2, 0})) fail(ErrorCode::WrongSignature, "span is not of signature (2,2)");
  return EinsteinHypersphere(onb);
}

// ---------------------------------------------------------------------------
// Conformal maps.

/// Linear map of R^{3,2} preserving B; acts on Ein^3.
class ConformalMap5 {
 public:
  ConformalMap5() : m_(Mat5::Identity()) {}
  explicit ConformalMap5(const Mat5& m) : m_(m) {}

  static ConformalMap5 checked(const Mat5& m, double tol = default_tolerances().orth) {
    ConformalMap5 t(m);
    if (t.orth_residual() > tol) fail(ErrorCode::BadInput, "matrix does not preserve the form");
    return t;
  }

  const Mat5& matrix() const { return m_; }
  double determinant() const { return m_.determinant(); }
  double orth_residual() const { return (m_.transpose() * gram() * m_ - gram()).cwiseAbs().maxCoeff(); }

  Vec5 apply(const Vec5& v) const { return m_ * v; }
  ProjectivePoint5 apply(const ProjectivePoint5& p) const { return ProjectivePoint5::unchecked(m_ * p.rep()); }
  /// G^{-1} M^T G.
  ConformalMap5 inverse() const { return ConformalMap5(gram().inverse() * m_.transpose() * gram()); }

  friend ConformalMap5 operator*(const ConformalMap5& a, const ConformalMap5& b) { return ConformalMap5(a.m_ * b.m_); }

 private:
  Mat5 m_;
};

/// Swap of U and V.
inline ConformalMap5 inversion_map() {
  Mat5 m = Mat5::Identity();
  m(kU, kU) = 0;
  m(kV, kV) = 0;
  m(kU, kV) = 1;
  m(kV, kU) = 1;
  return ConformalMap5(m);
}

// ---------------------------------------------------------------------------
// Normalisation of stem configurations.

/// Ordered quadruple (q0, qinf; q1, q2).
struct Configuration {
  ProjectivePoint5 q0, qinf, q1, q2;
};

inline Configuration standard_configuration() { return {p0(), pinf(), p1(), p2()}; }

inline void validate_configuration(const Configuration& c) {
  if (incident(c.q0, c.qinf)) fail(ErrorCode::InvalidConfiguration, "q0 and qinf are incident");
  if (approx_equal(c.q1, c.q2)) fail(ErrorCode::InvalidConfiguration, "hingepoints coincide");
  for (const auto* q : {&c.q1, &c.q2}) {
    if (!incident(*q, c.q0) || !incident(*q, c.qinf)) {
      fail(ErrorCode::InvalidConfiguration, "hingepoints must be incident to q0 and qinf");
    }
  }
  if (incident(c.q1, c.q2)) fail(ErrorCode::InvalidConfiguration, "hingepoints are incident");
}

namespace detail {

/// Time-like coordinate change used for points off every chart below:
/// rotation by 90 degrees in the (Z, (U+V)/2) plane, written in (Z,U,V).
inline Vec5 rotate_z_s(const Vec5& v) {
  const double s = 0.5 * (v[kU] + v[kV]);
  const double t = 0.5 * (v[kV] - v[kU]);
  const double z2 = s;
  const double s2 = -v[kZ];
  return vec5(v[kX], v[kY], z2, s2 - t, s2 + t);
}

enum class Chart { Psi, Minkowski, Inverted, Rotated };

inline Chart chart_for(const Vec5& r) {
  const double n = sup_norm(r);
  const double eps = default_tolerances().patch * n;
  if (std::abs(r[kV] - r[kU]) > 1e-6 * n) return Chart::Psi;
  if (std::abs(r[kV]) > eps) return Chart::Minkowski;
  if (std::abs(r[kU]) > eps) return Chart::Inverted;
  return Chart::Rotated;
}

inline Vec5 to_minkowski_chart(Chart c, const Vec5& r) {
  switch (c) {
    case Chart::Inverted: return inversion_map().apply(r);
    case Chart::Rotated: return rotate_z_s(r);
    default: return r;
  }
}

/// Sign for r0 making it positive in its chart.
inline double chart_sign(Chart c, const Vec5& r) {
  if (c == Chart::Psi) return r[kV] - r[kU] > 0 ? 1.0 : -1.0;
  const Vec5 m = to_minkowski_chart(c, r);
  return m[kV] > 0 ? 1.0 : -1.0;
}

/// Time component of the derivative at t = 0 of the chart image of r0 + t r1,
/// up to a positive factor.
inline double hinge_time(Chart c, const Vec5& r0, const Vec5& r1) {
  if (c == Chart::Psi) {
    // psi_inverse(v) = N(v)/(V-U), N linear; d/dt at 0 is (N1 D0 - N0 D1)/D0^2.
    // Left-translate by psi_inverse(r0)^{-1} and read the z coordinate.
    auto num = [](const Vec5& v) {
      return std::array<double, 4>{2 * v[kX] + v[kU] + v[kV], 2 * (v[kY] + v[kZ]), 2 * (v[kY] - v[kZ]),
                                   -2 * v[kX] + v[kU] + v[kV]};
    };
    const double d0 = r0[kV] - r0[kU];
    const double d1 = r1[kV] - r1[kU];
    const auto n0 = num(r0);
    const auto n1 = num(r1);
    std::array<double, 4> g{};  // psi_inverse(r0)
    std::array<double, 4> dg{};
    for (int i = 0; i < 4; ++i) {
      g[i] = n0[i] / d0;
      dg[i] = (n1[i] * d0 - n0[i] * d1) / (d0 * d0);
    }
    // xi = g^{-1} dg with g^{-1} = [[d,-b],[-c,a]]; z = (xi_b - xi_c)/2.
    const double xb = g[3] * dg[1] - g[1] * dg[3];
    const double xc = -g[2] * dg[0] + g[0] * dg[2];
    return 0.5 * (xb - xc);
  }
  const Vec5 m0 = to_minkowski_chart(c, r0);
  const Vec5 m1 = to_minkowski_chart(c, r1);
  return m1[kZ] * m0[kV] - m0[kZ] * m1[kV];
}

}  // namespace detail

/// Conformal map T in the identity component of O(3,2) sending the
/// configuration to (p0, pinf, p1, p2). See the README for the sign rule.
inline ConformalMap5 normalize_to_standard(const Configuration& cfg) {
  validate_configuration(cfg);
  const detail::Chart chart = detail::chart_for(cfg.q0.rep());
  // Representatives of each pair get equal sup norms; this keeps T as well
  // conditioned as the configuration allows.
  Vec5 r0 = detail::chart_sign(chart, cfg.q0.rep()) * cfg.q0.rep();
  r0 /= std::sqrt(2.0 * std::abs(b_form(r0, cfg.qinf.rep())));
  Vec5 rinf = cfg.qinf.rep();
  rinf *= -0.5 / b_form(r0, rinf);

  Vec5 r1 = cfg.q1.rep();
  const double ht = detail::hinge_time(chart, r0, r1);
  if (!(std::abs(ht) > 0)) fail(ErrorCode::InvalidConfiguration, "hinge direction is degenerate");
  if (ht < 0) r1 = -r1;
  r1 /= std::sqrt(0.5 * std::abs(b_form(r1, cfg.q2.rep())));
  Vec5 r2 = cfg.q2.rep();
  r2 *= 2.0 / b_form(r1, r2);

  Eigen::Matrix<double, 5, 4> four;
  four << r0, rinf, r1, r2;
  const Eigen::MatrixXd comp = detail::b_complement(four);
  if (comp.cols() != 1) fail(ErrorCode::InvalidConfiguration, "configuration does not span a hypersphere");
  Vec5 rx = comp.col(0);
  const double qx = b_form(rx, rx);
  if (!(qx > 0)) fail(ErrorCode::InvalidConfiguration, "normal of the hypersphere is not spacelike");
  rx /= std::sqrt(qx);

  Mat5 s;
  s.col(kX) = rx;
  s.col(kY) = 0.5 * (r1 + r2);
  s.col(kZ) = 0.5 * (r1 - r2);
  s.col(kU) = rinf;
  s.col(kV) = r0;
  if (s.determinant() < 0) s.col(kX) = -rx;
  return ConformalMap5(s).inverse();
}

}  // namespace crooked
