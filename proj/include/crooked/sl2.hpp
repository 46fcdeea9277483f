#pragma once

// 2x2 matrix algebra: sl(2,R) as the Lorentzian space R^{2,1}, the groups
// SL(2,R) and PSL(2,R), the exponential map and its logarithm.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "crooked/error.hpp"

namespace crooked {

/// Real 2x2 matrix [[a,b],[c,d]] (row-major).
struct Mat2 {
  double a = 0, b = 0, c = 0, d = 0;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
  static constexpr Mat2 zero() { return {0, 0, 0, 0}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr double trace() const { return a + d; }
  double sup_norm() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }
  /// Adjugate; equals the inverse when det = 1.
  constexpr Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 inverse() const {
    const double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  friend constexpr Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend constexpr Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend constexpr Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend constexpr Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend constexpr Mat2 operator*(const Mat2& x, double s) { return s * x; }
  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

inline double distance(const Mat2& x, const Mat2& y) { return (x - y).sup_norm(); }

/// A vector of R^{2,1} with quadratic form x^2 + y^2 - z^2; z is time.
struct MinkVec3 {
  double x = 0, y = 0, z = 0;

  friend constexpr MinkVec3 operator+(const MinkVec3& p, const MinkVec3& q) { return {p.x + q.x, p.y + q.y, p.z + q.z}; }
  friend constexpr MinkVec3 operator-(const MinkVec3& p, const MinkVec3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
  friend constexpr MinkVec3 operator-(const MinkVec3& p) { return {-p.x, -p.y, -p.z}; }
  friend constexpr MinkVec3 operator*(double s, const MinkVec3& p) { return {s * p.x, s * p.y, s * p.z}; }
  friend constexpr bool operator==(const MinkVec3&, const MinkVec3&) = default;

  double sup_norm() const { return std::max({std::abs(x), std::abs(y), std::abs(z)}); }
};

constexpr double mink_dot(const MinkVec3& p, const MinkVec3& q) { return p.x * q.x + p.y * q.y - p.z * q.z; }

/// Plain 3x3 determinant of the coordinate columns (p, q, r).
constexpr double mink_det(const MinkVec3& p, const MinkVec3& q, const MinkVec3& r) {
  return p.x * (q.y * r.z - q.z * r.y) - q.x * (p.y * r.z - p.z * r.y) + r.x * (p.y * q.z - p.z * q.y);
}

/// Traceless 2x2 matrix [[a,b],[c,-a]]: a tangent vector at the identity of
/// SL(2,R), or at any point through left translation.
class TangentSL2 {
 public:
  constexpr TangentSL2() = default;
  constexpr TangentSL2(double a, double b, double c) : a_(a), b_(b), c_(c) {}

  /// Accepts a matrix whose trace vanishes to `tol` relative to its size.
  static TangentSL2 from_matrix(const Mat2& m, double tol = 1e-12) {
    if (std::abs(m.trace()) > tol * std::max(1.0, m.sup_norm())) {
      fail(ErrorCode::NotTraceless, "trace " + std::to_string(m.trace()));
    }
    const double half = 0.5 * (m.a - m.d);
    return {half, m.b, m.c};
  }
  /// Traceless part of an arbitrary matrix.
  static constexpr TangentSL2 traceless_part(const Mat2& m) { return {0.5 * (m.a - m.d), m.b, m.c}; }

  constexpr double a() const { return a_; }
  constexpr double b() const { return b_; }
  constexpr double c() const { return c_; }
  constexpr Mat2 matrix() const { return {a_, b_, c_, -a_}; }
  double sup_norm() const { return std::max({std::abs(a_), std::abs(b_), std::abs(c_)}); }

  friend constexpr TangentSL2 operator+(const TangentSL2& p, const TangentSL2& q) {
    return {p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_};
  }
  friend constexpr TangentSL2 operator-(const TangentSL2& p, const TangentSL2& q) {
    return {p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_};
  }
  friend constexpr TangentSL2 operator-(const TangentSL2& p) { return {-p.a_, -p.b_, -p.c_}; }
  friend constexpr TangentSL2 operator*(double s, const TangentSL2& p) { return {s * p.a_, s * p.b_, s * p.c_}; }
  friend constexpr bool operator==(const TangentSL2&, const TangentSL2&) = default;

 private:
  double a_ = 0, b_ = 0, c_ = 0;
};

/// Element of SL(2,R): a point of the double cover of AdS^3.
class SL2 {
 public:
  constexpr SL2() : m_(Mat2::identity()) {}

  /// Validates |det - 1| <= tol.
  static SL2 checked(const Mat2& m, double tol = default_tolerances().det) {
    if (!std::isfinite(m.sup_norm()) || std::abs(m.det() - 1.0) > tol) {
      fail(ErrorCode::BadInput, "matrix is not in SL(2,R), det = " + std::to_string(m.det()));
    }
    return SL2(m);
  }
  /// Rescales a matrix of positive determinant onto SL(2,R).
  static SL2 normalized(const Mat2& m) {
    const double dt = m.det();
    if (!(dt > 0)) fail(ErrorCode::BadInput, "determinant must be positive to normalise");
    return SL2((1.0 / std::sqrt(dt)) * m);
  }
  /// No validation: callers guarantee det = 1 up to rounding.
  static constexpr SL2 unchecked(const Mat2& m) { return SL2(m); }

  constexpr const Mat2& matrix() const { return m_; }
  constexpr double trace() const { return m_.trace(); }
  constexpr SL2 inverse() const { return SL2(m_.adjugate()); }

  friend constexpr SL2 operator*(const SL2& x, const SL2& y) { return SL2(x.m_ * y.m_); }
  friend constexpr SL2 operator-(const SL2& x) { return SL2(-x.m_); }

 private:
  constexpr explicit SL2(const Mat2& m) : m_(m) {}
  Mat2 m_;
};

namespace detail {
constexpr double kSignZero = 1e-12;

/// Sign making the first entry (in a,b,c,d order) that is clearly nonzero positive.
inline double canonical_sign(const Mat2& m) {
  const double scale = std::max(m.sup_norm(), 1e-300);
  for (double v : {m.a, m.b, m.c, m.d}) {
    if (std::abs(v) > kSignZero * scale) return v > 0 ? 1.0 : -1.0;
  }
  return 1.0;
}
}  // namespace detail

/// Element of PSL(2,R) = SL(2,R)/{+-1}; a point of AdS^3.
class PSL2 {
 public:
  constexpr PSL2() = default;
  explicit PSL2(const SL2& g) : rep_(SL2::unchecked(detail::canonical_sign(g.matrix()) * g.matrix())) {}

  /// Canonical representative: first clearly nonzero entry positive.
  const SL2& rep() const { return rep_; }
  const Mat2& matrix() const { return rep_.matrix(); }
  PSL2 inverse() const { return PSL2(rep_.inverse()); }

  friend PSL2 operator*(const PSL2& x, const PSL2& y) { return PSL2(x.rep_ * y.rep_); }

  /// Distance up to sign.
  friend double distance(const PSL2& x, const PSL2& y) {
    return std::min(distance(x.matrix(), y.matrix()), distance(x.matrix(), -y.matrix()));
  }

 private:
  SL2 rep_;
};

inline bool approx_equal(const PSL2& x, const PSL2& y, double tol = 1e-9) {
  const double scale = std::max({1.0, x.matrix().sup_norm(), y.matrix().sup_norm()});
  return distance(x, y) <= tol * scale;
}

/// Homogeneous pair [u:v] of the real projective line.
class RP1Point {
 public:
  RP1Point(double u, double v) {
    const double n = std::max(std::abs(u), std::abs(v));
    if (!(n > 0)) fail(ErrorCode::ZeroVector, "[0:0] is not a point of RP^1");
    u /= n;
    v /= n;
    const double lead = std::abs(u) > detail::kSignZero ? u : v;
    const double s = lead < 0 ? -1.0 : 1.0;
    u_ = s * u;
    v_ = s * v;
  }
  double u() const { return u_; }
  double v() const { return v_; }
  friend bool approx_equal(const RP1Point& p, const RP1Point& q, double tol = 1e-9) {
    return std::abs(p.u_ * q.v_ - p.v_ * q.u_) <= tol;
  }

 private:
  double u_ = 1, v_ = 0;
};

// ---------------------------------------------------------------------------
// Constants table.

/// (A x B) . C = kTripleProductSign * det[mink(A), mink(B), mink(C)] when
/// A x B is half the Lie bracket and mink is the identification below.
inline constexpr double kTripleProductSign = -1.0;
/// Rotation generator [[0,-1],[1,0]]; its exponential is E_theta.
inline constexpr TangentSL2 kRotationGenerator{0.0, -1.0, 1.0};
/// Future-pointing unit timelike vector, Minkowski (0,0,1).
inline constexpr TangentSL2 kFutureUnitTimelike{0.0, 1.0, -1.0};
/// Unit spacelike diag(1,-1), Minkowski (1,0,0).
inline constexpr TangentSL2 kDiagonalUnit{1.0, 0.0, 0.0};

// ---------------------------------------------------------------------------
// sl(2,R) as a Lorentzian vector space.

/// [[a,b],[c,-a]] -> (a, (b+c)/2, (b-c)/2).
constexpr MinkVec3 sl2_to_mink(const TangentSL2& xi) {
  return {xi.a(), 0.5 * (xi.b() + xi.c()), 0.5 * (xi.b() - xi.c())};
}
constexpr TangentSL2 mink_to_sl2(const MinkVec3& v) { return {v.x, v.y + v.z, v.y - v.z}; }

/// Polarisation of -det, equal to tr(AB)/2.
constexpr double lorentz_dot(const TangentSL2& p, const TangentSL2& q) {
  return p.a() * q.a() + 0.5 * (p.b() * q.c() + p.c() * q.b());
}

inline Mat2 bracket(const Mat2& x, const Mat2& y) { return x * y - y * x; }

/// Half the Lie bracket.
inline TangentSL2 cross(const TangentSL2& p, const TangentSL2& q) {
  return TangentSL2::traceless_part(0.5 * bracket(p.matrix(), q.matrix()));
}

/// Determinant of the Minkowski coordinate columns.
constexpr double det3(const TangentSL2& p, const TangentSL2& q, const TangentSL2& r) {
  return mink_det(sl2_to_mink(p), sl2_to_mink(q), sl2_to_mink(r));
}

/// Adjoint action g xi g^{-1}.
inline TangentSL2 adjoint(const SL2& g, const TangentSL2& xi) {
  return TangentSL2::traceless_part(g.matrix() * xi.matrix() * g.inverse().matrix());
}

enum class VectorType { Spacelike, Timelike, Null };

constexpr std::string_view to_string(VectorType t) {
  switch (t) {
    case VectorType::Spacelike: return "Spacelike";
    case VectorType::Timelike: return "Timelike";
    case VectorType::Null: return "Null";
  }
  return "?";
}

inline VectorType classify(const TangentSL2& xi, double eps = default_tolerances().near_null) {
  const double q = lorentz_dot(xi, xi);
  const double scale = std::max(1.0, xi.sup_norm() * xi.sup_norm());
  if (q > eps * scale) return VectorType::Spacelike;
  if (q < -eps * scale) return VectorType::Timelike;
  return VectorType::Null;
}

inline bool is_future(const TangentSL2& xi) { return sl2_to_mink(xi).z > 0; }

// ---------------------------------------------------------------------------
// Exponential and logarithm.

/// Closed form: exp(xi) = C(q) 1 + S(q) xi with q = xi.xi, where
/// (C,S) = (cosh r, sinh r / r) for q = r^2 > 0 and (cos r, sin r / r) for q = -r^2.
inline SL2 exp_sl2(const TangentSL2& xi, double eps = default_tolerances().near_null) {
  const double q = lorentz_dot(xi, xi);
  double c_coef = 1.0;
  double s_coef = 1.0;
  if (std::abs(q) <= eps) {
    c_coef = 1.0 + q / 2.0 + q * q / 24.0;
    s_coef = 1.0 + q / 6.0 + q * q / 120.0;
  } else if (q > 0) {
    const double r = std::sqrt(q);
    c_coef = std::cosh(r);
    s_coef = std::sinh(r) / r;
  } else {
    const double r = std::sqrt(-q);
    c_coef = std::cos(r);
    s_coef = std::sin(r) / r;
  }
  return SL2::unchecked(c_coef * Mat2::identity() + s_coef * xi.matrix());
}

/// Scaling-and-squaring Taylor series in extended precision. Independent of
/// the closed form; used to check it.
inline SL2 exp_series_oracle(const TangentSL2& xi) {
  if (xi.sup_norm() > 20.0) fail(ErrorCode::NormTooLarge, "series oracle accepts |xi|_sup <= 20");
  using LD = long double;
  std::array<LD, 4> x{xi.a(), xi.b(), xi.c(), -xi.a()};
  int squarings = 0;
  LD norm = static_cast<LD>(xi.sup_norm());
  while (norm > 0.25L) {
    norm /= 2;
    ++squarings;
  }
  const LD scale = std::ldexp(1.0L, -squarings);
  for (auto& v : x) v *= scale;
  auto mul = [](const std::array<LD, 4>& p, const std::array<LD, 4>& q) {
    return std::array<LD, 4>{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
                             p[2] * q[1] + p[3] * q[3]};
  };
  std::array<LD, 4> sum{1, 0, 0, 1};
  std::array<LD, 4> term{1, 0, 0, 1};
  // |x| <= 1/4 in sup norm, so the 2x2 operator norm is <= 1/2 and 30 terms
  // leave a remainder far below long double epsilon.
  for (int k = 1; k <= 30; ++k) {
    term = mul(term, x);
    for (auto& v : term) v /= k;
    for (int i = 0; i < 4; ++i) sum[i] += term[i];
  }
  for (int i = 0; i < squarings; ++i) sum = mul(sum, sum);
  return SL2::unchecked({static_cast<double>(sum[0]), static_cast<double>(sum[1]), static_cast<double>(sum[2]),
                         static_cast<double>(sum[3])});
}

namespace detail {
/// arccosh(c)/sinh(arccosh c) for c >= 1, arccos(c)/sin(arccos c) for |c| < 1,
/// with the common Taylor expansion near c = 1.
inline double log_factor(double c) {
  const double e = c - 1.0;
  if (std::abs(e) < 1e-8) return 1.0 - e / 3.0;
  if (c > 1.0) {
    const double r = std::acosh(c);
    return r / std::sinh(r);
  }
  const double r = std::acos(std::clamp(c, -1.0, 1.0));
  return r / std::sin(r);
}
}  // namespace detail

/// Logarithm in SL(2,R): xi with exp(xi) = g, when g lies on a geodesic
/// through the identity (tr g > -2, or g = -1). For g = -1 returns pi*K.
inline std::optional<TangentSL2> geodesic_connect_dbl(const SL2& g, double tol = 1e-9) {
  const Mat2& m = g.matrix();
  if (distance(m, -Mat2::identity()) <= tol) return std::numbers::pi * kRotationGenerator;
  const double c = 0.5 * m.trace();
  if (c <= -1.0 + tol) return std::nullopt;
  const TangentSL2 centered = TangentSL2::traceless_part(m);
  return detail::log_factor(c) * centered;
}

/// Point x + iy of the upper half plane as an involution of PSL(2,R).
inline PSL2 h2_embed(double x, double y) {
  if (!(y > 0)) fail(ErrorCode::NotUpperHalfplane, "y must be positive");
  return PSL2(SL2::unchecked((1.0 / y) * Mat2{x, -(x * x + y * y), 1.0, -x}));
}

/// J(t) = [[0,-e^t],[e^{-t},0]], the image of e^t i.
inline SL2 hyperbolic_geodesic_point(double t) { return SL2::unchecked({0.0, -std::exp(t), std::exp(-t), 0.0}); }

/// Kernel and image of a rank-one matrix, as points of RP^1.
inline std::pair<RP1Point, RP1Point> rank1_kernel_image(const Mat2& m, double tol = 1e-9) {
  const double n = m.sup_norm();
  if (!(n > 0) || std::abs(m.det()) > tol * n * n) fail(ErrorCode::NotRankOne, "matrix does not have rank one");
  const bool first_row = std::hypot(m.a, m.b) >= std::hypot(m.c, m.d);
  const double r1 = first_row ? m.a : m.c;
  const double r2 = first_row ? m.b : m.d;
  const bool first_col = std::hypot(m.a, m.c) >= std::hypot(m.b, m.d);
  const double c1 = first_col ? m.a : m.b;
  const double c2 = first_col ? m.c : m.d;
  return {RP1Point(r2, -r1), RP1Point(c1, c2)};
}

/// Whether span(p,q) is closed under the double bracket [[s,s],s].
inline bool lie_triple_check(const TangentSL2& p, const TangentSL2& q, double tol = 1e-9) {
  auto euclid = [](const TangentSL2& v) {
    const MinkVec3 m = sl2_to_mink(v);
    return std::sqrt(m.x * m.x + m.y * m.y + m.z * m.z);
  };
  const MinkVec3 mp = sl2_to_mink(p);
  const MinkVec3 mq = sl2_to_mink(q);
  const MinkVec3 euclid_cross{mp.y * mq.z - mp.z * mq.y, mp.z * mq.x - mp.x * mq.z, mp.x * mq.y - mp.y * mq.x};
  const double area = std::sqrt(mink_dot(euclid_cross, euclid_cross) + 2 * euclid_cross.z * euclid_cross.z);
  if (area <= tol * euclid(p) * euclid(q)) fail(ErrorCode::DependentPair, "vectors do not span a plane");
  const Mat2 pq = bracket(p.matrix(), q.matrix());
  for (const TangentSL2& v : {p, q}) {
    const TangentSL2 w = TangentSL2::traceless_part(bracket(pq, v.matrix()));
    const double scale = euclid(p) * euclid(q) * euclid(w);
    if (scale == 0) continue;
    if (std::abs(det3(p, q, w)) > tol * scale) return false;
  }
  return true;
}

}  // namespace crooked
