#pragma once

// AdS^3 = PSL(2,R) and its double cover SL(2,R). Tangent vectors at g are
// left-translated: the geodesic with data xi is t -> g exp(t xi).

#include <cmath>
#include <numbers>

#include "crooked/sl2.hpp"

namespace crooked {

using AdSPoint = PSL2;
using HatAdSPoint = SL2;

struct AdSTangent {
  SL2 base;
  TangentSL2 xi;
};

/// (g1, g2) acting by x -> g1 x g2^{-1}.
struct IsometryG0 {
  SL2 g1, g2;

  SL2 apply(const SL2& x) const { return g1 * x * g2.inverse(); }
  AdSPoint apply(const AdSPoint& x) const { return AdSPoint(apply(x.rep())); }
  friend IsometryG0 operator*(const IsometryG0& a, const IsometryG0& b) { return {a.g1 * b.g1, a.g2 * b.g2}; }
};

inline AdSPoint act(const IsometryG0& phi, const AdSPoint& x) { return phi.apply(x); }
inline HatAdSPoint act(const IsometryG0& phi, const HatAdSPoint& x) { return phi.apply(x); }

inline SL2 exp_at(const SL2& p, const TangentSL2& xi) { return p * exp_sl2(xi); }
inline AdSPoint exp_at(const AdSPoint& p, const TangentSL2& xi) { return AdSPoint(p.rep() * exp_sl2(xi)); }

/// Geodesic symmetry g x^{-1} g.
inline AdSPoint symmetry(const AdSPoint& g, const AdSPoint& x) {
  return AdSPoint(g.rep() * x.rep().inverse() * g.rep());
}

/// Transvection exp(t xi / 2) x exp(t xi / 2) along the geodesic exp(t xi).
inline SL2 transvection(const TangentSL2& xi, double t, const SL2& x) {
  const SL2 h = exp_sl2(0.5 * t * xi);
  return h * x * h;
}
inline AdSPoint transvection(const TangentSL2& xi, double t, const AdSPoint& x) {
  return AdSPoint(transvection(xi, t, x.rep()));
}

/// h lies in the dual plane g* = g Inv iff g^{-1} h has trace 0.
inline bool dual_plane_contains(const AdSPoint& g, const AdSPoint& h, double tol = 1e-9) {
  const Mat2 m = (g.rep().inverse() * h.rep()).matrix();
  return std::abs(m.trace()) <= tol * std::max(1.0, m.sup_norm());
}

/// Timelike v of length pi/2 exponentiates into g*.
inline bool dual_plane_radius_check(const AdSPoint& g, const TangentSL2& v, double tol = 1e-9) {
  if (classify(v) != VectorType::Timelike) fail(ErrorCode::NotTimelike, "radius check needs a timelike vector");
  constexpr double target = -std::numbers::pi * std::numbers::pi / 4.0;
  if (std::abs(lorentz_dot(v, v) - target) > tol * std::abs(target)) return false;
  return dual_plane_contains(g, exp_at(g, v), tol);
}

namespace detail {

/// k in SL(2,R) whose first column spans ker(n) = im(n), for null n != 0.
inline SL2 null_frame(const TangentSL2& n) {
  const Mat2 m = n.matrix();
  const bool first = std::hypot(m.a, m.c) >= std::hypot(m.b, m.d);
  double v1 = first ? m.a : m.b;
  double v2 = first ? m.c : m.d;
  const double len = std::hypot(v1, v2);
  v1 /= len;
  v2 /= len;
  return SL2::unchecked({v1, -v2, v2, v1});
}

inline void require_null(const TangentSL2& n) {
  if (!(n.sup_norm() > 0) || classify(n, 1e-9) != VectorType::Null) {
    fail(ErrorCode::NotNull, "null geodesic needs a nonzero null direction");
  }
}

}  // namespace detail

/// Totally geodesic null plane Exp_p(n^perp) through the null geodesic
/// t -> p exp(t n). Membership: k^{-1} p^{-1} x k is upper triangular.
class NullPlane {
 public:
  NullPlane(const SL2& p, const TangentSL2& n) : p_(p), n_(n) {
    detail::require_null(n);
    k_ = detail::null_frame(n);
  }

  /// k^{-1} p^{-1} x k.
  Mat2 standardized(const SL2& x) const { return (k_.inverse() * p_.inverse() * x * k_).matrix(); }

  bool contains(const AdSPoint& x, double tol = default_tolerances().membership) const {
    const Mat2 m = standardized(x.rep());
    return std::abs(m.c) <= tol * std::max(1.0, m.sup_norm());
  }

  /// Left-translated logarithm at p of a point of the plane, lying in n^perp.
  TangentSL2 log(const AdSPoint& x) const {
    Mat2 m = standardized(x.rep());
    if (m.a < 0) m = -m;
    const double alpha = std::log(m.a);
    const double beta = std::abs(alpha) < 1e-12 ? m.b : m.b * alpha / std::sinh(alpha);
    return adjoint(k_, TangentSL2(alpha, beta, 0.0));
  }

  const SL2& base() const { return p_; }
  const TangentSL2& direction() const { return n_; }
  const SL2& frame() const { return k_; }

 private:
  SL2 p_;
  TangentSL2 n_;
  SL2 k_;
};

inline NullPlane null_plane(const AdSPoint& p, const TangentSL2& n) { return NullPlane(p.rep(), n); }

/// Wing W(l) = Exp_p{ w in n^perp : det3(v, u, w) > 0 }, v the future
/// multiple of n and u = Ad_k(-K) the transported future unit timelike vector.
class WingPredicate {
 public:
  WingPredicate(const SL2& p, const TangentSL2& n) : plane_(p, n) {
    v_ = is_future(n) ? n : -n;
    u_ = adjoint(plane_.frame(), kFutureUnitTimelike);
  }
  /// Override the auxiliary future vector (must be off the null plane).
  WingPredicate(const SL2& p, const TangentSL2& n, const TangentSL2& u) : WingPredicate(p, n) { u_ = u; }

  /// Signed wing coordinate of a point of the null plane, normalised by its log size.
  double side(const AdSPoint& x) const {
    const TangentSL2 w = plane_.log(x);
    const double scale = std::max(w.sup_norm(), 1e-300) * v_.sup_norm() * u_.sup_norm();
    return det3(v_, u_, w) / scale;
  }

  bool contains(const AdSPoint& x, double tol = default_tolerances().membership) const {
    return plane_.contains(x, tol) && side(x) > tol;
  }

  const NullPlane& plane() const { return plane_; }

 private:
  NullPlane plane_;
  TangentSL2 v_, u_;
};

inline WingPredicate wing_select(const AdSPoint& p, const TangentSL2& n) { return WingPredicate(p.rep(), n); }

}  // namespace crooked
