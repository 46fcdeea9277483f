#pragma once

// Sampled verification suites. Each check draws its samples from shards with
// seeds derived from (seed, shard index); shards run on a worker pool and are
// merged in index order, so reports do not depend on the thread count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "crooked/ads.hpp"
#include "crooked/core.hpp"
#include "crooked/crooked_ads.hpp"
#include "crooked/crooked_surface.hpp"
#include "crooked/embedding.hpp"
#include "crooked/minkowski.hpp"
#include "crooked/random.hpp"
#include "crooked/sl2.hpp"
#include "crooked/strata.hpp"

namespace crooked::verify {

struct Tally {
  long samples = 0;
  long failures = 0;
  double max_residual = 0.0;

  void residual(double r, double tol) {
    ++samples;
    if (std::isnan(r) || r > tol) ++failures;
    if (std::isnan(r)) {
      max_residual = INFINITY;
    } else {
      max_residual = std::max(max_residual, r);
    }
  }
  void expect(bool ok) {
    ++samples;
    if (!ok) ++failures;
  }
  void merge(const Tally& o) {
    samples += o.samples;
    failures += o.failures;
    max_residual = std::max(max_residual, o.max_residual);
  }
};

struct CheckReport {
  std::string check;
  long samples = 0;
  long failures = 0;
  double max_residual = 0.0;
  bool passed() const { return failures == 0 && samples > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long samples = 0;
  std::vector<CheckReport> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
  }
};

struct RunConfig {
  std::uint64_t seed = 0;
  long samples = 10000;
  Tolerances tol{};
  /// Worker cap; 0 means hardware concurrency limited by CROOKED_NUM_THREADS.
  int threads = 0;
};

inline int worker_count(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CROOKED_NUM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

/// Runs fn(shard) for shard in [0, shards) on a pool and merges in order.
inline Tally run_shards(int shards, int threads, const std::function<Tally(int)>& fn) {
  std::vector<Tally> out(static_cast<std::size_t>(shards));
  const int workers = std::min(worker_count(threads), shards);
  if (workers <= 1) {
    for (int i = 0; i < shards; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < shards; i += workers) out[static_cast<std::size_t>(i)] = fn(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  Tally total;
  for (const auto& t : out) total.merge(t);
  return total;
}

constexpr int kShards = 16;

/// FNV-1a; salts the seed per check name, stable across platforms.
constexpr std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

using SampleFn = std::function<void(Rng&, Tally&)>;

/// Runs `count` samples of `body` split over kShards shards.
inline CheckReport sampled(const std::string& name, const RunConfig& cfg, long count, const SampleFn& body) {
  const std::uint64_t salt = name_hash(name);
  const Tally t = run_shards(kShards, cfg.threads, [&](int shard) {
    Rng rng = shard_rng(cfg.seed ^ salt, static_cast<std::uint64_t>(shard));
    const long n = count / kShards + (shard < count % kShards ? 1 : 0);
    Tally local;
    for (long i = 0; i < n; ++i) body(rng, local);
    return local;
  });
  return {name, t.samples, t.failures, t.max_residual};
}

/// A check without randomness.
inline CheckReport fixed(const std::string& name, const std::function<void(Tally&)>& body) {
  Tally t;
  body(t);
  return {name, t.samples, t.failures, t.max_residual};
}

inline double rel(double r, double scale) { return r / std::max(1.0, scale); }

// ---------------------------------------------------------------------------
// Shared pieces of the mt1/mt2/mt3 checks (suite "main-theorem").

/// Tangent vector at the vertex of cp in the given stratum of its tangent cone.
inline TangentSL2 tangent_sample(const AdSCrookedPlane& cp, Stratum s, Rng& rng) {
  return adjoint(cp.frame(), mink_to_sl2(strata::standard_e3(s, rng)));
}

/// Lifted point x = +-(g k y k^{-1}) of the stratum, y from the matrix oracle.
inline SL2 oracle_point(const HatAdSCrookedPlane& hcp, Stratum s, Rng& rng) {
  const SL2& k = hcp.base().frame();
  return hcp.vertex() * k * strata::standard_lift_oracle(s, rng) * k.inverse();
}

/// Whether a stem point of the lift lies in the future square: the traceless
/// part of k^{-1} v^{-1} x k has positive time coordinate.
inline bool future_stem(const HatAdSCrookedPlane& hcp, const SL2& x) {
  const SL2& k = hcp.base().frame();
  const Mat2 h = (k.inverse() * hcp.vertex().inverse() * x * k).matrix();
  return sl2_to_mink(TangentSL2::traceless_part(h)).z > 0;
}

struct MainTheoremParams {
  int instances = 100;
  long per_stratum = 1000;
  long ein_points = 10000;
};

inline MainTheoremParams main_theorem_params(const RunConfig& cfg) {
  return {100, std::max(1L, cfg.samples / 10), std::max(1L, cfg.samples)};
}

/// Runs fn(instance rng, cp) over the random instances.
inline CheckReport per_instance(const std::string& name, const RunConfig& cfg, int instances,
                                const std::function<void(Rng&, const AdSCrookedPlane&, Tally&)>& body) {
  const std::uint64_t salt = name_hash("main-theorem");
  const std::uint64_t body_salt = name_hash(name);
  const Tally t = run_shards(instances, cfg.threads, [&](int i) {
    // The instance is drawn from a seed shared by every mt check.
    Rng inst_rng = shard_rng(cfg.seed ^ salt, static_cast<std::uint64_t>(i));
    const AdSCrookedPlane cp = random_ads_plane(inst_rng);
    Rng rng = shard_rng(cfg.seed ^ body_salt, static_cast<std::uint64_t>(i));
    Tally local;
    body(rng, cp, local);
    return local;
  });
  return {name, t.samples, t.failures, t.max_residual};
}

/// Forward and converse inclusions between the tangent cone and CPa(g, s).
inline std::vector<CheckReport> main_theorem_1(const RunConfig& cfg, const MainTheoremParams& p) {
  const double tol = cfg.tol.membership * 10.0;  // 1e-8 by default
  std::vector<CheckReport> out;
  out.push_back(per_instance("mt1.tangent_to_ads", cfg, p.instances, [&](Rng& rng, const AdSCrookedPlane& cp, Tally& t) {
    const CrookedPlaneE3 cone = tangent_cone(cp);
    for (Stratum s : strata::plane_strata()) {
      for (long i = 0; i < p.per_stratum; ++i) {
        const TangentSL2 xi = tangent_sample(cp, s, rng);
        const bool cone_ok = membership(cone, sl2_to_mink(xi), tol) == s;
        t.expect(cone_ok && membership_ads(cp, exp_at(cp.vertex_point(), xi), tol) == s);
      }
    }
  }));
  out.push_back(per_instance("mt1.ads_to_tangent", cfg, p.instances, [&](Rng& rng, const AdSCrookedPlane& cp, Tally& t) {
    const HatAdSCrookedPlane hcp = lift(cp);
    const CrookedPlaneE3 cone = tangent_cone(cp);
    for (Stratum s : strata::plane_strata()) {
      for (long i = 0; i < p.per_stratum; ++i) {
        const SL2 x = oracle_point(hcp, s, rng);
        const Stratum got = membership_ads(cp, AdSPoint(x), tol);
        if (s == Stratum::Outside) {
          t.expect(got == Stratum::Outside);
          continue;
        }
        // The logarithm found by the geodesic search lies in the same stratum of the cone.
        const auto [xi, negated] = detail::vertex_log(cp.vertex().inverse() * x);
        (void)negated;
        const double err = distance(exp_at(cp.vertex_point(), xi).matrix(), AdSPoint(x).matrix());
        t.expect(got == s && membership(cone, sl2_to_mink(xi), tol) == s &&
                 err <= 1e-8 * std::max(1.0, x.matrix().sup_norm()));
      }
    }
  }));
  return out;
}

/// Standard-surface sample pushed forward by T^{-1}.
inline ProjectivePoint5 surface_sample(const CrookedSurface& cs, EinStratum s, Rng& rng) {
  return ProjectivePoint5::unchecked(cs.normalizer().inverse().apply(strata::standard_surface(s, rng)));
}

inline std::vector<CheckReport> main_theorem_2(const RunConfig& cfg, const MainTheoremParams& p) {
  const double tol = cfg.tol.membership * 10.0;
  std::vector<CheckReport> out;
  out.push_back(per_instance("mt2.adapted", cfg, p.instances, [&](Rng&, const AdSCrookedPlane& cp, Tally& t) {
    for (int sign : {1, -1}) {
      const StemConfiguration c = lift_configuration(lift(cp, sign));
      t.expect(is_adapted(c, cfg.tol.proj));
    }
  }));
  out.push_back(per_instance("mt2.lift_to_surface", cfg, p.instances, [&](Rng& rng, const AdSCrookedPlane& cp, Tally& t) {
    const HatAdSCrookedPlane hcp = lift(cp);
    const CrookedSurface cs = closure_of_lift(cp);
    t.expect(cs_membership(cs, cs.configuration().q1, tol) == EinStratum::Hingepoint1);
    t.expect(cs_membership(cs, cs.configuration().q2, tol) == EinStratum::Hingepoint2);
    for (Stratum s : strata::lift_strata()) {
      for (long i = 0; i < p.per_stratum; ++i) {
        // Alternate the log-based and the matrix-oracle parametrisations.
        SL2 x;
        if (i % 2 == 0) {
          const Stratum base = project_label(s);
          const SL2 y = exp_at(cp.vertex(), tangent_sample(cp, base, rng));
          x = (s >= Stratum::Cohinge1) ? -y : y;
          if (base == Stratum::StemInterior && y.trace() < 0) x = y;
        } else {
          x = oracle_point(hcp, s, rng);
        }
        const Stratum lifted = membership_hat(hcp, x, tol);
        const EinStratum expect = ein_label_of_lift(s, future_stem(hcp, x));
        t.expect(lifted == s && cs_membership(cs, psi(x), tol) == expect);
      }
    }
  }));
  out.push_back(per_instance("mt2.surface_to_lift", cfg, p.instances, [&](Rng& rng, const AdSCrookedPlane& cp, Tally& t) {
    const HatAdSCrookedPlane hcp = lift(cp);
    const CrookedSurface cs = closure_of_lift(cp);
    for (EinStratum s : strata::surface_strata()) {
      if (s == EinStratum::Hingepoint1 || s == EinStratum::Hingepoint2) continue;
      for (long i = 0; i < p.per_stratum; ++i) {
        const ProjectivePoint5 q = surface_sample(cs, s, rng);
        const EinStratum got = cs_membership(cs, q, tol);
        const Vec5& r = q.rep();
        if (std::abs(r[kU] - r[kV]) <= 1e-6) {
          // Off the image of Psi: only the hingepoints and the ideal circle.
          t.expect(got == s);
          continue;
        }
        const SL2 x = psi_inverse(q);
        const Stratum lifted = membership_hat(hcp, x, tol);
        t.expect(got == s && ein_label_of_lift(lifted, future_stem(hcp, x)) == s);
      }
    }
  }));
  return out;
}

inline std::vector<CheckReport> main_theorem_3(const RunConfig& cfg, const MainTheoremParams& p) {
  const double tol = cfg.tol.membership * 10.0;
  std::vector<CheckReport> out;
  out.push_back(per_instance("mt3.round_trip", cfg, p.instances, [&](Rng&, const AdSCrookedPlane& cp, Tally& t) {
    for (int sign : {1, -1}) {
      const AdSCrookedPlane back = ads_from_adapted(closure_of_lift(cp, sign));
      const double dg = distance(AdSPoint(back.vertex()), cp.vertex_point());
      const double ds = std::min((back.spine_dir() - cp.spine_dir()).sup_norm(),
                                 (back.spine_dir() + cp.spine_dir()).sup_norm());
      t.residual(std::max(dg, ds), 1e-8);
    }
  }));
  out.push_back(per_instance("mt3.membership_agreement", cfg, p.instances,
                             [&](Rng& rng, const AdSCrookedPlane& cp, Tally& t) {
    const CrookedSurface cs = closure_of_lift(cp);
    const CrookedSurface again = closure_of_lift(ads_from_adapted(cs));
    const auto& all = strata::surface_strata();
    for (long i = 0; i < p.ein_points; ++i) {
      ProjectivePoint5 q = random_ein_point(rng);
      if (i % 2 == 0) q = surface_sample(cs, all[static_cast<std::size_t>(i / 2) % all.size()], rng);
      t.expect(cs_membership(cs, q, tol) == cs_membership(again, q, tol));
    }
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

inline std::vector<CheckReport> suite_core(const RunConfig& cfg) {
  const long n = cfg.samples;
  const Tolerances& tol = cfg.tol;
  std::vector<CheckReport> out;
  out.push_back(sampled("core.polarization", cfg, n, [](Rng& rng, Tally& t) {
    Vec5 v, w;
    for (int i = 0; i < 5; ++i) {
      v[i] = normal(rng, 3.0);
      w[i] = normal(rng, 3.0);
    }
    const double a = normal(rng), b = normal(rng);
    const double lhs = q_form(a * v + b * w);
    const double rhs = a * a * q_form(v) + 2 * a * b * b_form(v, w) + b * b * q_form(w);
    const double scale = std::pow(std::abs(a) * v.norm() + std::abs(b) * w.norm(), 2);
    t.residual(std::abs(lhs - rhs) / scale, 1e-12);
  }));
  out.push_back(sampled("core.projective_scaling", cfg, n, [](Rng& rng, Tally& t) {
    const ProjectivePoint5 p = random_ein_point(rng);
    const double lambda = (uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0) * std::exp(uniform(rng, -5, 5));
    const ProjectivePoint5 q = point(lambda * p.rep());
    const ProjectivePoint5 again = ProjectivePoint5::unchecked(p.rep());
    t.residual(sup_norm(q.rep() - p.rep()), 4e-16);
    t.expect(again.rep() == p.rep());
  }));
  out.push_back(sampled("core.photon", cfg, n, [&](Rng& rng, Tally& t) {
    const ConformalMap5 c = random_conformal(rng);
    const ProjectivePoint5 p = c.apply(p0());
    const ProjectivePoint5 q = c.apply(p1());
    const PhotonLine phi = photon_through(p, q);
    const double a = normal(rng), b = normal(rng);
    const Vec5 v = a * phi.first() + b * phi.second();
    t.residual(std::abs(q_form(v)) / v.squaredNorm(), tol.null);
    t.expect(phi.contains(p, tol.subspace) && phi.contains(q, tol.subspace));
  }));
  out.push_back(sampled("core.spacelike_circle", cfg, n, [&](Rng& rng, Tally& t) {
    const ConformalMap5 c = random_conformal(rng);
    const ProjectivePoint5 p = c.apply(p1());
    const ProjectivePoint5 q = c.apply(p2());
    const SpacelikeCircle circle = spacelike_circle_dual(p, q);
    const ProjectivePoint5 x = circle.at(uniform(rng, 0, 2 * std::numbers::pi));
    t.residual(std::max(std::abs(b_form(x.rep(), p.rep())), std::abs(b_form(x.rep(), q.rep()))), tol.incidence);
    t.residual(std::abs(q_form(x.rep())), tol.null);
    t.expect(circle.contains(x, tol.subspace));
  }));
  out.push_back(sampled("core.normalize", cfg, std::max(1L, n / 10), [&](Rng& rng, Tally& t) {
    const ConformalMap5 c = random_conformal(rng);
    const Configuration s = standard_configuration();
    const Configuration cfg5{c.apply(s.q0), c.apply(s.qinf), c.apply(s.q1), c.apply(s.q2)};
    const ConformalMap5 m = normalize_to_standard(cfg5);
    const double scale = m.matrix().cwiseAbs().maxCoeff();
    t.residual(m.orth_residual() / std::max(1.0, scale * scale), tol.orth);
    double d = 0;
    d = std::max(d, projective_distance(m.apply(cfg5.q0), s.q0));
    d = std::max(d, projective_distance(m.apply(cfg5.qinf), s.qinf));
    d = std::max(d, projective_distance(m.apply(cfg5.q1), s.q1));
    d = std::max(d, projective_distance(m.apply(cfg5.q2), s.q2));
    t.residual(d, tol.proj);
    t.expect(m.determinant() > 0);
  }));
  return out;
}

inline std::vector<CheckReport> suite_sl2(const RunConfig& cfg) {
  const long n = cfg.samples;
  std::vector<CheckReport> out;
  out.push_back(sampled("sl2.exp_oracle", cfg, n, [](Rng& rng, Tally& t) {
    const TangentSL2 xi = random_tangent(rng, 5.0);
    t.residual(distance(exp_sl2(xi).matrix(), exp_series_oracle(xi).matrix()), 1e-11);
  }));
  out.push_back(sampled("sl2.exp_branch", cfg, std::max(1L, n / 10), [](Rng& rng, Tally& t) {
    const double a = uniform(rng, -3, 3);
    const double b = (uniform(rng, 0, 1) < 0.5 ? -1 : 1) * uniform(rng, 0.5, 3);
    const double q = uniform(rng, -1e-8, 1e-8);
    const TangentSL2 xi(a, b, (q - a * a) / b);
    t.residual(distance(exp_sl2(xi).matrix(), exp_series_oracle(xi).matrix()), 1e-9);
  }));
  out.push_back(sampled("sl2.exp_det", cfg, n, [](Rng& rng, Tally& t) {
    const TangentSL2 xi = random_tangent(rng, 3.0);
    t.residual(std::abs(exp_sl2(xi).matrix().det() - 1.0), 1e-10);
  }));
  out.push_back(sampled("sl2.ad_invariance", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 g = random_sl2(rng, 1.0);
    const TangentSL2 a = random_tangent(rng, 2.0), b = random_tangent(rng, 2.0);
    const TangentSL2 ga = adjoint(g, a), gb = adjoint(g, b);
    const double scale = std::max(1.0, ga.sup_norm() * gb.sup_norm());
    t.residual(std::abs(lorentz_dot(ga, gb) - lorentz_dot(a, b)) / scale, 1e-9);
  }));
  out.push_back(sampled("sl2.identification", cfg, n, [](Rng& rng, Tally& t) {
    const TangentSL2 a = random_tangent(rng, 3.0), b = random_tangent(rng, 3.0);
    const double scale = std::max(1.0, a.sup_norm() * b.sup_norm());
    t.residual(std::abs(lorentz_dot(a, b) - mink_dot(sl2_to_mink(a), sl2_to_mink(b))) / scale, 1e-12);
    const TangentSL2 back = mink_to_sl2(sl2_to_mink(a));
    t.residual((back - a).sup_norm(), 1e-15);
  }));
  out.push_back(sampled("sl2.triple_product", cfg, n, [](Rng& rng, Tally& t) {
    const TangentSL2 a = random_tangent(rng, 2.0), b = random_tangent(rng, 2.0), c = random_tangent(rng, 2.0);
    const double scale = std::max(1.0, a.sup_norm() * b.sup_norm() * c.sup_norm());
    const TangentSL2 ab = cross(a, b);
    t.residual(std::abs(lorentz_dot(ab, c) - kTripleProductSign * det3(a, b, c)) / scale, 1e-12);
    t.residual(std::abs(lorentz_dot(ab, c) - lorentz_dot(cross(b, c), a)) / scale, 1e-12);
    t.residual(std::max(std::abs(lorentz_dot(ab, a)), std::abs(lorentz_dot(ab, b))) / scale, 1e-12);
  }));
  out.push_back(fixed("sl2.periodicity", [](Tally& t) {
    t.residual(distance(exp_sl2(std::numbers::pi * kRotationGenerator).matrix(), -Mat2::identity()), 1e-10);
    t.residual(distance(exp_sl2(2 * std::numbers::pi * kRotationGenerator).matrix(), Mat2::identity()), 1e-10);
  }));
  out.push_back(sampled("sl2.log_round_trip", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 g = random_sl2(rng, 1.0);
    const auto xi = geodesic_connect_dbl(g);
    if (g.trace() > -2.0 + 1e-6) {
      t.expect(xi.has_value());
    } else if (g.trace() < -2.0 - 1e-6) {
      t.expect(!xi.has_value());
    }
    if (xi) t.residual(distance(exp_sl2(*xi).matrix(), g.matrix()) / std::max(1.0, g.matrix().sup_norm()), 1e-9);
  }));
  return out;
}

inline std::vector<CheckReport> suite_ads(const RunConfig& cfg) {
  const long n = cfg.samples;
  std::vector<CheckReport> out;
  auto unit_timelike = [](Rng& rng) { return adjoint(random_moderate_sl2(rng), kFutureUnitTimelike); };
  out.push_back(sampled("ads.switch", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 g1 = random_sl2(rng, 1.0), g2 = random_sl2(rng, 1.0), x = random_sl2(rng, 1.0);
    const AdSPoint e;
    const AdSPoint lhs = symmetry(e, act(IsometryG0{g1, g2}, AdSPoint(x)));
    const AdSPoint rhs = act(IsometryG0{g2, g1}, symmetry(e, AdSPoint(x)));
    t.residual(distance(lhs, rhs) / std::max(1.0, lhs.matrix().sup_norm()), 1e-9);
  }));
  out.push_back(sampled("ads.transvection_geodesic", cfg, n, [](Rng& rng, Tally& t) {
    const TangentSL2 xi = random_tangent(rng, 1.0);
    const double s = uniform(rng, -1, 1), tt = uniform(rng, -1, 1);
    const SL2 lhs = transvection(xi, tt, exp_sl2(s * xi));
    const SL2 rhs = exp_sl2((s + tt) * xi);
    t.residual(distance(lhs.matrix(), rhs.matrix()) / std::max(1.0, rhs.matrix().sup_norm()), 1e-10);
  }));
  out.push_back(sampled("ads.symmetry_fixed_set", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 g = random_sl2(rng, 1.0);
    const AdSPoint gp(g);
    // Points g tau with tau an involution are fixed and lie in g*.
    const PSL2 tau = h2_embed(uniform(rng, -3, 3), std::exp(uniform(rng, -2, 2)));
    const AdSPoint fixed_pt(g * tau.rep());
    const double scale = std::max(1.0, fixed_pt.matrix().sup_norm());
    t.residual(distance(symmetry(gp, fixed_pt), fixed_pt) / (scale * scale), 1e-9);
    t.expect(dual_plane_contains(gp, fixed_pt));
    t.residual(distance(symmetry(gp, gp), gp) / std::max(1.0, g.matrix().sup_norm()), 1e-9);
    t.expect(!dual_plane_contains(gp, gp));
    // A generic point is moved unless it lies in {g} or g*.
    const AdSPoint x(random_sl2(rng, 1.0));
    const bool moved = distance(symmetry(gp, x), x) > 1e-6;
    t.expect(moved || dual_plane_contains(gp, x, 1e-6) || distance(x, gp) < 1e-6);
    // Symmetries are involutions.
    t.residual(distance(symmetry(gp, symmetry(gp, x)), x) / std::max(1.0, x.matrix().sup_norm()), 1e-8);
  }));
  out.push_back(sampled("ads.timelike_closed", cfg, n, [&](Rng& rng, Tally& t) {
    const TangentSL2 u = unit_timelike(rng);
    const double scale = std::max(1.0, u.sup_norm());
    t.residual(distance(exp_sl2(std::numbers::pi * u).matrix(), -Mat2::identity()) / scale, 1e-9);
    t.residual(distance(exp_sl2(2 * std::numbers::pi * u).matrix(), Mat2::identity()) / scale, 1e-9);
  }));
  out.push_back(sampled("ads.lie_triple", cfg, n, [](Rng& rng, Tally& t) {
    const TangentSL2 a = random_tangent(rng, 2.0), b = random_tangent(rng, 2.0);
    t.expect(lie_triple_check(a, b));
  }));
  out.push_back(sampled("ads.dual_radius", cfg, n, [&](Rng& rng, Tally& t) {
    const AdSPoint g(random_sl2(rng, 1.0));
    const TangentSL2 v = (std::numbers::pi / 2) * unit_timelike(rng);
    t.expect(dual_plane_radius_check(g, v, 1e-8));
  }));
  out.push_back(sampled("ads.null_plane_invariance", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 p = random_sl2(rng, 1.0);
    const SL2 h = random_sl2(rng, 1.0);
    const TangentSL2 n = adjoint(h, TangentSL2(0, 1, 0));
    const NullPlane plane(p, n);
    // Member: p exp(w), w in n^perp; Ad_h of an upper triangular vector.
    const TangentSL2 w = adjoint(h, TangentSL2(uniform(rng, -1, 1), uniform(rng, -1, 1), 0));
    const SL2 x = p * exp_sl2(w);
    const double tt = uniform(rng, -1, 1);
    // Transvection along t -> p exp(t n): x -> p exp(tn/2) p^{-1} x exp(tn/2).
    const SL2 half = exp_sl2(0.5 * tt * n);
    const SL2 moved = p * half * p.inverse() * x * half;
    t.expect(plane.contains(AdSPoint(x), 1e-8) && plane.contains(AdSPoint(moved), 1e-8));
    const SL2 off = p * exp_sl2(adjoint(h, TangentSL2(0, 0, uniform(rng, 0.2, 1.0))));
    const SL2 off_moved = p * half * p.inverse() * off * half;
    t.expect(!plane.contains(AdSPoint(off), 1e-8) && !plane.contains(AdSPoint(off_moved), 1e-8));
  }));
  out.push_back(sampled("ads.wing_auxiliary_vector", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 p = random_sl2(rng, 1.0);
    const SL2 h = random_sl2(rng, 1.0);
    const TangentSL2 n = adjoint(h, TangentSL2(0, 1, 0));
    const WingPredicate fixed_u(p, n);
    // Any future timelike u.
    const double r = std::exp(uniform(rng, -2, 2));
    const double ang = uniform(rng, 0, 2 * std::numbers::pi);
    const double frac = uniform(rng, 0, 0.95);
    const TangentSL2 u = mink_to_sl2({frac * r * std::cos(ang), frac * r * std::sin(ang), r});
    const WingPredicate other_u(p, n, u);
    const TangentSL2 w = adjoint(h, TangentSL2(strata::signed_range(rng, 0.1, 1.0), uniform(rng, -1, 1), 0));
    const AdSPoint x(p * exp_sl2(w));
    t.expect((fixed_u.side(x) > 0) == (other_u.side(x) > 0));
  }));
  return out;
}


/// SO(2,1)^0 matrix Ad_h in Minkowski coordinates.
inline Eigen::Matrix3d lorentz_matrix(const SL2& h) {
  Eigen::Matrix3d m;
  const MinkVec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int j = 0; j < 3; ++j) m.col(j) = to_eigen(sl2_to_mink(adjoint(h, mink_to_sl2(basis[j]))));
  return m;
}

inline std::vector<CheckReport> suite_crooked(const RunConfig& cfg) {
  const long n = cfg.samples;
  const double tol = cfg.tol.membership;
  std::vector<CheckReport> out;
  auto random_e3 = [](Rng& rng) {
    const MinkVec3 v{normal(rng, 2.0), normal(rng, 2.0), normal(rng, 2.0)};
    return CrookedPlaneE3(v, random_unit_spacelike_mink(rng));
  };
  auto pick = [](Rng& rng, const std::vector<Stratum>& all) {
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  };
  out.push_back(sampled("crooked.e3_equivariance", cfg, n, [&](Rng& rng, Tally& t) {
    const CrookedPlaneE3 cp = random_e3(rng);
    const Stratum s = pick(rng, strata::plane_strata());
    const MinkVec3 q = cp.from_standard(strata::standard_e3(s, rng));
    const Eigen::Matrix3d r = lorentz_matrix(random_moderate_sl2(rng));
    const MinkVec3 tau{normal(rng, 2.0), normal(rng, 2.0), normal(rng, 2.0)};
    auto move = [&](const MinkVec3& p) { return from_eigen(r * to_eigen(p)) + tau; };
    const MinkVec3 rs = from_eigen(r * to_eigen(cp.spine_dir()));
    const CrookedPlaneE3 moved(move(cp.vertex()), (1.0 / std::sqrt(mink_dot(rs, rs))) * rs);
    t.expect(membership(cp, q, tol) == s && membership(moved, move(q), tol) == s);
  }));
  out.push_back(sampled("crooked.e3_spine_reflection", cfg, n, [&](Rng& rng, Tally& t) {
    const Stratum s = pick(rng, strata::plane_strata());
    const MinkVec3 q = strata::standard_e3(s, rng);
    t.expect(classify_standard(q, 1.0, tol) == s && classify_standard({q.x, -q.y, -q.z}, 1.0, tol) == s);
  }));
  out.push_back(sampled("crooked.e3_scaling", cfg, n, [&](Rng& rng, Tally& t) {
    const CrookedPlaneE3 cp = random_e3(rng);
    const Stratum s = pick(rng, strata::plane_strata());
    const MinkVec3 q = cp.from_standard(strata::standard_e3(s, rng));
    const double lambda = std::exp(uniform(rng, -3, 3));
    t.expect(membership(cp, cp.vertex() + lambda * (q - cp.vertex()), tol) == s);
  }));
  out.push_back(sampled("crooked.e3_ideal_points", cfg, n, [&](Rng& rng, Tally& t) {
    const CrookedPlaneE3 cp = random_e3(rng);
    const IdealPoints ideal = closure_ideal_points(cp);
    const auto [n1, n2] = cp.hinges();
    // The gap to the limit decays like 1/far.
    constexpr double far = 1e6;
    t.residual(projective_distance(embed_mink(cp.vertex() + far * n1), ideal.hingepoints.first), 1e-4);
    t.residual(projective_distance(embed_mink(cp.vertex() + far * n2), ideal.hingepoints.second), 1e-4);
    t.residual(projective_distance(embed_mink(spine_point(cp, far)), ideal.improper), 1e-4);
  }));
  out.push_back(sampled("crooked.ads_equivariance", cfg, n, [&](Rng& rng, Tally& t) {
    const AdSCrookedPlane cp = random_ads_plane(rng);
    const Stratum s = pick(rng, strata::plane_strata());
    const AdSPoint x(oracle_point(lift(cp), s, rng));
    const IsometryG0 phi{random_moderate_sl2(rng), random_moderate_sl2(rng)};
    t.expect(membership_ads(cp, x, tol) == s && membership_ads(transform(phi, cp), act(phi, x), tol) == s);
  }));
  out.push_back(sampled("crooked.stem_particles_closed", cfg, n, [&](Rng& rng, Tally& t) {
    const AdSCrookedPlane cp = random_ads_plane(rng);
    // Unit timelike direction of the stem cone.
    const MinkVec3 m = strata::standard_e3(Stratum::StemInterior, rng);
    const MinkVec3 unit = (1.0 / std::sqrt(-mink_dot(m, m))) * m;
    const TangentSL2 u = adjoint(cp.frame(), mink_to_sl2(unit));
    const double tt = uniform(rng, 0.01, std::numbers::pi - 0.01);
    t.expect(membership_ads(cp, exp_at(cp.vertex_point(), tt * u), tol) == Stratum::StemInterior);
    const AdSPoint back = exp_at(cp.vertex_point(), std::numbers::pi * u);
    t.residual(distance(back, cp.vertex_point()) / std::max(1.0, u.sup_norm() * cp.vertex().matrix().sup_norm()), 1e-9);
  }));
  out.push_back(sampled("crooked.deck_swap", cfg, n, [&](Rng& rng, Tally& t) {
    const HatAdSCrookedPlane hcp = lift(random_ads_plane(rng));
    const Stratum s = pick(rng, strata::lift_strata());
    const SL2 x = oracle_point(hcp, s, rng);
    const Stratum a = membership_hat(hcp, x, tol);
    t.expect(a == s && membership_hat(hcp, -x, tol) == deck_swap(a));
    t.expect(project_label(a) == membership_ads(hcp.base(), AdSPoint(x), tol));
  }));
  out.push_back(sampled("crooked.dual_round_trip", cfg, n, [](Rng& rng, Tally& t) {
    const AdSCrookedPlane cp = random_ads_plane(rng);
    const AdSCrookedPlane back = from_dual(dual_description(cp));
    const double ds = std::min((back.spine_dir() - cp.spine_dir()).sup_norm(),
                               (back.spine_dir() + cp.spine_dir()).sup_norm());
    t.residual(std::max(distance(back.vertex().matrix(), cp.vertex().matrix()), ds), 1e-8);
  }));
  out.push_back(sampled("crooked.dual_line_in_stem", cfg, n, [&](Rng& rng, Tally& t) {
    const AdSCrookedPlane cp = random_ads_plane(rng);
    const DualDescription d = dual_description(cp);
    const AdSPoint x(exp_at(d.line_point, uniform(rng, -3, 3) * d.line_tangent));
    t.expect(dual_plane_contains(cp.vertex_point(), x, 1e-8) && membership_ads(cp, x, tol) == Stratum::StemInterior);
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Einstein universe.

/// Psi(-M) = I_S(Psi(M)) on random M with N(0, 9) entries.
inline CheckReport psi_inversion_check(const RunConfig& cfg, long count) {
  return sampled("einstein.psi_inversion", cfg, count, [](Rng& rng, Tally& t) {
    const SL2 m = random_sl2(rng, 3.0);
    t.residual(projective_distance(psi(-m), inversion(psi(m))), 1e-9);
  });
}

inline CheckReport psi_null_check(const RunConfig& cfg, long count) {
  return sampled("einstein.psi_null", cfg, count, [](Rng& rng, Tally& t) {
    const Vec5 v = psi_vec(random_sl2(rng, 3.0).matrix());
    t.residual(std::abs(q_form(v)) / v.squaredNorm(), 1e-9);
  });
}

/// Closed forms of the geodesic images on fixed grids, relative error.
inline CheckReport geodesic_images_check() {
  return fixed("einstein.geodesic_images", [](Tally& t) {
    auto rel_gap = [](GeodesicKind k, double x) {
      return geodesic_image_check(k, x) / std::max(1.0, geodesic_image_expected(k, x).sup_norm());
    };
    for (int i = 0; i < 100; ++i) {
      const double x = -5.0 + 10.0 * (i + 0.5) / 100.0;
      const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (i + 0.5) / 100.0;
      t.residual(rel_gap(GeodesicKind::Hyperbolic, x), 1e-12);
      t.residual(rel_gap(GeodesicKind::AntiHyperbolic, x), 1e-12);
      t.residual(rel_gap(GeodesicKind::Unipotent, x), 1e-12);
      const MinkVec3 e = geodesic_image(GeodesicKind::Elliptic, theta);
      const double tz = std::abs(std::tan(theta / 2));
      t.residual(std::abs(std::abs(e.z) - tz) / std::max(1.0, tz), 1e-12);
      t.residual(rel_gap(GeodesicKind::Elliptic, theta), 1e-12);
    }
  });
}

inline ConformalMap5 dilation_map(double lambda) {
  Mat5 m = Mat5::Identity();
  m(kU, kU) = lambda;
  m(kV, kV) = 1.0 / lambda;
  return ConformalMap5(m);
}

inline ConformalMap5 yz_boost_map(double t) {
  Mat5 m = Mat5::Identity();
  m(kY, kY) = m(kZ, kZ) = std::cosh(t);
  m(kY, kZ) = m(kZ, kY) = std::sinh(t);
  return ConformalMap5(m);
}

inline std::vector<CheckReport> suite_einstein(const RunConfig& cfg) {
  const long n = cfg.samples;
  const double tol = cfg.tol.membership;
  std::vector<CheckReport> out;
  out.push_back(psi_inversion_check(cfg, n));
  out.push_back(psi_null_check(cfg, n));
  out.push_back(sampled("einstein.round_trip", cfg, n, [](Rng& rng, Tally& t) {
    const SL2 m = random_sl2(rng, 1.0);
    const ProjectivePoint5 p = psi(m);
    if (std::abs(p.rep()[kV] - p.rep()[kU]) > 1e-3) {
      t.residual(distance(psi_inverse(p).matrix(), m.matrix()) / std::max(1.0, m.matrix().sup_norm()), 1e-9);
    }
    const MinkVec3 q{normal(rng, 3.0), normal(rng, 3.0), normal(rng, 3.0)};
    t.residual((mink_from_ein(embed_mink(q)) - q).sup_norm() / std::max(1.0, q.sup_norm()), 1e-12);
  }));
  out.push_back(sampled("einstein.trace_minus_two", cfg, n, [](Rng& rng, Tally& t) {
    // -(conjugate of a unipotent) has trace -2 and lands on L(pinf).
    const SL2 h = random_sl2(rng, 1.0);
    const SL2 u = -(h * SL2::unchecked({1.0, uniform(rng, -3, 3), 0.0, 1.0}) * h.inverse());
    const Vec5 r = psi_vec(u.matrix());
    t.residual(std::abs(b_form(r, pinf().rep())) / sup_norm(r), 1e-9);
    const SL2 g = random_sl2(rng, 1.0);
    const Vec5 rg = psi_vec(g.matrix());
    t.residual(std::abs(-2.0 * b_form(rg, pinf().rep()) - (g.trace() + 2.0)), 1e-12 * std::max(1.0, sup_norm(rg)));
  }));
  out.push_back(sampled("einstein.conformal_equivariance", cfg, n, [](Rng& rng, Tally& t) {
    const IsometryG0 phi{random_sl2(rng, 1.0), random_sl2(rng, 1.0)};
    const SL2 x = random_sl2(rng, 1.0);
    const ConformalMap5 c = conformal_of(phi);
    t.residual(projective_distance(c.apply(psi(x)), psi(phi.apply(x))), 1e-9);
    const double scale = c.matrix().cwiseAbs().maxCoeff();
    t.residual(c.orth_residual() / std::max(1.0, scale * scale), 1e-8);
  }));
  out.push_back(geodesic_images_check());
  out.push_back(sampled("einstein.totally_geodesic", cfg, n, [](Rng& rng, Tally& t) {
    const double a = std::exp(uniform(rng, -2, 2)) * (uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0);
    const double b = uniform(rng, -3, 3);
    t.residual(totally_geodesic_residual(SurfaceKind::BorelUpper, SL2::unchecked({a, b, 0.0, 1.0 / a})), 1e-9);
    t.residual(totally_geodesic_residual(SurfaceKind::BorelLower, SL2::unchecked({a, 0.0, b, 1.0 / a})), 1e-9);
    const double d = uniform(rng, -3, 3);
    const double c = strata::signed_range(rng, 0.2, 3.0);
    t.residual(totally_geodesic_residual(SurfaceKind::Indefinite, SL2::unchecked({d, (d * d - 1.0) / c, c, d})), 1e-9);
    const PSL2 tau = h2_embed(uniform(rng, -3, 3), std::exp(uniform(rng, -1, 1)));
    t.residual(totally_geodesic_residual(SurfaceKind::DualPlane, tau.rep()), 1e-9);
  }));
  out.push_back(sampled("einstein.rulings", cfg, n, [](Rng& rng, Tally& t) {
    const double theta = uniform(rng, -std::numbers::pi, std::numbers::pi);
    for (RulingSign sgn : {RulingSign::Plus, RulingSign::Minus}) {
      const MinkVec3 p = ruling_point(theta, sgn, uniform(rng, -3, 3));
      t.residual(std::abs(mink_dot(p, p) - 1.0) / std::max(1.0, p.sup_norm() * p.sup_norm()), 1e-12);
      const ProjectivePoint5 far = embed_mink(ruling_point(theta, sgn, 1e6));
      t.residual(projective_distance(far, ruling_ideal_endpoint(theta, sgn)), 1e-5);
    }
  }));
  out.push_back(sampled("einstein.stabilizer", cfg, n, [&](Rng& rng, Tally& t) {
    const ConformalMap5 d = dilation_map(std::exp(uniform(rng, -3, 3))) * yz_boost_map(uniform(rng, -3, 3));
    const CrookedSurface std_cs = CrookedSurface::standard();
    const auto& all = strata::surface_strata();
    const EinStratum s = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const ProjectivePoint5 q = ProjectivePoint5::unchecked(strata::standard_surface(s, rng));
    t.expect(cs_membership(std_cs, q, tol) == s && cs_membership(std_cs, d.apply(q), tol) == s);
    const ProjectivePoint5 g = random_ein_point(rng);
    t.expect(cs_membership(std_cs, g, tol) == cs_membership(std_cs, d.apply(g), tol));
  }));
  out.push_back(sampled("einstein.surface_equivariance", cfg, n, [&](Rng& rng, Tally& t) {
    // Isometry-induced maps carry the standard surface to the closure of the moved plane.
    const IsometryG0 phi{random_moderate_sl2(rng), random_moderate_sl2(rng)};
    const ConformalMap5 a = conformal_of(phi);
    const CrookedSurface moved = closure_of_lift(transform(phi, AdSCrookedPlane::standard()));
    const auto& all = strata::surface_strata();
    const EinStratum e = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const ProjectivePoint5 q = ProjectivePoint5::unchecked(strata::standard_surface(e, rng));
    t.expect(cs_membership(moved, a.apply(q), tol) == e);
  }));
  return out;
}

inline std::vector<CheckReport> suite_main_theorem(const RunConfig& cfg) {
  const MainTheoremParams p = main_theorem_params(cfg);
  std::vector<CheckReport> out = main_theorem_1(cfg, p);
  for (auto& c : main_theorem_2(cfg, p)) out.push_back(std::move(c));
  for (auto& c : main_theorem_3(cfg, p)) out.push_back(std::move(c));
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "sl2", "ads", "crooked", "einstein", "main-theorem", "all"};
  return names;
}

/// Runs a named suite; unknown names raise BadInput.
inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (cfg.samples < 1) fail(ErrorCode::BadInput, "samples must be at least 1");
  SuiteReport report{name, cfg.seed, cfg.samples, {}};
  auto add = [&](std::vector<CheckReport> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  const bool all = name == "all";
  bool known = all;
  auto want = [&](const char* s) {
    if (all || name == s) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("core")) add(suite_core(cfg));
  if (want("sl2")) add(suite_sl2(cfg));
  if (want("ads")) add(suite_ads(cfg));
  if (want("crooked")) add(suite_crooked(cfg));
  if (want("einstein")) add(suite_einstein(cfg));
  if (want("main-theorem")) add(suite_main_theorem(cfg));
  if (!known) fail(ErrorCode::BadInput, "unknown suite: " + name);
  return report;
}

}  // namespace crooked::verify
