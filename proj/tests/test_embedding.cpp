#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "crooked/crooked_surface.hpp"
#include "crooked/random.hpp"
#include "crooked/strata.hpp"

using namespace crooked;
using std::numbers::pi;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code() == code;
  }
  return false;
}

ProjectivePoint5 pt(double x, double y, double z, double u, double v) { return point(vec5(x, y, z, u, v)); }

}  // namespace

TEST(EmbedMink, Values) {
  EXPECT_TRUE(approx_equal(embed_mink({0, 0, 0}), p0()));
  EXPECT_TRUE(approx_equal(embed_mink({0, 0, 1}), pt(0, 0, 1, -1, 1)));
  EXPECT_TRUE(approx_equal(embed_mink({1, 1, 0}), pt(1, 1, 0, 2, 1)));
  const MinkVec3 m = mink_from_ein(pt(0, 2, 2, 0, 8));
  EXPECT_NEAR(m.x, 0.0, 1e-15);
  EXPECT_NEAR(m.y, 0.25, 1e-15);
  EXPECT_NEAR(m.z, 0.25, 1e-15);
  EXPECT_TRUE(throws_code(ErrorCode::NotInMinkowskiPatch, [] { mink_from_ein(pinf()); }));
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const MinkVec3 v{normal(rng), normal(rng), normal(rng)};
    EXPECT_LT((mink_from_ein(embed_mink(v)) - v).sup_norm(), 1e-12);
  }
}

TEST(Psi, GoldenPoints) {
  EXPECT_TRUE(approx_equal(psi(SL2()), p0()));
  EXPECT_TRUE(approx_equal(psi(-SL2()), pinf()));
  for (double t : {-3.0, 1.0, 7.0}) {
    EXPECT_TRUE(approx_equal(psi(SL2::checked({1, t, 0, 1})), pt(0, t, t, 0, 4)));
    const SL2 back = psi_inverse(pt(0, t, t, 0, 4));
    EXPECT_LT(distance(back.matrix(), Mat2{1, t, 0, 1}), 1e-12);
  }
  const SL2 id = psi_inverse(p0());
  EXPECT_LT(distance(id.matrix(), Mat2::identity()), 1e-15);
  EXPECT_TRUE(throws_code(ErrorCode::OnEinstein2, [] { psi_inverse(p1()); }));
}

TEST(Psi, NullInversionRoundTrip) {
  Rng rng(52);
  for (int i = 0; i < 1000; ++i) {
    const SL2 m = random_sl2(rng);
    const Vec5 r = psi_vec(m.matrix());
    EXPECT_LE(std::abs(q_form(r)), 1e-10 * sup_norm(r) * sup_norm(r));
    EXPECT_TRUE(approx_equal(psi(-m), inversion(psi(m))));
    EXPECT_FALSE(fixed_set_contains(psi(m)));
    const SL2 back = psi_inverse(psi(m));
    EXPECT_LT(distance(back.matrix(), m.matrix()), 1e-9 * std::max(1.0, m.matrix().sup_norm()));
    EXPECT_NEAR(back.matrix().det(), 1.0, 1e-9 * std::max(1.0, m.matrix().sup_norm() * m.matrix().sup_norm()));
  }
}

TEST(Psi, TraceMinusTwoMeetsLightConeOfPinf) {
  for (double t : {-2.0, 0.5, 3.0}) {
    const SL2 m = SL2::checked({-1, t, 0, -1});
    EXPECT_NEAR(b_form(psi(m).rep(), pinf().rep()), 0.0, 1e-15);
  }
  EXPECT_GT(std::abs(b_form(psi(SL2()).rep(), pinf().rep())), 0.1);
}

TEST(Inversion, Values) {
  EXPECT_TRUE(approx_equal(inversion(p0()), pinf()));
  EXPECT_TRUE(approx_equal(inversion(pinf()), p0()));
  EXPECT_TRUE(approx_equal(inversion(p1()), p1()));
  const MinkVec3 m = mink_from_ein(inversion(embed_mink({1, 1, 0})));
  EXPECT_NEAR(m.x, 0.5, 1e-15);
  EXPECT_NEAR(m.y, 0.5, 1e-15);
  EXPECT_NEAR(m.z, 0.0, 1e-15);
  EXPECT_TRUE(fixed_set_contains(p1()));
  EXPECT_TRUE(fixed_set_contains(embed_mink({1, 0, 0})));
  EXPECT_FALSE(fixed_set_contains(p0()));
}

TEST(Rulings, PointsAndEndpoints) {
  const MinkVec3 a = ruling_point(0, RulingSign::Plus, 0);
  EXPECT_NEAR(a.x, 1, 1e-15);
  EXPECT_NEAR(a.y, 0, 1e-15);
  const MinkVec3 b = ruling_point(0, RulingSign::Plus, 1);
  EXPECT_NEAR(b.x, 1, 1e-15);
  EXPECT_NEAR(b.y, 1, 1e-15);
  EXPECT_NEAR(b.z, 1, 1e-15);
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const double th = uniform(rng, -pi, pi), eta = uniform(rng, -5, 5);
    const RulingSign sg = i % 2 ? RulingSign::Plus : RulingSign::Minus;
    const MinkVec3 p = ruling_point(th, sg, eta);
    EXPECT_NEAR(mink_dot(p, p), 1.0, 1e-12);
    const ProjectivePoint5 e = ruling_ideal_endpoint(th, sg);
    EXPECT_EQ(e.rep()[kU], 0.0);
    EXPECT_EQ(e.rep()[kV], 0.0);
    // Oracle: the embedded ruling point at large eta.
    EXPECT_LT(projective_distance(e, embed_mink(ruling_point(th, sg, 1e6))), 1e-5);
  }
  EXPECT_TRUE(approx_equal(ruling_ideal_endpoint(0, RulingSign::Plus), p1()));
  // S^-_pi is (-1, eta, eta), which tends to p1; p2 is reached by S^+_pi and S^-_0.
  EXPECT_TRUE(approx_equal(ruling_ideal_endpoint(pi, RulingSign::Minus), p1()));
  EXPECT_TRUE(approx_equal(ruling_ideal_endpoint(pi, RulingSign::Plus), p2()));
  EXPECT_TRUE(approx_equal(ruling_ideal_endpoint(0, RulingSign::Minus), p2()));
}

TEST(GeodesicImages, ClosedForms) {
  const MinkVec3 h = geodesic_image(GeodesicKind::Hyperbolic, 2.0);
  EXPECT_NEAR(h.x, 0.7615941559557649, 1e-15);
  EXPECT_NEAR(h.y, 0.0, 1e-15);
  EXPECT_NEAR(h.z, 0.0, 1e-15);
  EXPECT_NEAR(geodesic_image(GeodesicKind::AntiHyperbolic, 2.0).x, 1.3130352854993312, 1e-15);
  const MinkVec3 e = geodesic_image(GeodesicKind::Elliptic, pi / 2);
  EXPECT_NEAR(std::abs(e.z), 1.0, 1e-15);
  EXPECT_NEAR(e.z, kEllipticSign, 1e-15);
  const MinkVec3 u = geodesic_image(GeodesicKind::Unipotent, 2.0);
  EXPECT_NEAR(u.y, 0.5, 1e-15);
  EXPECT_NEAR(u.z, 0.5, 1e-15);
  EXPECT_TRUE(throws_code(ErrorCode::NotInPatch, [] { geodesic_image(GeodesicKind::Elliptic, pi); }));
  for (double t = -3; t <= 3; t += 0.25) {
    EXPECT_LT(geodesic_image_check(GeodesicKind::Hyperbolic, t), 1e-12);
    EXPECT_LT(geodesic_image_check(GeodesicKind::Unipotent, t), 1e-12);
    EXPECT_LT(geodesic_image_check(GeodesicKind::Elliptic, t), 1e-12 * std::max(1.0, std::abs(std::tan(t / 2))));
    if (std::abs(t) > 0.1) {
      EXPECT_LT(geodesic_image_check(GeodesicKind::AntiHyperbolic, t), 1e-12 / std::pow(std::tanh(std::abs(t) / 2), 2));
    }
  }
}

TEST(TotallyGeodesic, Surfaces) {
  const SL2 upper = SL2::checked({2, 3, 0, 0.5});
  EXPECT_EQ(psi_vec(upper.matrix())[kY], 3.0);
  EXPECT_EQ(psi_vec(upper.matrix())[kZ], 3.0);
  EXPECT_TRUE(totally_geodesic_image_check(SurfaceKind::BorelUpper, upper));
  EXPECT_TRUE(totally_geodesic_image_check(SurfaceKind::BorelLower, SL2::checked({2, 0, 3, 0.5})));
  EXPECT_TRUE(totally_geodesic_image_check(SurfaceKind::Indefinite, SL2::checked({0, 1, -1, 0})));
  EXPECT_TRUE(totally_geodesic_image_check(SurfaceKind::Indefinite, SL2::checked({0.5, 3, -0.25, 0.5})));
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [&] { totally_geodesic_residual(SurfaceKind::BorelLower, upper); }));
  for (double t : {-1.0, 0.0, 2.0}) {
    const SL2 j = hyperbolic_geodesic_point(t);
    EXPECT_TRUE(totally_geodesic_image_check(SurfaceKind::DualPlane, j));
    const MinkVec3 m = mink_from_ein(psi(j));
    EXPECT_NEAR(m.x, 0.0, 1e-12);
    EXPECT_NEAR(m.y, -std::sinh(t), 1e-12);
    EXPECT_NEAR(m.z, -std::cosh(t), 1e-12);
  }
}

TEST(ConformalOf, MatchesIsometry) {
  Rng rng(54);
  for (int i = 0; i < 200; ++i) {
    const IsometryG0 phi{random_moderate_sl2(rng), random_moderate_sl2(rng)};
    const SL2 x = random_sl2(rng, 1.0);
    EXPECT_TRUE(approx_equal(conformal_of(phi).apply(psi(x)), psi(phi.apply(x)), 1e-9));
  }
}

TEST(CrookedSurface, Construction) {
  const CrookedSurface cs = crooked_surface(standard_configuration());
  EXPECT_LT((cs.normalizer().matrix() - Mat5::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(throws_code(ErrorCode::InvalidConfiguration,
                          [] { crooked_surface({p0(), p1(), p1(), p2()}); }));
}

TEST(CrookedSurface, MembershipExamples) {
  const CrookedSurface cs = CrookedSurface::standard();
  EXPECT_EQ(cs_membership(cs, embed_mink({0, 1, 2})), EinStratum::StemT1);
  EXPECT_EQ(cs_membership(cs, embed_mink({0, 1, -2})), EinStratum::StemT2);
  EXPECT_EQ(cs_membership(cs, pinf()), EinStratum::Covertex);
  EXPECT_EQ(cs_membership(cs, p0()), EinStratum::Vertex);
  EXPECT_EQ(cs_membership(cs, p1()), EinStratum::Hingepoint1);
  EXPECT_EQ(cs_membership(cs, p2()), EinStratum::Hingepoint2);
  EXPECT_EQ(cs_membership(cs, inversion(embed_mink({3, 2, 2}))), EinStratum::Wing1);
  EXPECT_EQ(cs_membership(cs, embed_mink({3, 2, 2})), EinStratum::Wing1);
  EXPECT_EQ(cs_membership(cs, inversion(embed_mink({0, 2, 2}))), EinStratum::Cohinge);
  EXPECT_EQ(cs_membership(cs, embed_mink({-4, 0, 0})), EinStratum::SpineCircle);
  EXPECT_EQ(cs_membership(cs, embed_mink({1, 2, 0})), EinStratum::Outside);
}

TEST(CrookedSurface, Spine) {
  const SpacelikeCircle c = cs_spine(CrookedSurface::standard());
  EXPECT_TRUE(c.contains(p0()));
  EXPECT_TRUE(c.contains(pinf()));
  EXPECT_TRUE(c.contains(embed_mink({1, 0, 0})));
  EXPECT_TRUE(c.contains(embed_mink({-1, 0, 0})));
  for (double th = 0; th < 2 * pi; th += 0.3) {
    const Vec5& r = c.at(th).rep();
    EXPECT_NEAR(r[kY], 0.0, 1e-12);
    EXPECT_NEAR(r[kZ], 0.0, 1e-12);
    EXPECT_NEAR(r[kX] * r[kX], r[kU] * r[kV], 1e-12);
  }
}

TEST(Adapted, Cases) {
  EXPECT_TRUE(is_adapted(CrookedSurface::standard()));
  const Configuration invariant{pt(1, 0, 0, 1, 1), pt(-1, 0, 0, 1, 1), pt(0, 0, 1, 1, -1), pt(0, 0, 1, -1, 1)};
  EXPECT_FALSE(is_adapted(invariant));
  EXPECT_EQ(adaptedness(invariant), Adaptedness::InvariantOnly);
  EXPECT_EQ(adaptedness(standard_configuration()), Adaptedness::Adapted);
  Rng rng(55);
  const ConformalMap5 a = random_conformal(rng);
  const Configuration moved{a.apply(p0()), a.apply(pinf()), a.apply(p1()), a.apply(p2())};
  EXPECT_EQ(adaptedness(moved), Adaptedness::Neither);
  EXPECT_TRUE(throws_code(ErrorCode::NotAdapted, [&] { ads_from_adapted(CrookedSurface(moved)); }));
}

TEST(ClosureOfLift, StandardAndRandom) {
  const Configuration c = closure_of_lift(AdSCrookedPlane::standard()).configuration();
  EXPECT_TRUE(approx_equal(c.q0, p0()));
  EXPECT_TRUE(approx_equal(c.qinf, pinf()));
  EXPECT_TRUE(approx_equal(c.q1, p1()));
  EXPECT_TRUE(approx_equal(c.q2, p2()));
  Rng rng(56);
  for (int i = 0; i < 100; ++i) {
    const AdSCrookedPlane cp(random_moderate_sl2(rng), random_unit_spacelike(rng));
    const CrookedSurface cs = closure_of_lift(cp);
    EXPECT_TRUE(is_adapted(cs));
    for (Stratum s : strata::lift_strata()) {
      const SL2 x = cp.from_standard().apply(strata::standard_lift_oracle(s, rng));
      const EinStratum got = cs_membership(cs, psi(x));
      if (s == Stratum::StemInterior) {
        EXPECT_TRUE(got == EinStratum::StemT1 || got == EinStratum::StemT2);
      } else {
        EXPECT_EQ(got, ein_label_of_lift(s, false));
      }
    }
  }
}

TEST(AdsFromAdapted, RoundTrip) {
  const AdSCrookedPlane std_back = ads_from_adapted(CrookedSurface::standard());
  EXPECT_TRUE(approx_equal(std_back.vertex_point(), AdSPoint()));
  EXPECT_LT(std::min((std_back.spine_dir() - kDiagonalUnit).sup_norm(), (std_back.spine_dir() + kDiagonalUnit).sup_norm()),
            1e-12);
  Rng rng(57);
  for (int i = 0; i < 100; ++i) {
    const AdSCrookedPlane cp(random_moderate_sl2(rng), random_unit_spacelike(rng));
    const AdSCrookedPlane back = ads_from_adapted(closure_of_lift(cp));
    EXPECT_TRUE(approx_equal(back.vertex_point(), cp.vertex_point(), 1e-8));
    const double gap = std::min((back.spine_dir() - cp.spine_dir()).sup_norm(),
                                (back.spine_dir() + cp.spine_dir()).sup_norm());
    EXPECT_LT(gap, 1e-7);
  }
}

TEST(Stabilizer, DilationsPreserveMembership) {
  Rng rng(58);
  const CrookedSurface cs = CrookedSurface::standard();
  for (int i = 0; i < 200; ++i) {
    const double lam = std::exp(uniform(rng, -2, 2));
    Mat5 d = Mat5::Identity();
    d(kU, kU) = lam;
    d(kV, kV) = 1 / lam;
    const ConformalMap5 map(d);
    for (EinStratum s : strata::surface_strata()) {
      const ProjectivePoint5 p = ProjectivePoint5::unchecked(strata::standard_surface(s, rng));
      EXPECT_EQ(cs_membership(cs, p), s);
      EXPECT_EQ(cs_membership(cs, map.apply(p)), s);
    }
  }
}
