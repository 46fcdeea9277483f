#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "crooked/random.hpp"
#include "crooked/sl2.hpp"

using namespace crooked;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_mat_near(const Mat2& x, const Mat2& y, double tol) { EXPECT_LE(distance(x, y), tol) << x.a << " " << x.b << " " << x.c << " " << x.d; }

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code() == code;
  }
  return false;
}

const TangentSL2 kDiag{1, 0, 0};   // [[1,0],[0,-1]]
const TangentSL2 kSym{0, 1, 1};    // [[0,1],[1,0]]
const TangentSL2 kRot{0, -1, 1};   // [[0,-1],[1,0]]

}  // namespace

TEST(Identification, BasisImages) {
  const MinkVec3 d = sl2_to_mink(kDiag), s = sl2_to_mink(kSym), r = sl2_to_mink(kRot);
  EXPECT_EQ(d.x, 1.0);
  EXPECT_EQ(d.y, 0.0);
  EXPECT_EQ(d.z, 0.0);
  EXPECT_EQ(s.y, 1.0);
  EXPECT_EQ(s.z, 0.0);
  // (b - c)/2 = -1 for the rotation generator.
  EXPECT_EQ(r.x, 0.0);
  EXPECT_EQ(r.y, 0.0);
  EXPECT_EQ(r.z, -1.0);
  const TangentSL2 back = mink_to_sl2({0.3, -1.2, 2.5});
  const MinkVec3 m = sl2_to_mink(back);
  EXPECT_DOUBLE_EQ(m.x, 0.3);
  EXPECT_DOUBLE_EQ(m.y, -1.2);
  EXPECT_DOUBLE_EQ(m.z, 2.5);
}

TEST(LorentzDot, Basis) {
  EXPECT_DOUBLE_EQ(lorentz_dot(kDiag, kDiag), 1.0);
  EXPECT_DOUBLE_EQ(lorentz_dot(kSym, kSym), 1.0);
  EXPECT_DOUBLE_EQ(lorentz_dot(kRot, kRot), -1.0);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const TangentSL2 a = random_tangent(rng, 3), b = random_tangent(rng, 3);
    EXPECT_NEAR(lorentz_dot(a, b), mink_dot(sl2_to_mink(a), sl2_to_mink(b)), 1e-12);
    EXPECT_NEAR(lorentz_dot(a, b), 0.5 * (a.matrix() * b.matrix()).trace(), 1e-12);
  }
}

TEST(Cross, Values) {
  // 1/2 [diag, sym] = [[0,1],[-1,0]], Minkowski (0,0,1).
  const MinkVec3 c = sl2_to_mink(cross(kDiag, kSym));
  EXPECT_DOUBLE_EQ(c.x, 0.0);
  EXPECT_DOUBLE_EQ(c.y, 0.0);
  EXPECT_DOUBLE_EQ(c.z, 1.0);
  EXPECT_EQ(cross(kSym, kSym).sup_norm(), 0.0);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const TangentSL2 a = random_tangent(rng, 2), b = random_tangent(rng, 2);
    EXPECT_NEAR(lorentz_dot(cross(a, b), a), 0.0, 1e-12);
    EXPECT_NEAR(lorentz_dot(cross(a, b), b), 0.0, 1e-12);
  }
}

TEST(Det3, OrientationConstant) {
  EXPECT_DOUBLE_EQ(det3(kDiag, kSym, mink_to_sl2({0, 0, 1})), 1.0);
  // (A x B) . C = -Det(A, B, C) under this identification.
  EXPECT_DOUBLE_EQ(lorentz_dot(cross(kDiag, kSym), mink_to_sl2({0, 0, 1})), kTripleProductSign);
  EXPECT_EQ(det3(kDiag, kDiag, kRot), 0.0);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const TangentSL2 a = random_tangent(rng, 2), b = random_tangent(rng, 2), c = random_tangent(rng, 2);
    EXPECT_NEAR(lorentz_dot(cross(a, b), c), lorentz_dot(cross(b, c), a), 1e-12);
    EXPECT_NEAR(lorentz_dot(cross(a, b), c), kTripleProductSign * det3(a, b, c), 1e-12);
  }
}

TEST(KillingForm, EightTimesQuadraticForm) {
  // tr(ad(A)^2) computed from the 3x3 matrix of ad(A) in the basis diag, E, F.
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const TangentSL2 a = random_tangent(rng, 2);
    const TangentSL2 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    double ad[3][3];
    for (int j = 0; j < 3; ++j) {
      const TangentSL2 w = TangentSL2::from_matrix(bracket(a.matrix(), basis[j].matrix()));
      ad[0][j] = w.a();
      ad[1][j] = w.b();
      ad[2][j] = w.c();
    }
    double tr = 0;
    for (int r = 0; r < 3; ++r) {
      for (int k = 0; k < 3; ++k) tr += ad[r][k] * ad[k][r];
    }
    EXPECT_NEAR(tr, 8.0 * lorentz_dot(a, a), 1e-10);
  }
}

TEST(Exp, ClosedForms) {
  expect_mat_near(exp_sl2(0.7 * kDiag).matrix(), {std::exp(0.7), 0, 0, std::exp(-0.7)}, 1e-15);
  const double th = 1.3;
  expect_mat_near(exp_sl2(th * kRot).matrix(), {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)}, 1e-15);
  const double al = 0.8, be = -1.7;
  expect_mat_near(exp_sl2({al, be, 0}).matrix(), {std::exp(al), be / al * std::sinh(al), 0, std::exp(-al)}, 1e-14);
  expect_mat_near(exp_sl2({0, 1, 0}).matrix(), {1, 1, 0, 1}, 0.0);
}

TEST(Exp, SeriesOracle) {
  expect_mat_near(exp_series_oracle({0, 0, 0}).matrix(), Mat2::identity(), 0.0);
  expect_mat_near(exp_series_oracle({0, 1, 0}).matrix(), {1, 1, 0, 1}, 0.0);
  EXPECT_TRUE(throws_code(ErrorCode::NormTooLarge, [] { exp_series_oracle({21, 0, 0}); }));
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const TangentSL2 xi = random_tangent(rng, 5);
    EXPECT_LE(distance(exp_sl2(xi).matrix(), exp_series_oracle(xi).matrix()), 1e-11);
    EXPECT_NEAR(exp_sl2(xi).matrix().det(), 1.0, 1e-10 * std::max(1.0, exp_sl2(xi).matrix().sup_norm()));
  }
}

TEST(Exp, NearNullBranch) {
  Rng rng(10);
  for (int i = 0; i < 500; ++i) {
    const double a = uniform(rng, -3, 3), b = uniform(rng, 0.5, 3), q = uniform(rng, -1e-8, 1e-8);
    const TangentSL2 xi(a, b, (q - a * a) / b);
    EXPECT_LE(distance(exp_sl2(xi).matrix(), exp_series_oracle(xi).matrix()), 1e-9);
  }
}

TEST(Exp, Periodicity) {
  expect_mat_near(exp_sl2(kPi * kRotationGenerator).matrix(), -Mat2::identity(), 1e-10);
  expect_mat_near(exp_sl2(2 * kPi * kRotationGenerator).matrix(), Mat2::identity(), 1e-10);
}

TEST(Classify, Types) {
  EXPECT_EQ(classify(kDiag), VectorType::Spacelike);
  EXPECT_EQ(classify(kRot), VectorType::Timelike);
  EXPECT_EQ(classify({0, 1, 0}), VectorType::Null);
  EXPECT_TRUE(is_future(kFutureUnitTimelike));
  EXPECT_FALSE(is_future(kRot));
}

TEST(GeodesicConnect, Cases) {
  const auto d = geodesic_connect_dbl(SL2::unchecked({std::exp(1.0), 0, 0, std::exp(-1.0)}));
  ASSERT_TRUE(d.has_value());
  EXPECT_LE((*d - kDiag).sup_norm(), 1e-14);
  EXPECT_FALSE(geodesic_connect_dbl(SL2::unchecked({-std::exp(1.0), 0, 0, -std::exp(-1.0)})).has_value());
  const auto m = geodesic_connect_dbl(SL2::unchecked(-Mat2::identity()));
  ASSERT_TRUE(m.has_value());
  EXPECT_LE((*m - kPi * kRot).sup_norm(), 1e-15);
  // Tie case: trace -2 but not -1.
  EXPECT_FALSE(geodesic_connect_dbl(SL2::unchecked({-1, 1, 0, -1})).has_value());
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const SL2 g = random_sl2(rng, 1.0);
    if (const auto xi = geodesic_connect_dbl(g)) {
      EXPECT_LE(distance(exp_sl2(*xi).matrix(), g.matrix()), 1e-9 * std::max(1.0, g.matrix().sup_norm()));
    }
  }
}

TEST(UpperHalfplane, Embedding) {
  expect_mat_near(h2_embed(0, 1).matrix(), PSL2(SL2::unchecked({0, -1, 1, 0})).matrix(), 1e-15);
  const double t = 0.9;
  expect_mat_near(h2_embed(0, std::exp(t)).matrix(), PSL2(hyperbolic_geodesic_point(t)).matrix(), 1e-14);
  const PSL2 h = h2_embed(1, 1);
  expect_mat_near(h.matrix(), PSL2(SL2::unchecked({1, -2, 1, -1})).matrix(), 1e-15);
  EXPECT_NEAR(h.matrix().det(), 1.0, 1e-15);
  EXPECT_NEAR(h.matrix().trace(), 0.0, 1e-15);
  EXPECT_TRUE(throws_code(ErrorCode::NotUpperHalfplane, [] { h2_embed(0, 0); }));
}

TEST(RankOne, KernelImage) {
  auto [k1, i1] = rank1_kernel_image({1, 0, 0, 0});
  EXPECT_TRUE(approx_equal(k1, RP1Point(0, 1)));
  EXPECT_TRUE(approx_equal(i1, RP1Point(1, 0)));
  auto [k2, i2] = rank1_kernel_image({0, 1, 0, 0});
  EXPECT_TRUE(approx_equal(k2, RP1Point(1, 0)));
  EXPECT_TRUE(approx_equal(i2, RP1Point(1, 0)));
  auto [k3, i3] = rank1_kernel_image({1, 1, 1, 1});
  EXPECT_TRUE(approx_equal(k3, RP1Point(1, -1)));
  EXPECT_TRUE(approx_equal(i3, RP1Point(1, 1)));
  EXPECT_TRUE(throws_code(ErrorCode::NotRankOne, [] { rank1_kernel_image(Mat2::identity()); }));
}

TEST(LieTriple, Planes) {
  EXPECT_TRUE(lie_triple_check(kDiag, {0, 1, 0}));
  Rng rng(13);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(lie_triple_check(random_tangent(rng, 2), random_tangent(rng, 2)));
  EXPECT_TRUE(throws_code(ErrorCode::DependentPair, [] { lie_triple_check(kDiag, 2.0 * kDiag); }));
}

TEST(PSL2, CanonicalSign) {
  const PSL2 a(SL2::unchecked({-1, 2, 0, -1}));
  EXPECT_GT(a.matrix().a, 0);
  const PSL2 b(a.rep());
  EXPECT_EQ(distance(a, b), 0.0);
  EXPECT_TRUE(approx_equal(PSL2(SL2::unchecked(-Mat2::identity())), PSL2()));
}

TEST(SL2, CheckedRejectsDeterminant) {
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [] { SL2::checked({2, 0, 0, 1}); }));
  EXPECT_TRUE(throws_code(ErrorCode::NotTraceless, [] { TangentSL2::from_matrix({1, 0, 0, 1}); }));
}
