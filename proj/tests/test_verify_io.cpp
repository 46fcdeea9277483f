#include <gtest/gtest.h>

#include <sstream>

#include "crooked/crooked.hpp"

using namespace crooked;
using io::Json;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST(Verify, SuitesPassAndAreDeterministic) {
  verify::RunConfig cfg;
  cfg.seed = 11;
  cfg.samples = 300;
  cfg.threads = 1;
  const verify::SuiteReport one = verify::run_suite("all", cfg);
  EXPECT_TRUE(one.passed());
  cfg.threads = 3;
  const verify::SuiteReport three = verify::run_suite("all", cfg);
  EXPECT_EQ(io::to_json(one).dump(), io::to_json(three).dump());
  for (const auto& c : one.checks) EXPECT_GT(c.samples, 0) << c.check;
}

TEST(Verify, BadInput) {
  verify::RunConfig cfg;
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [&] { verify::run_suite("bogus", cfg); }));
  cfg.samples = 0;
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [&] { verify::run_suite("core", cfg); }));
  Tolerances tol;
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [&] { set_tolerance(tol, "nope", 1.0); }));
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [&] { set_tolerance(tol, "null", -1.0); }));
  set_tolerance(tol, "membership", 1e-7);
  EXPECT_EQ(tol.membership, 1e-7);
}

TEST(Verify, TallyTreatsNanAsFailure) {
  verify::Tally t;
  t.residual(std::nan(""), 1.0);
  t.residual(0.5, 1.0);
  EXPECT_EQ(t.samples, 2);
  EXPECT_EQ(t.failures, 1);
}

TEST(Verify, FailingCheckIsReported) {
  verify::RunConfig cfg;
  const verify::CheckReport r = verify::sampled("always.off", cfg, 40, [](Rng& rng, verify::Tally& t) {
    t.residual(uniform(rng, 1.0, 2.0), 0.5);
  });
  EXPECT_EQ(r.samples, 40);
  EXPECT_EQ(r.failures, 40);
  EXPECT_FALSE(r.passed());
}

TEST(Json, ObjectsRoundTrip) {
  const io::CrookedObject e3 = io::object_from(Json::parse(R"({"vertex": [1, 2, 3], "spine_dir": [0, 1, 0]})"));
  ASSERT_TRUE(std::holds_alternative<CrookedPlaneE3>(e3));
  const Json back = io::to_json(std::get<CrookedPlaneE3>(e3));
  EXPECT_EQ(back["type"], "e3_plane");
  EXPECT_EQ(back["vertex"][2], 3.0);

  const io::CrookedObject ads = io::object_from(Json::parse(R"({"g": [[1, 0], [0, 1]], "s": [[1, 0], [0, -1]]})"));
  ASSERT_TRUE(std::holds_alternative<AdSCrookedPlane>(ads));
  EXPECT_EQ(io::to_json(std::get<AdSCrookedPlane>(ads))["s"][1][1], -1.0);
  const io::CrookedObject hat =
      io::object_from(Json::parse(R"({"g": [[1, 0], [0, 1]], "s": [[1, 0], [0, -1]], "lift": true})"));
  EXPECT_TRUE(std::holds_alternative<HatAdSCrookedPlane>(hat));

  const Json cfg = io::to_json(standard_configuration());
  const io::CrookedObject cs = io::object_from(cfg);
  EXPECT_TRUE(std::holds_alternative<CrookedSurface>(cs));
  EXPECT_TRUE(approx_equal(io::configuration_from(cfg).q1, p1()));
}

TEST(Json, Classification) {
  const io::CrookedObject e3 = io::object_from(Json::parse(R"({"vertex": [0, 0, 0], "spine_dir": [1, 0, 0]})"));
  const auto labels = io::classify_points(e3, Json::parse(R"({"points": [[0, 1, 2], [3, 2, 2], [-3, 2, -2]]})"));
  EXPECT_EQ(labels, (std::vector<std::string>{"StemInterior", "Wing1", "Wing2"}));
  const io::CrookedObject hat =
      io::object_from(Json::parse(R"({"type": "ads_lift", "g": [[1, 0], [0, 1]], "s": [[1, 0], [0, -1]]})"));
  EXPECT_EQ(io::classify_points(hat, Json::parse(R"([[[-1, -1], [0, -1]], [[-1, 0], [0, -1]]])")),
            (std::vector<std::string>{"Cohinge1", "Covertex"}));
  const io::CrookedObject cs = io::object_from(io::to_json(standard_configuration()));
  EXPECT_EQ(io::classify_points(cs, Json::parse(R"([[0, 0, 0, 1, 0]])")), std::vector<std::string>{"Covertex"});
}

TEST(Json, Errors) {
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [] { io::object_from(Json::parse(R"({"vertex": [0, 0]})")); }));
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [] { io::object_from(Json::parse("[1, 2]")); }));
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [] { io::sl2_from(Json::parse("[[1, 1], [1, 1]]")); }));
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [] { io::mink_from(Json::parse(R"([1, "a", 2])")); }));
  EXPECT_TRUE(throws_code(ErrorCode::NotUnitSpacelike,
                          [] { io::object_from(Json::parse(R"({"vertex": [0, 0, 0], "spine_dir": [0, 0, 1]})")); }));
  EXPECT_TRUE(throws_code(ErrorCode::InvalidConfiguration, [] {
    io::configuration_from(Json::parse(
        R"({"q0": [0,0,0,0,1], "qinf": [0,0,0,0,1], "q1": [0,1,1,0,0], "q2": [0,1,-1,0,0]})"));
  }));
}

TEST(Mesh, E3Groups) {
  long bad = -1;
  const MeshOutput m = mesh_e3(CrookedPlaneE3({1, 2, 3}, {0, 1, 0}), 8, &bad);
  EXPECT_EQ(bad, 0);
  ASSERT_EQ(m.groups.size(), 3u);
  EXPECT_EQ(m.groups[0].name, "stem");
  for (const auto& g : m.groups) EXPECT_FALSE(g.triangles.empty());
  std::ostringstream os;
  write_obj(os, m);
  const std::string text = os.str();
  EXPECT_NE(text.find("g wing2"), std::string::npos);
  EXPECT_NE(text.find("\nf "), std::string::npos);
  EXPECT_TRUE(throws_code(ErrorCode::BadInput, [] { mesh_e3(CrookedPlaneE3::standard(), 1); }));
}

TEST(Mesh, AdSStaysInStrata) {
  long bad = -1;
  const MeshOutput m = mesh_ads(AdSCrookedPlane::standard(), 12, &bad);
  EXPECT_EQ(bad, 0);
  EXPECT_EQ(m.groups.size(), 3u);
  EXPECT_GT(m.face_count(), 0u);
}
