#pragma once

// JSON encodings of the geometric objects and of verification reports.
//   Vec5            [X, Y, Z, U, V]
//   MinkVec3        [x, y, z]
//   Mat2 / SL2      [[a, b], [c, d]]
//   configuration   {"q0": Vec5, "qinf": Vec5, "q1": Vec5, "q2": Vec5}
//   E^3 plane       {"vertex": MinkVec3, "spine_dir": MinkVec3}
//   AdS plane       {"g": Mat2, "s": Mat2 (traceless)}, optional "lift": true
// An optional "type" key ("e3_plane", "ads_plane", "ads_lift", "surface")
// overrides detection by keys.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "crooked/crooked_ads.hpp"
#include "crooked/crooked_surface.hpp"
#include "crooked/minkowski.hpp"
#include "crooked/verify.hpp"

namespace crooked::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline double number(const Json& j, const char* what) {
  if (!j.is_number()) fail(ErrorCode::BadInput, std::string(what) + ": expected a number");
  return j.get<double>();
}

inline const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    fail(ErrorCode::BadInput, std::string(what) + ": expected an array of " + std::to_string(n));
  }
  return j;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::BadInput, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline Json to_json(const Vec5& v) { return Json::array({v[0], v[1], v[2], v[3], v[4]}); }
inline Json to_json(const MinkVec3& v) { return Json::array({v.x, v.y, v.z}); }
inline Json to_json(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

inline Vec5 vec5_from(const Json& j) {
  detail::array_of(j, 5, "point of Ein^3");
  Vec5 v;
  for (int i = 0; i < 5; ++i) v[i] = detail::number(j[static_cast<std::size_t>(i)], "coordinate");
  return v;
}

inline MinkVec3 mink_from(const Json& j) {
  detail::array_of(j, 3, "point of E^3");
  return {detail::number(j[0], "x"), detail::number(j[1], "y"), detail::number(j[2], "z")};
}

inline Mat2 mat2_from(const Json& j) {
  detail::array_of(j, 2, "2x2 matrix");
  const Json& r0 = detail::array_of(j[0], 2, "matrix row");
  const Json& r1 = detail::array_of(j[1], 2, "matrix row");
  return {detail::number(r0[0], "a"), detail::number(r0[1], "b"), detail::number(r1[0], "c"),
          detail::number(r1[1], "d")};
}

inline SL2 sl2_from(const Json& j) { return SL2::checked(mat2_from(j)); }

inline ProjectivePoint5 ein_point_from(const Json& j) { return point(vec5_from(j)); }

inline Json to_json(const Configuration& c) {
  return Json{{"q0", to_json(c.q0.rep())}, {"qinf", to_json(c.qinf.rep())}, {"q1", to_json(c.q1.rep())},
              {"q2", to_json(c.q2.rep())}};
}

inline Configuration configuration_from(const Json& j) {
  Configuration c{ein_point_from(detail::field(j, "q0")), ein_point_from(detail::field(j, "qinf")),
                  ein_point_from(detail::field(j, "q1")), ein_point_from(detail::field(j, "q2"))};
  validate_configuration(c);
  return c;
}

inline Json to_json(const CrookedPlaneE3& cp) {
  return Json{{"type", "e3_plane"}, {"vertex", to_json(cp.vertex())}, {"spine_dir", to_json(cp.spine_dir())}};
}

inline Json to_json(const AdSCrookedPlane& cp) {
  return Json{{"type", "ads_plane"}, {"g", to_json(cp.vertex().matrix())}, {"s", to_json(cp.spine_dir().matrix())}};
}

using CrookedObject = std::variant<CrookedPlaneE3, AdSCrookedPlane, HatAdSCrookedPlane, CrookedSurface>;

inline CrookedObject object_from(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::BadInput, "object file must hold a JSON object");
  std::string type = j.contains("type") && j["type"].is_string() ? j["type"].get<std::string>() : "";
  if (type.empty()) {
    if (j.contains("q0")) {
      type = "surface";
    } else if (j.contains("spine_dir")) {
      type = "e3_plane";
    } else if (j.contains("g")) {
      type = j.value("lift", false) ? "ads_lift" : "ads_plane";
    } else {
      fail(ErrorCode::BadInput, "cannot tell the object type");
    }
  }
  if (type == "e3_plane") return CrookedPlaneE3(mink_from(detail::field(j, "vertex")), mink_from(detail::field(j, "spine_dir")));
  if (type == "surface") return CrookedSurface(configuration_from(j));
  if (type == "ads_plane" || type == "ads_lift") {
    const SL2 g = sl2_from(detail::field(j, "g"));
    const TangentSL2 s = TangentSL2::from_matrix(mat2_from(detail::field(j, "s")), 1e-9);
    if (type == "ads_lift") return HatAdSCrookedPlane(g, s);
    return AdSCrookedPlane(g, s);
  }
  fail(ErrorCode::BadInput, "unknown object type: " + type);
}

/// One stratum name per point. Points are an array, or {"points": [...]}.
inline std::vector<std::string> classify_points(const CrookedObject& obj, const Json& pts_in) {
  const Json& pts = pts_in.is_object() ? detail::field(pts_in, "points") : pts_in;
  if (!pts.is_array()) fail(ErrorCode::BadInput, "points must be a JSON array");
  std::vector<std::string> out;
  for (const Json& p : pts) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, CrookedPlaneE3>) {
            out.emplace_back(to_string(membership(o, mink_from(p))));
          } else if constexpr (std::is_same_v<T, AdSCrookedPlane>) {
            out.emplace_back(to_string(membership_ads(o, AdSPoint(sl2_from(p)))));
          } else if constexpr (std::is_same_v<T, HatAdSCrookedPlane>) {
            out.emplace_back(to_string(membership_hat(o, sl2_from(p))));
          } else {
            out.emplace_back(to_string(cs_membership(o, ein_point_from(p))));
          }
        },
        obj);
  }
  return out;
}

inline Json to_json(const verify::SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"check", c.check},
                          {"samples", c.samples},
                          {"failures", c.failures},
                          {"max_residual", c.max_residual},
                          {"passed", c.passed()}});
  }
  return Json{{"suite", r.suite}, {"seed", r.seed}, {"samples", r.samples}, {"checks", checks}, {"passed", r.passed()}};
}

}  // namespace crooked::io
