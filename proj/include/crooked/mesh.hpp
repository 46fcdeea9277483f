#pragma once

// Triangulated stem and wings of a crooked plane, written as OBJ with one
// group per stratum. E^3 planes are meshed directly; AdS planes are meshed
// in their tangent cone, pushed through the exponential map and shown as
// the Psi-image in the Minkowski chart.

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "crooked/crooked_ads.hpp"
#include "crooked/embedding.hpp"
#include "crooked/minkowski.hpp"

namespace crooked {

struct MeshGroup {
  std::string name;
  std::vector<std::array<int, 3>> triangles;
};

struct MeshOutput {
  std::vector<std::array<double, 3>> vertices;
  std::vector<MeshGroup> groups;

  std::size_t face_count() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.triangles.size();
    return n;
  }
};

namespace detail {

/// Parametrised pieces of the standard plane (in standard coordinates).
struct StandardPatch {
  std::string group;
  std::vector<MinkVec3> points;
  std::vector<std::array<int, 3>> triangles;
};

/// Triangle with corners a, b, c subdivided n times along each side.
inline void add_triangle_grid(StandardPatch& p, const MinkVec3& a, const MinkVec3& b, const MinkVec3& c, int n) {
  const int base = static_cast<int>(p.points.size());
  auto index = [&](int i, int j) { return base + i * (n + 1) - i * (i - 1) / 2 + j; };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const double u = static_cast<double>(i) / n, v = static_cast<double>(j) / n;
      p.points.push_back(a + u * (b - a) + v * (c - a));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - i; ++j) {
      p.triangles.push_back({index(i, j), index(i + 1, j), index(i, j + 1)});
      if (j + 1 < n - i) p.triangles.push_back({index(i + 1, j), index(i + 1, j + 1), index(i, j + 1)});
    }
  }
}

/// Rectangle {corner + u*du + v*dv : u, v in [0,1]} on an n x n grid.
inline void add_quad_grid(StandardPatch& p, const MinkVec3& corner, const MinkVec3& du, const MinkVec3& dv, int n) {
  const int base = static_cast<int>(p.points.size());
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      p.points.push_back(corner + (static_cast<double>(i) / n) * du + (static_cast<double>(j) / n) * dv);
    }
  }
  auto index = [&](int i, int j) { return base + i * (n + 1) + j; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.triangles.push_back({index(i, j), index(i + 1, j), index(i + 1, j + 1)});
      p.triangles.push_back({index(i, j), index(i + 1, j + 1), index(i, j + 1)});
    }
  }
}

/// Stem up to time `stem_r`, wings up to `wing_r` in both directions.
inline std::vector<StandardPatch> standard_patches(int n, double stem_r, double wing_r) {
  StandardPatch stem{"stem", {}, {}};
  add_triangle_grid(stem, {0, 0, 0}, {0, -stem_r, stem_r}, {0, stem_r, stem_r}, n);
  add_triangle_grid(stem, {0, 0, 0}, {0, stem_r, -stem_r}, {0, -stem_r, -stem_r}, n);
  StandardPatch w1{"wing1", {}, {}};
  add_quad_grid(w1, {0, -wing_r, -wing_r}, {wing_r, 0, 0}, {0, 2 * wing_r, 2 * wing_r}, n);
  StandardPatch w2{"wing2", {}, {}};
  add_quad_grid(w2, {0, -wing_r, wing_r}, {-wing_r, 0, 0}, {0, 2 * wing_r, -2 * wing_r}, n);
  return {stem, w1, w2};
}

/// Strata in the closure of each group.
inline bool in_closure(const std::string& group, Stratum s) {
  if (s == Stratum::Vertex) return true;
  if (group == "stem") return s == Stratum::StemInterior || s == Stratum::Hinge1 || s == Stratum::Hinge2;
  if (group == "wing1") return s == Stratum::Wing1 || s == Stratum::Hinge1 || s == Stratum::Spine;
  if (group == "wing2") return s == Stratum::Wing2 || s == Stratum::Hinge2 || s == Stratum::Spine;
  return false;
}

inline double triangle_area(const std::array<double, 3>& a, const std::array<double, 3>& b,
                            const std::array<double, 3>& c) {
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double x = u[1] * v[2] - u[2] * v[1], y = u[2] * v[0] - u[0] * v[2], z = u[0] * v[1] - u[1] * v[0];
  return 0.5 * std::sqrt(x * x + y * y + z * z);
}

/// Builds the mesh; `place` maps a standard point to output coordinates and
/// reports whether the point re-classifies into the closure of its group.
template <class Place>
MeshOutput build_mesh(int resolution, double stem_r, double wing_r, Place place, long& misclassified) {
  if (resolution < 2) fail(ErrorCode::BadInput, "mesh resolution must be at least 2");
  MeshOutput mesh;
  misclassified = 0;
  for (const StandardPatch& patch : standard_patches(resolution, stem_r, wing_r)) {
    const int base = static_cast<int>(mesh.vertices.size());
    std::vector<bool> ok;
    for (const MinkVec3& p : patch.points) {
      std::array<double, 3> out{};
      const bool valid = place(patch.group, p, out);
      ok.push_back(valid);
      mesh.vertices.push_back(out);
    }
    MeshGroup g{patch.group, {}};
    for (const auto& t : patch.triangles) {
      if (!ok[static_cast<std::size_t>(t[0])] || !ok[static_cast<std::size_t>(t[1])] ||
          !ok[static_cast<std::size_t>(t[2])]) {
        continue;
      }
      const std::array<int, 3> f{base + t[0], base + t[1], base + t[2]};
      const auto& vs = mesh.vertices;
      if (triangle_area(vs[static_cast<std::size_t>(f[0])], vs[static_cast<std::size_t>(f[1])],
                        vs[static_cast<std::size_t>(f[2])]) <= 1e-12) {
        continue;
      }
      g.triangles.push_back(f);
    }
    mesh.groups.push_back(std::move(g));
  }
  return mesh;
}

}  // namespace detail

/// Mesh of an E^3 crooked plane; every vertex is re-classified against its group.
inline MeshOutput mesh_e3(const CrookedPlaneE3& cp, int resolution, long* misclassified = nullptr,
                          double radius = 2.0) {
  long bad = 0;
  MeshOutput m = detail::build_mesh(resolution, radius, radius, [&](const std::string& group, const MinkVec3& p,
                                                                    std::array<double, 3>& out) {
    const MinkVec3 q = cp.from_standard(p);
    out = {q.x, q.y, q.z};
    if (!detail::in_closure(group, membership(cp, q))) ++bad;
    return true;
  }, bad);
  if (misclassified) *misclassified = bad;
  return m;
}

/// Psi-image of an AdS crooked plane (lift with vertex g) in the Minkowski
/// chart. Stem radius stays below pi/2; vertices leaving the chart are dropped
/// together with their faces.
inline MeshOutput mesh_ads(const AdSCrookedPlane& cp, int resolution, long* misclassified = nullptr) {
  long bad = 0;
  MeshOutput m = detail::build_mesh(resolution, 1.2, 2.0, [&](const std::string& group, const MinkVec3& p,
                                                               std::array<double, 3>& out) {
    const TangentSL2 xi = adjoint(cp.frame(), mink_to_sl2(p));
    const SL2 x = exp_at(cp.vertex(), xi);
    if (!detail::in_closure(group, membership_ads(cp, AdSPoint(x)))) ++bad;
    const Vec5 r = psi_vec(x.matrix());
    if (std::abs(r[kV]) <= 1e-6 * sup_norm(r)) {
      out = {0, 0, 0};
      return false;
    }
    out = {r[kX] / r[kV], r[kY] / r[kV], r[kZ] / r[kV]};
    return true;
  }, bad);
  if (misclassified) *misclassified = bad;
  return m;
}

inline void write_obj(std::ostream& os, const MeshOutput& mesh) {
  char buf[96];
  os << "# crooked plane mesh\n";
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    os << buf;
  }
  for (const auto& g : mesh.groups) {
    os << "g " << g.name << "\n";
    for (const auto& t : g.triangles) os << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  }
}

}  // namespace crooked
