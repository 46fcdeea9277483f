// A short walk through the library: a crooked plane in Minkowski space, the
// corresponding plane in anti-de Sitter space, and its closure in Ein^3.

#include <cstdio>
#include <numbers>

#include "crooked/crooked.hpp"

using namespace crooked;

int main() {
  const CrookedPlaneE3 flat({0, 0, 0}, {1, 0, 0});
  for (const MinkVec3& q : {MinkVec3{0, 1, 2}, MinkVec3{3, 2, 2}, MinkVec3{-3, 2, -2}}) {
    std::printf("E3    (%g, %g, %g) -> %s\n", q.x, q.y, q.z, std::string(to_string(membership(flat, q))).c_str());
  }

  // Same picture in AdS: the vertex is the identity, the spine the diagonal subgroup.
  const AdSCrookedPlane ads = AdSCrookedPlane::standard();
  const AdSPoint quarter_turn = exp_at(AdSPoint(), (std::numbers::pi / 2) * kRotationGenerator);
  std::printf("AdS   exp(pi/2 K) -> %s\n", std::string(to_string(membership_ads(ads, quarter_turn))).c_str());

  const HatAdSCrookedPlane lifted = lift(ads);
  const SL2 minus_unipotent = SL2::checked({-1, -1, 0, -1});
  std::printf("lift  -[[1,1],[0,1]] -> %s\n", std::string(to_string(membership_hat(lifted, minus_unipotent))).c_str());

  // The closure of the lift is a crooked surface whose stem configuration is
  // fixed by the inversion in the unit sphere.
  const CrookedSurface surface = closure_of_lift(ads);
  const Configuration& c = surface.configuration();
  auto show = [](const ProjectivePoint5& p) {
    const Vec5& r = p.rep();
    // Adding 0.0 turns a negative zero into a plain zero.
    std::printf("[%g:%g:%g:%g:%g]", r[0] + 0.0, r[1] + 0.0, r[2] + 0.0, r[3] + 0.0, r[4] + 0.0);
  };
  std::printf("Ein3  hingepoints ");
  show(c.q1);
  std::printf(" and ");
  show(c.q2);
  std::printf(", adapted = %s\n", is_adapted(surface) ? "yes" : "no");

  const AdSCrookedPlane back = ads_from_adapted(surface);
  const Mat2 s = back.spine_dir().matrix();
  std::printf("back  spine [[%g, %g], [%g, %g]]\n", s.a, s.b, s.c, s.d);
  return 0;
}
