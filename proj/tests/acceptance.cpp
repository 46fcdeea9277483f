// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance [path/to/crooked]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crooked/crooked.hpp"

#ifndef CROOKED_CLI_PATH
#define CROOKED_CLI_PATH "crooked"
#endif

namespace {

using namespace crooked;
using verify::CheckReport;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void absorb(Outcome& o, const CheckReport& r) {
  o.ok = o.ok && r.passed();
  std::ostringstream s;
  s << r.check << " n=" << r.samples << " fail=" << r.failures << " max=" << r.max_residual;
  o.detail += (o.detail.empty() ? "" : "; ") + s.str();
}

const CheckReport& pick(const std::vector<CheckReport>& all, const std::string& name) {
  for (const auto& c : all) {
    if (c.check == name) return c;
  }
  fail(ErrorCode::BadInput, "no check named " + name);
}

Outcome golden() {
  Outcome o;
  auto expect = [&](const ProjectivePoint5& got, const Vec5& want, const char* what) {
    const double d = projective_distance(got, point(want));
    if (!(d <= 1e-9)) {
      o.ok = false;
      o.detail += std::string(what) + " off by " + std::to_string(d) + "; ";
    }
  };
  expect(psi(SL2()), vec5(0, 0, 0, 0, 1), "psi(1)");
  expect(psi(-SL2()), vec5(0, 0, 0, 1, 0), "psi(-1)");
  for (double t : {-3.0, 1.0, 7.0}) expect(psi(SL2::checked({1, t, 0, 1})), vec5(0, t, t, 0, 4), "unipotent");
  const Configuration c = closure_of_lift(AdSCrookedPlane::standard()).configuration();
  expect(c.q1, vec5(0, 1, 1, 0, 0), "hingepoint 1");
  expect(c.q2, vec5(0, 1, -1, 0, 0), "hingepoint 2");
  if (o.ok) o.detail = "7 points within 1e-9";
  return o;
}

Outcome equivariance() {
  verify::RunConfig cfg;
  Outcome o;
  absorb(o, verify::psi_inversion_check(cfg, 100000));
  absorb(o, verify::psi_null_check(cfg, 100000));
  return o;
}

Outcome exponential() {
  verify::RunConfig cfg;
  cfg.samples = 10000;
  const auto all = verify::suite_sl2(cfg);
  Outcome o;
  absorb(o, pick(all, "sl2.exp_oracle"));
  absorb(o, pick(all, "sl2.exp_branch"));
  return o;
}

Outcome geodesics() {
  Outcome o;
  absorb(o, verify::geodesic_images_check());
  return o;
}

Outcome main_theorem(int which) {
  verify::RunConfig cfg;
  const verify::MainTheoremParams p{100, 1000, 10000};
  const auto reports = which == 1 ? verify::main_theorem_1(cfg, p)
                       : which == 2 ? verify::main_theorem_2(cfg, p)
                                    : verify::main_theorem_3(cfg, p);
  Outcome o;
  for (const auto& r : reports) absorb(o, r);
  return o;
}

Outcome structural() {
  verify::RunConfig cfg;
  cfg.samples = 1000;
  const auto ads = verify::suite_ads(cfg);
  const auto sl2 = verify::suite_sl2(cfg);
  Outcome o;
  absorb(o, pick(ads, "ads.lie_triple"));
  absorb(o, pick(ads, "ads.dual_radius"));
  absorb(o, pick(sl2, "sl2.periodicity"));
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("crooked_ac9_" + std::to_string(std::rand()));
  fs::create_directories(dir);
  Outcome o;
  std::string reports[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = "\"" + cli + "\" verify all --seed 42 --out \"" + out.string() + "\" > \"" +
                            (dir / "stdout.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    if (status != 0) {
      o.ok = false;
      o.detail += "run " + std::to_string(i) + " exited with status " + std::to_string(status) + "; ";
    }
    reports[i] = slurp(out);
  }
  if (reports[0].empty() || reports[0] != reports[1]) {
    o.ok = false;
    o.detail += "reports differ or are empty";
  } else if (o.ok) {
    o.detail = "two runs, " + std::to_string(reports[0].size()) + " identical bytes, exit 0";
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : CROOKED_CLI_PATH;
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "golden coordinates", 1, golden},
      {"AC2", "Psi equivariance and null cone, 1e5 samples", 10, equivariance},
      {"AC3", "exponential against series oracle", 5, exponential},
      {"AC4", "geodesic images", 1, geodesics},
      {"AC5", "tangent cone theorem, 100 instances", 60, [] { return main_theorem(1); }},
      {"AC6", "closure of lifts is adapted, 100 instances", 60, [] { return main_theorem(2); }},
      {"AC7", "adapted surfaces come from AdS planes, 100 instances", 120, [] { return main_theorem(3); }},
      {"AC8", "structural invariants", 5, structural},
      {"AC9", "CLI determinism", 1e9, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(c.budget_s) + " s budget";
    }
    if (!o.ok) ++failed;
    std::printf("%s %s: %s (%.2f s) [%s]\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
