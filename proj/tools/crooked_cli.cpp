// crooked: command-line front end.
//   crooked verify <suite> [--seed N] [--samples N] [--tol name=val]... [--out report.json]
//   crooked membership <obj.json> <points.json>
//   crooked adapted <cfg.json>
//   crooked export-mesh <obj.json> --resolution N --out mesh.obj
// Exit codes: 0 success, 1 bad input, 2 failed verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crooked/crooked.hpp"

namespace {

using crooked::io::Json;

constexpr int kBadInput = 1;
constexpr int kFailed = 2;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) crooked::fail(crooked::ErrorCode::BadInput, "cannot open " + path);
  return Json::parse(in);
}

int cmd_verify(const std::string& suite, std::uint64_t seed, long samples, const std::vector<std::string>& tols,
               const std::string& out) {
  crooked::verify::RunConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  for (const std::string& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) crooked::fail(crooked::ErrorCode::BadInput, "--tol expects name=value");
    double value = 0;
    try {
      value = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      crooked::fail(crooked::ErrorCode::BadInput, "bad tolerance value in " + t);
    }
    crooked::set_tolerance(cfg.tol, t.substr(0, eq), value);
  }
  const crooked::verify::SuiteReport report = crooked::verify::run_suite(suite, cfg);
  const std::string text = crooked::io::to_json(report).dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) crooked::fail(crooked::ErrorCode::BadInput, "cannot write " + out);
    f << text;
  }
  return report.passed() ? 0 : kFailed;
}

int cmd_membership(const std::string& obj_path, const std::string& pts_path) {
  const crooked::io::CrookedObject obj = crooked::io::object_from(read_json(obj_path));
  for (const std::string& s : crooked::io::classify_points(obj, read_json(pts_path))) std::cout << s << "\n";
  return 0;
}

int cmd_adapted(const std::string& path) {
  const crooked::Configuration cfg = crooked::io::configuration_from(read_json(path));
  std::cout << crooked::to_string(crooked::adaptedness(cfg)) << "\n";
  return 0;
}

int cmd_export_mesh(const std::string& obj_path, int resolution, const std::string& out) {
  const crooked::io::CrookedObject obj = crooked::io::object_from(read_json(obj_path));
  long bad = 0;
  crooked::MeshOutput mesh;
  if (const auto* e3 = std::get_if<crooked::CrookedPlaneE3>(&obj)) {
    mesh = crooked::mesh_e3(*e3, resolution, &bad);
  } else if (const auto* ads = std::get_if<crooked::AdSCrookedPlane>(&obj)) {
    mesh = crooked::mesh_ads(*ads, resolution, &bad);
  } else if (const auto* hat = std::get_if<crooked::HatAdSCrookedPlane>(&obj)) {
    mesh = crooked::mesh_ads(crooked::AdSCrookedPlane(hat->vertex(), hat->spine_dir()), resolution, &bad);
  } else {
    crooked::fail(crooked::ErrorCode::BadInput, "export-mesh takes an E^3 or AdS crooked plane");
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) crooked::fail(crooked::ErrorCode::BadInput, "cannot write " + out);
  crooked::write_obj(f, mesh);
  std::cout << mesh.vertices.size() << " vertices, " << mesh.face_count() << " faces, " << mesh.groups.size()
            << " groups\n";
  if (bad > 0) {
    std::cerr << bad << " vertices left their stratum\n";
    return kFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crooked planes and crooked surfaces"};
  app.require_subcommand(1);

  std::string suite, out;
  std::uint64_t seed = 0;
  long samples = 10000;
  std::vector<std::string> tols;
  auto* verify = app.add_subcommand("verify", "Run a sampled verification suite");
  verify->add_option("suite", suite, "core, sl2, ads, crooked, einstein, main-theorem or all")->required();
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--samples", samples, "Samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tols, "Tolerance override name=value (repeatable)");
  verify->add_option("--out", out, "Also write the JSON report here");

  std::string obj_path, pts_path;
  auto* member = app.add_subcommand("membership", "Print the stratum of each point");
  member->add_option("object", obj_path)->required();
  member->add_option("points", pts_path)->required();

  std::string cfg_path;
  auto* adapted = app.add_subcommand("adapted", "Classify a stem configuration");
  adapted->add_option("config", cfg_path)->required();

  int resolution = 32;
  std::string mesh_out;
  auto* mesh = app.add_subcommand("export-mesh", "Write an OBJ mesh of a crooked plane");
  mesh->add_option("object", obj_path)->required();
  mesh->add_option("--resolution", resolution, "Grid subdivisions");
  mesh->add_option("--out", mesh_out, "OBJ output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*verify) return cmd_verify(suite, seed, samples, tols, out);
    if (*member) return cmd_membership(obj_path, pts_path);
    if (*adapted) return cmd_adapted(cfg_path);
    if (*mesh) return cmd_export_mesh(obj_path, resolution, mesh_out);
  } catch (const crooked::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
