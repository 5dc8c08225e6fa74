// fivec: validate, construct, draw, generate and report on Schnyder-type
// 5c-structures over triangulations of the pentagon.
//
// Exit codes: 0 success, 1 invalid input (not a 5c-triangulation), 2 I/O or
// parse failure, 3 internal check failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fivec/construct.hpp"
#include "fivec/drawing.hpp"
#include "fivec/generator.hpp"
#include "fivec/json_io.hpp"

namespace fs = std::filesystem;
using namespace fivec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitCheckFailed = 3;

std::string resolve_input(const std::string& path) {
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("FIVEC_FIXTURES")) {
    fs::path alt = fs::path(dir) / path;
    if (fs::exists(alt)) return alt.string();
  }
  return path;
}

std::shared_ptr<const FiveTriangulation> load(const std::string& path) {
  RotationSystem rs = rotation_from_file(resolve_input(path));
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  return std::make_shared<const FiveTriangulation>(check_five_triangulation(m));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << text;
}

std::vector<long long> load_weights(const std::string& path, int face_count) {
  std::ifstream in(resolve_input(path));
  if (!in) fail(Errc::parse_error, "cannot open weight file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  std::vector<long long> w;
  if (j.is_array())
    w = j.get<std::vector<long long>>();
  else
    w = j.at("weights").get<std::vector<long long>>();
  if (static_cast<int>(w.size()) < face_count)
    fail(Errc::parse_error, "weight file has fewer entries than faces");
  return w;
}

struct DrawResult {
  Drawing drawing;
  WoodColoring wood;
  std::shared_ptr<const WoodTrees> trees;
};

DrawResult run_pipeline(std::shared_ptr<const FiveTriangulation> t, WeightMode mode,
                        bool minimize_flag, const std::vector<long long>* fw) {
  FiveCOrientation o = construct_5c(t);
  if (minimize_flag) o = minimize(o);
  WoodColoring w = theta(phi_inv(o));
  auto trees = std::make_shared<const WoodTrees>(wood_trees(w));
  RegionTable rt = region_sizes_linear(trees);
  WeightTable wt = weights(rt, mode, fw);
  return {place(wt, t), std::move(w), trees};
}

WeightMode parse_mode(const std::string& mode) {
  if (mode == "faces") return WeightMode::faces;
  if (mode == "vertices") return WeightMode::vertices;
  if (mode == "weighted") return WeightMode::weighted;
  fail(Errc::parse_error, "unknown mode " + mode);
}

int cmd_validate(const std::string& input) {
  auto t = load(input);
  FiveCVerdict v = is_5c(*t);
  if (v.ok) {
    std::cout << "valid 5c-triangulation: n=" << t->n() << " inner_faces=" << t->inner_faces()
              << "\n";
    return kExitOk;
  }
  std::cout << "not 5c: " << v.reason << "; witness cycle:";
  for (VertexId w : v.witness_cycle) std::cout << " " << w;
  if (v.enclosed != kNoVertex) std::cout << "; encloses vertex " << v.enclosed;
  std::cout << "\n";
  return kExitInvalid;
}

int cmd_construct(const std::string& input, bool minimize_flag, const std::string& emit,
                  const std::string& out) {
  auto t = load(input);
  FiveCOrientation o = construct_5c(t);
  if (minimize_flag) o = minimize(o);
  if (emit == "orientation") {
    write_text(out, orientation_to_json(o));
  } else if (emit == "labeling") {
    write_text(out, labeling_to_json(phi_inv(o)));
  } else if (emit == "wood") {
    write_text(out, wood_to_json(theta(phi_inv(o))));
  } else {
    fail(Errc::parse_error, "unknown --emit " + emit);
  }
  return kExitOk;
}

int cmd_draw(const std::string& input, const std::string& mode_str, bool minimize_flag,
             const std::string& svg_path, bool check, double scale,
             const std::string& weight_file, const std::string& out) {
  auto t = load(input);
  WeightMode mode = parse_mode(mode_str);
  std::vector<long long> fw;
  if (mode == WeightMode::weighted) {
    if (weight_file.empty()) fail(Errc::parse_error, "weighted mode requires --weights");
    fw = load_weights(weight_file, t->map.face_count());
  }
  DrawResult r = run_pipeline(t, mode, minimize_flag,
                              mode == WeightMode::weighted ? &fw : nullptr);
  write_text(out, drawing_to_json(r.drawing));
  if (!svg_path.empty()) write_text(svg_path, drawing_to_svg(r.drawing, &r.wood, scale));

  if (check) {
    bool ok = true;
    PlanarityVerdict pv = certify_planar(r.drawing, *t);
    std::cerr << "planar:    " << (pv.ok ? "certified" : "FAILED at face " +
                                                             std::to_string(pv.bad_face))
              << "\n";
    ok = ok && pv.ok;
    // Vertex counting admits exact boundary ties in the two checks.
    const bool weak = mode == WeightMode::vertices;
    const char* qual = weak ? " (boundary ties allowed)" : "";
    Report hp = check_halfplane(r.drawing, *r.trees, weak);
    std::cerr << "halfplane: " << (hp.ok() ? std::string("pass") + qual
                                           : "FAIL " + hp.items.front().detail)
              << "\n";
    ok = ok && hp.ok();
    Report sc = check_sectors(r.drawing, r.wood, weak);
    std::cerr << "sectors:   " << (sc.ok() ? std::string("pass") + qual
                                           : "FAIL " + sc.items.front().detail)
              << "\n";
    ok = ok && sc.ok();
    ResolutionMetrics rm = resolution(r.drawing);
    std::cerr << "resolution: min=" << rm.min_distance << " normalized=" << rm.normalized
              << " (d5=" << rm.d5 << ", d5'=" << rm.d5_prime << ")\n";
    auto rho = find_rotation_automorphism(*t);
    if (rho)
      std::cerr << "symmetry:  order-5 automorphism "
                << (check_rotational_symmetry(r.drawing, rho) ? "respected" : "BROKEN")
                << "\n";
    else
      std::cerr << "symmetry:  no order-5 automorphism\n";
    if (!ok) {
      std::cerr << "check verdict: FAILED\n";
      return kExitCheckFailed;
    }
    std::cerr << "check verdict: ok\n";
  }
  return kExitOk;
}

int cmd_gen(int n, std::uint64_t seed, int count, int flips, const std::string& dir) {
  fs::create_directories(dir.empty() ? "." : dir);
  for (int i = 0; i < count; ++i) {
    FiveTriangulation t = generate_random_5c(n, seed + static_cast<std::uint64_t>(i), flips);
    fs::path p = fs::path(dir.empty() ? "." : dir) /
                 ("gen_n" + std::to_string(n) + "_s" + std::to_string(seed) + "_" +
                  std::to_string(i) + ".json");
    rotation_to_file(rotation_of(t.map), p.string());
    std::cout << p.string() << "\n";
  }
  return kExitOk;
}

int cmd_stats(const std::vector<std::string>& inputs, const std::string& mode_str,
              const std::string& csv_path) {
  WeightMode mode = parse_mode(mode_str);
  std::ostringstream csv;
  csv << "file,n,inner_faces,status,min_distance,normalized,bound,meets_bound,wall_ms\n";
  std::cout << "file                            n   faces  min_dist   normalized  time\n";
  bool all_ok = true;
  for (const auto& in : inputs) {
    std::string status = "ok";
    double mind = 0, norm = 0, bound = 0, ms = 0;
    int n = 0, faces = 0;
    bool meets = false;
    try {
      auto t = load(in);
      n = t->n();
      faces = t->inner_faces();
      auto t0 = std::chrono::steady_clock::now();
      DrawResult r = run_pipeline(t, mode, false, nullptr);
      ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
      ResolutionMetrics rm = resolution(r.drawing);
      mind = rm.min_distance;
      norm = rm.normalized;
      bound = mode == WeightMode::faces ? rm.d5 : rm.d5_prime;
      meets = rm.meets_bound;
    } catch (const Error& e) {
      status = e.code() == Errc::not_5c ? "not5c" : errc_name(e.code());
      all_ok = false;
    }
    csv << in << "," << n << "," << faces << "," << status << "," << mind << "," << norm
        << "," << bound << "," << (meets ? 1 : 0) << "," << ms << "\n";
    std::printf("%-30s %5d %6d %9.6f %11.4f %7.1fms %s\n", in.c_str(), n, faces, mind, norm,
                ms, status == "ok" ? "" : status.c_str());
  }
  if (!csv_path.empty()) write_text(csv_path, csv.str());
  return all_ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schnyder-type 5c-structures and barycentric drawings"};
  app.require_subcommand(1);

  std::string input, out, emit = "orientation", mode = "faces", svg, weight_file, dir, csv;
  bool do_min = false, do_check = false;
  double scale = 500.0;
  int n = 0, count = 1, flips = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> inputs;

  auto* v = app.add_subcommand("validate", "check a rotation-system JSON for the 5c property");
  v->add_option("input", input)->required();

  auto* c = app.add_subcommand("construct", "compute a 5c-structure");
  c->add_option("input", input)->required();
  c->add_flag("--minimize", do_min, "canonicalize to the minimal 5c-orientation");
  c->add_option("--emit", emit, "orientation|labeling|wood");
  c->add_option("-o,--out", out, "output file (default stdout)");

  auto* d = app.add_subcommand("draw", "compute the 5c-barycentric drawing");
  d->add_option("input", input)->required();
  d->add_option("--mode", mode, "faces|vertices|weighted");
  d->add_option("--weights", weight_file, "face-weight JSON for weighted mode");
  d->add_flag("--minimize", do_min);
  d->add_option("--svg", svg, "also write an SVG file");
  d->add_flag("--check", do_check, "run planarity/halfplane/sector/resolution checks");
  d->add_option("--scale", scale, "SVG scale in pixels (default 500)");
  d->add_option("-o,--out", out, "coordinate JSON output (default stdout)");

  auto* g = app.add_subcommand("gen", "generate 5c instances");
  g->add_option("--n", n)->required();
  g->add_option("--seed", seed);
  g->add_option("--count", count);
  g->add_option("--flips", flips, "attempted diagonal flips (default 3n)");
  g->add_option("--dir", dir, "output directory (default .)");

  auto* s = app.add_subcommand("stats", "per-file statistics table");
  s->add_option("inputs", inputs)->required();
  s->add_option("--mode", mode, "faces|vertices");
  s->add_option("--csv", csv, "also write machine-readable CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return cmd_validate(input);
    if (c->parsed()) return cmd_construct(input, do_min, emit, out);
    if (d->parsed()) return cmd_draw(input, mode, do_min, svg, do_check, scale, weight_file, out);
    if (g->parsed()) {
      if (!g->count("--flips")) flips = 3 * n;
      return cmd_gen(n, seed, count, flips, dir);
    }
    if (s->parsed()) return cmd_stats(inputs, mode, csv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::parse_error:
        return kExitIo;
      case Errc::check_failed:
      case Errc::internal:
        return kExitCheckFailed;
      default:
        return kExitInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
