// Command line driver: generate instances, check them, colour vertices, and
// derive edge/face colourings.  One JSON report line per run on stdout; the
// human summary and timings go to stderr.
//
// Exit codes: 0 success, 1 negative mathematical answer (e.g. no colouring
// exists), 2 input or usage error, 3 internal invariant violation.
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <sct/edge_face.hpp>
#include <sct/errors.hpp>
#include <sct/generators.hpp>
#include <sct/io.hpp>
#include <sct/orientation.hpp>
#include <sct/triangulation.hpp>
#include <sct/vertex_colouring.hpp>

namespace {

using nlohmann::json;

struct Options {
  std::string family;
  std::string input;
  std::string output;
  std::string colours;
  std::string mode;
  int d = -1;
  int n = -1;
  std::uint64_t seed = 0;
  int max_bruteforce_chambers = 20;
};

void emit(const json& report) { std::cout << report.dump() << "\n"; }

void require_param(bool ok, const std::string& message) {
  if (!ok) throw sct::Error(sct::ErrorCode::BadParams, message);
}

sct::Triangulation load_input(const Options& opt) {
  require_param(!opt.input.empty(), "this command needs --input");
  return sct::read_triangulation_file(opt.input);
}

// Writes the artifact to --output when given, otherwise inlines it.
void attach_artifact(json& report, const Options& opt,
                     const std::string& artifact) {
  if (!opt.output.empty()) {
    sct::write_text_file(opt.output, artifact);
    report["output"] = opt.output;
  } else {
    report["result"] = json::parse(artifact);
  }
}

int run_generate(const Options& opt) {
  sct::Triangulation t;
  if (opt.family == "simplex-boundary") {
    require_param(opt.d >= 0, "simplex-boundary needs --d");
    t = sct::simplex_boundary(opt.d);
  } else if (opt.family == "cross-polytope") {
    require_param(opt.d >= 0, "cross-polytope needs --d");
    t = sct::cross_polytope_boundary(opt.d);
  } else if (opt.family == "cyclic") {
    require_param(opt.n >= 0, "cyclic needs --n");
    t = sct::cyclic_polytope_boundary(opt.n);
  } else if (opt.family == "double-cone") {
    t = sct::double_cone(load_input(opt));
  } else if (opt.family == "maximal-subdivision") {
    t = sct::maximal_subdivision(load_input(opt));
  } else if (opt.family == "random-subdivision") {
    t = sct::random_subdivision(load_input(opt), opt.seed);
  } else {
    throw sct::Error(sct::ErrorCode::UnknownFamily,
                     "unknown family: " + opt.family);
  }

  json report;
  report["cmd"] = "generate";
  report["family"] = opt.family;
  report["d"] = t.dim;
  report["vertices"] = t.num_vertices;
  report["chambers"] = t.chamber_count();
  attach_artifact(report, opt, sct::triangulation_json(t));
  emit(report);
  return 0;
}

int run_check(const Options& opt) {
  sct::Triangulation t = load_input(opt);

  json report;
  report["cmd"] = "check";
  report["valid"] = true;
  report["d"] = t.dim;
  report["vertices"] = t.num_vertices;
  report["chambers"] = t.chamber_count();

  bool orientable = true;
  try {
    sct::coherent_orientation(t);
  } catch (const sct::Error& e) {
    if (e.code() != sct::ErrorCode::NonOrientable) throw;
    orientable = false;
  }
  report["orientable"] = orientable;
  report["heawood"] = sct::heawood_condition(t);
  report["div3"] = sct::div3_condition(t);

  std::map<int, int> histogram;
  for (const auto& [cell, count] : sct::incidence_counts(t))
    ++histogram[count];
  json hist = json::object();
  for (const auto& [count, cells_with_it] : histogram)
    hist[std::to_string(count)] = cells_with_it;
  report["incidence_histogram"] = hist;

  emit(report);
  return 0;
}

int run_colour(const Options& opt) {
  sct::Triangulation t = load_input(opt);
  require_param(!opt.colours.empty(),
                "colour needs --colours (d+1, d+2, or an integer)");

  std::optional<sct::VertexColouring> psi;
  if (opt.colours == "d+1") {
    psi = sct::colour_d_plus_1(t);
  } else if (opt.colours == "d+2") {
    psi = sct::colour_via_subdivision(t, opt.max_bruteforce_chambers);
  } else {
    int k = 0;
    auto [ptr, ec] = std::from_chars(
        opt.colours.data(), opt.colours.data() + opt.colours.size(), k);
    require_param(ec == std::errc() &&
                      ptr == opt.colours.data() + opt.colours.size() && k >= 1,
                  "--colours must be d+1, d+2, or a positive integer");
    psi = sct::exact_graph_colouring(sct::skeleton(t), k);
  }

  json report;
  report["cmd"] = "colour";
  report["colours"] = opt.colours;
  report["answer"] = psi.has_value();
  if (!psi) {
    emit(report);
    return 1;
  }
  report["k"] = psi->k;
  bool proper = sct::verify_proper(sct::skeleton(t), *psi);
  report["proper"] = proper;
  if (!proper)
    throw sct::Error(sct::ErrorCode::InternalInvariant,
                     "produced colouring failed the properness re-check");
  attach_artifact(report, opt, sct::vertex_colouring_json(*psi));
  emit(report);
  return 0;
}

// Deterministic vertex colouring with an even colour count: smallest
// achievable k, padded to even.
std::optional<sct::VertexColouring> even_vertex_colouring(
    const sct::Triangulation& t) {
  sct::Graph g = sct::skeleton(t);
  for (int k = t.dim + 1; k <= t.num_vertices + 1; ++k) {
    if (auto psi = sct::exact_graph_colouring(g, k)) {
      if (k % 2 != 0) {
        psi->k = k + 1;  // pad by one unused colour
      }
      return psi;
    }
  }
  return std::nullopt;
}

int run_edge_face(const Options& opt) {
  sct::Triangulation t = load_input(opt);
  require_param(!opt.mode.empty(),
                "edge-face needs --mode (path2, mono-free-2, mono-free-3, "
                "factorized, or face5)");

  json report;
  report["cmd"] = "edge-face";
  report["mode"] = opt.mode;

  std::optional<std::string> artifact;
  if (opt.mode == "path2") {
    if (auto pc = sct::derive_path_colouring(t)) {
      report["k"] = pc->k;
      // odd-subdivision summary: which chambers are odd under a coherent
      // orientation, and the mod-3 certificate after subdividing them
      sct::OrientationAssignment orient = sct::coherent_orientation(t);
      auto out = sct::subdivide_odd(t, *pc, orient);
      report["odd_chambers"] = out.subdivided;
      report["chambers_after_subdivision"] = out.triangulation.chamber_count();
      report["div3_after_subdivision"] =
          sct::div3_condition(out.triangulation);
      artifact = sct::edge_colouring_json(*pc);
    }
  } else if (opt.mode == "mono-free-2" || opt.mode == "mono-free-3") {
    int k = opt.mode == "mono-free-2" ? 2 : 3;
    int palette = k == 2 ? sct::kMonoFreeMaxOrder2 : sct::kMonoFreeMaxOrder3;
    if (auto psi = sct::exact_graph_colouring(sct::skeleton(t), palette)) {
      auto ec = sct::edge_colour_no_mono_faces(t, k, *psi);
      report["k"] = ec.k;
      artifact = sct::edge_colouring_json(ec);
    }
  } else if (opt.mode == "factorized") {
    if (auto psi = even_vertex_colouring(t)) {
      auto ec = sct::proper_edge_colouring(t, *psi);
      report["k"] = ec.k;
      report["vertex_colours"] = psi->k;
      artifact = sct::edge_colouring_json(ec);
    }
  } else if (opt.mode == "face5") {
    if (auto psi = sct::exact_graph_colouring(sct::skeleton(t), 5)) {
      auto fc = sct::face_colouring_5(t, *psi);
      report["faces"] = fc.colour.size();
      artifact = sct::face_colouring_json(fc);
    }
  } else {
    throw sct::Error(sct::ErrorCode::BadParams,
                     "unknown mode: " + opt.mode);
  }

  report["answer"] = artifact.has_value();
  if (!artifact) {
    emit(report);
    return 1;
  }
  attach_artifact(report, opt, *artifact);
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sphere triangulation colouring toolkit"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* generate = app.add_subcommand(
      "generate",
      "emit an instance: simplex-boundary --d, cross-polytope --d, "
      "cyclic --n, double-cone -i, maximal-subdivision -i, "
      "random-subdivision -i [--seed]");
  generate->add_option("family", opt.family, "instance family")->required();
  generate->add_option("--d", opt.d, "sphere dimension");
  generate->add_option("--n", opt.n, "vertex count");
  generate->add_option("-i,--input", opt.input, "input triangulation file");
  generate->add_option("-o,--output", opt.output, "output file");
  generate->add_option("--seed", opt.seed, "random seed");

  CLI::App* check = app.add_subcommand(
      "check", "validate a triangulation and report its invariants");
  check->add_option("-i,--input", opt.input, "input triangulation file")
      ->required();

  CLI::App* colour = app.add_subcommand(
      "colour", "colour the vertices with d+1, d+2, or exactly k colours");
  colour->add_option("-i,--input", opt.input, "input triangulation file")
      ->required();
  colour->add_option("--colours", opt.colours, "d+1, d+2, or an integer")
      ->required();
  colour->add_option("-o,--output", opt.output, "output colouring file");
  colour->add_option("--max-bruteforce-chambers", opt.max_bruteforce_chambers,
                     "subset-search bound for the d+2 route");

  CLI::App* edge_face = app.add_subcommand(
      "edge-face",
      "edge/face colourings: path2, mono-free-2, mono-free-3, factorized, "
      "face5");
  edge_face->add_option("-i,--input", opt.input, "input triangulation file")
      ->required();
  edge_face->add_option("--mode", opt.mode, "construction mode")->required();
  edge_face->add_option("-o,--output", opt.output, "output colouring file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string cmd = "?";
  if (generate->parsed()) cmd = "generate";
  if (check->parsed()) cmd = "check";
  if (colour->parsed()) cmd = "colour";
  if (edge_face->parsed()) cmd = "edge-face";

  auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (generate->parsed()) rc = run_generate(opt);
    if (check->parsed()) rc = run_check(opt);
    if (colour->parsed()) rc = run_colour(opt);
    if (edge_face->parsed()) rc = run_edge_face(opt);
  } catch (const sct::Error& e) {
    json report;
    report["cmd"] = cmd;
    report["error"] = sct::error_code_name(e.code());
    report["message"] = e.what();
    emit(report);
    std::cerr << "sct " << cmd << ": " << e.what() << "\n";
    return e.is_internal() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "sct " << cmd << ": unexpected failure: " << e.what() << "\n";
    return 3;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cerr << "sct " << cmd << ": " << (rc == 0 ? "ok" : "no") << " ("
            << elapsed << " ms)\n";
  return rc;
}
