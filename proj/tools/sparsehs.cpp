// Command-line front end: instance generators, exact solvers,
// approximation algorithms, and verifiers over the file formats of
// sparsehs::io. Exit codes: 0 success, 1 infeasible or invalid,
// 2 search budget exhausted, 3 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sparsehs/approx.hpp"
#include "sparsehs/cnf.hpp"
#include "sparsehs/errors.hpp"
#include "sparsehs/exact.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/io.hpp"
#include "sparsehs/lp.hpp"
#include "sparsehs/reductions.hpp"
#include "sparsehs/set_system.hpp"
#include "sparsehs/twosat.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace sparsehs;

struct Options {
  std::string reduction, problem, algo, kind;
  std::string formula_path, graph_path, balls_path, instance_path;
  std::string candidate_path, cover_path, matching_path, assignment_path;
  std::string oracle_path, out_path, radius;
  std::vector<int> clique;
  int k = 0;
  int c = 1;
  int center = 0;
  std::uint64_t budget = 100000000;
  std::uint64_t seed = 0;
  std::uint64_t cap = 1000000;
  bool as_set_system = false;
  bool hubs_within_ball = false;
};

// Files read so far, in declared order, for the run report's digest.
struct Session {
  std::vector<std::string> chunks;
  std::string command;

  std::string load(const std::string& path) {
    std::string content = io::read_file(path);
    chunks.push_back(content);
    return content;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

Json report_skeleton(const Session& session) {
  Json report;
  report["command"] = session.command;
  report["input_digest"] = io::fnv1a_hex(session.chunks);
  return report;
}

Json parse_embedded(const std::string& text) { return Json::parse(text); }

std::string ratio_string(int approx_value, int oracle_value) {
  if (oracle_value == 0) return approx_value == 0 ? "1" : "inf";
  return (Rational(approx_value) / Rational(oracle_value)).to_string();
}

int oracle_value_from_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw InputError("oracle file is not a JSON object");
  }
  for (const char* key : {"sparseness", "membership", "density", "value"}) {
    if (j.contains(key) && j.at(key).is_number_integer()) {
      return j.at(key).get<int>();
    }
  }
  throw InputError("oracle file carries no integer objective");
}

int run_generate(Session& session, const Options& opt) {
  GeneratedInstance inst;
  if (opt.reduction == "rhd") {
    WeightedGraph h = io::parse_graph_text(session.load(opt.graph_path));
    inst = clique_to_rhd(h, opt.k, opt.c);
  } else {
    CnfFormula f = parse_dimacs(session.load(opt.formula_path));
    if (opt.reduction == "svc") {
      inst = exactly3sat_to_sparse_vc(f, opt.k);
    } else if (opt.reduction == "fvc") {
      inst = p2p1n3sat_to_fair_vc(f, opt.k);
    } else if (opt.reduction == "ofvc") {
      inst = p2p1n3sat_to_open_fair_vc(f, opt.k);
    } else {
      inst = threesat_to_dense_matching(f);
    }
  }
  if (opt.as_set_system) {
    if (opt.reduction == "dm" || opt.reduction == "rhd") {
      throw InputError("--as-set-system applies only to cover constructions");
    }
    emit(io::instance_json(vertex_cover_instance(inst.graph, inst.balls)),
         opt.out_path);
  } else {
    emit(io::generated_json(inst), opt.out_path);
  }
  return 0;
}

int run_witness(Session& session, const Options& opt) {
  if (opt.reduction == "rhd") {
    WeightedGraph h = io::parse_graph_text(session.load(opt.graph_path));
    VertexSet hubs = rhd_witness_from_clique(h, opt.clique, opt.k, opt.c);
    Json j;
    j["H"] = hubs;
    emit(j.dump(2) + "\n", opt.out_path);
    return 0;
  }
  CnfFormula f = parse_dimacs(session.load(opt.formula_path));
  Assignment a = io::parse_assignment_json(session.load(opt.assignment_path));
  if (opt.reduction == "dm") {
    std::vector<std::pair<int, int>> m = dense_matching_witness(f, a);
    GeneratedInstance inst = threesat_to_dense_matching(f);
    MatchingSolution sol{m, matching_density(inst.graph, inst.balls, m)};
    emit(io::matching_json(sol), opt.out_path);
    return 0;
  }
  GeneratedInstance inst;
  VertexSet h;
  if (opt.reduction == "svc") {
    inst = exactly3sat_to_sparse_vc(f, opt.k);
    h = sparse_vc_witness(f, opt.k, a);
  } else {
    inst = p2p1n3sat_to_fair_vc(f, opt.k);
    h = fair_vc_witness(f, opt.k, a);
  }
  SetSystemInstance ss = vertex_cover_instance(inst.graph, inst.balls);
  HittingSolution sol{h, sparseness_of(ss, h)};
  emit(io::hitting_json(sol), opt.out_path);
  return 0;
}

int run_extract(Session& session, const Options& opt) {
  CnfFormula f = parse_dimacs(session.load(opt.formula_path));
  Assignment a;
  if (opt.reduction == "svc") {
    HittingSolution sol =
        io::parse_hitting_json(session.load(opt.cover_path));
    a = sparse_vc_extract(f, opt.k, sol.members);
  } else {
    MatchingSolution m =
        io::parse_matching_json(session.load(opt.matching_path));
    a = dense_matching_extract(f, m.edges);
  }
  emit(io::assignment_json(a), opt.out_path);
  return 0;
}

int run_solve_exact(Session& session, const Options& opt) {
  SearchBudget budget{opt.budget};
  SearchStats stats;
  Json result;
  bool counted = true;
  if (opt.problem == "sparse-hs") {
    SetSystemInstance inst =
        io::parse_instance_json(session.load(opt.instance_path));
    HittingSolution sol = solve_sparse_hs_exact(inst, budget, &stats);
    result = parse_embedded(io::hitting_json(sol));
  } else if (opt.problem == "rspc") {
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    Rational r = Rational::parse(opt.radius);
    PathFamily family = enumerate_path_family(g, r, opt.cap);
    std::vector<VertexSet> balls;
    if (!opt.balls_path.empty()) {
      balls = io::parse_vertex_sets_json(session.load(opt.balls_path));
    } else {
      for (int v = 0; v < g.n; ++v) balls.push_back(ball(g, v, r + r));
    }
    HittingSolution sol = solve_rspc_exact(g, r, family, balls, budget, &stats);
    result = parse_embedded(io::hitting_json(sol));
  } else if (opt.problem == "mmsc") {
    io::MmscInstance inst =
        io::parse_mmsc_json(session.load(opt.instance_path));
    MmscSolution sol = solve_mmsc_exact(inst.universe, inst.sets);
    result = parse_embedded(io::mmsc_solution_json(sol));
    counted = false;
  } else if (opt.problem == "dense-matching") {
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    std::vector<VertexSet> balls =
        io::parse_vertex_sets_json(session.load(opt.balls_path));
    MatchingSolution sol = solve_dense_matching_exact(g, balls, budget, &stats);
    result = parse_embedded(io::matching_json(sol));
  } else {  // rhd-ball
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    Rational r = Rational::parse(opt.radius);
    PathFamily family = enumerate_path_family(g, r, opt.cap);
    VertexSet hubs =
        solve_rhd_ball_exact(g, r, opt.center, family, opt.hubs_within_ball);
    result["hubs"] = hubs;
    counted = false;
  }
  Json report = report_skeleton(session);
  report["result"] = std::move(result);
  if (counted) report["nodes"] = stats.nodes;
  emit(report.dump(2) + "\n", opt.out_path);
  return 0;
}

int run_solve_k1(Session& session, const Options& opt) {
  WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
  std::vector<VertexSet> balls =
      io::parse_vertex_sets_json(session.load(opt.balls_path));
  std::optional<VertexSet> cover = solve_sparse_vc_k1(g, balls);
  if (!cover) {
    emit("INFEASIBLE\n", opt.out_path);
    return 1;
  }
  SetSystemInstance ss = vertex_cover_instance(g, balls);
  HittingSolution sol{*cover, sparseness_of(ss, *cover)};
  emit(io::hitting_json(sol), opt.out_path);
  return 0;
}

int run_approx(Session& session, const Options& opt) {
  Json result;
  int value = 0;
  if (opt.algo == "svc2") {
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    std::vector<VertexSet> balls =
        io::parse_vertex_sets_json(session.load(opt.balls_path));
    HittingSolution sol = sparse_vc_2approx(g, balls);
    value = sol.sparseness;
    result = parse_embedded(io::hitting_json(sol));
  } else if (opt.algo == "fairvc") {
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    HittingSolution sol = fair_vc_approx(g);
    value = sol.sparseness;
    result = parse_embedded(io::hitting_json(sol));
  } else if (opt.algo == "mmsc") {
    io::MmscInstance inst =
        io::parse_mmsc_json(session.load(opt.instance_path));
    MmscCover cover = mmsc_approx(inst.universe, inst.sets, opt.seed);
    value = cover.membership;
    result = parse_embedded(io::mmsc_cover_json(cover));
  } else {  // rspc
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    Rational r = Rational::parse(opt.radius);
    HittingSolution sol = rspc_logn_approx(g, r, opt.seed, opt.cap);
    value = sol.sparseness;
    result = parse_embedded(io::hitting_json(sol));
  }
  Json report = report_skeleton(session);
  report["result"] = std::move(result);
  if (!opt.oracle_path.empty()) {
    int oracle = oracle_value_from_json(session.load(opt.oracle_path));
    report["input_digest"] = io::fnv1a_hex(session.chunks);
    report["ratio"] = ratio_string(value, oracle);
  }
  emit(report.dump(2) + "\n", opt.out_path);
  return 0;
}

int run_paths(Session& session, const Options& opt) {
  WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
  Rational r = Rational::parse(opt.radius);
  emit(io::path_family_json(enumerate_path_family(g, r, opt.cap)),
       opt.out_path);
  return 0;
}

int run_radii(Session& session, const Options& opt) {
  WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
  Json j;
  Json arr = Json::array();
  for (const Rational& r : relevant_radii(g)) arr.push_back(r.to_string());
  j["radii"] = std::move(arr);
  emit(j.dump(2) + "\n", opt.out_path);
  return 0;
}

int run_hd(Session& session, const Options& opt) {
  WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
  Json j;
  j["value"] = highway_dimension_exact(g, opt.cap);
  emit(j.dump(2) + "\n", opt.out_path);
  return 0;
}

int run_verify(Session& session, const Options& opt) {
  Json j;
  bool valid = false;
  if (opt.kind == "hitting") {
    SetSystemInstance inst =
        io::parse_instance_json(session.load(opt.instance_path));
    HittingSolution sol =
        io::parse_hitting_json(session.load(opt.candidate_path));
    try {
      valid = is_hitting_set(inst, sol.members);
      if (valid) j["sparseness"] = sparseness_of(inst, sol.members);
    } catch (const InputError& e) {
      valid = false;
      j["reason"] = e.what();
    }
  } else if (opt.kind == "matching") {
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    std::vector<VertexSet> balls =
        io::parse_vertex_sets_json(session.load(opt.balls_path));
    MatchingSolution m =
        io::parse_matching_json(session.load(opt.candidate_path));
    try {
      j["density"] = matching_density(g, balls, m.edges);
      valid = true;
    } catch (const InputError& e) {
      valid = false;
      j["reason"] = e.what();
    }
  } else if (opt.kind == "assignment") {
    CnfFormula f = parse_dimacs(session.load(opt.formula_path));
    Assignment a =
        io::parse_assignment_json(session.load(opt.candidate_path));
    try {
      valid = evaluate_assignment(f, a);
    } catch (const InputError& e) {
      valid = false;
      j["reason"] = e.what();
    }
  } else {  // rhd-witness
    WeightedGraph g = io::parse_graph_text(session.load(opt.graph_path));
    Rational r = Rational::parse(opt.radius);
    HittingSolution sol =
        io::parse_hitting_json(session.load(opt.candidate_path));
    PathFamily family = enumerate_path_family(g, r, opt.cap);
    if (family.truncated) {
      throw InputError("path family truncated; raise --cap");
    }
    std::set<int> hubs(sol.members.begin(), sol.members.end());
    valid = true;
    for (const auto& p : family.paths) {
      bool hit = false;
      for (int v : p.vertex_set) {
        if (hubs.count(v)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        valid = false;
        break;
      }
    }
    j["paths"] = family.paths.size();
  }
  j["valid"] = valid;
  emit(j.dump(2) + "\n", opt.out_path);
  return valid ? 0 : 1;
}

std::string join_arguments(int argc, char** argv) {
  std::string joined;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) joined += ' ';
    joined += argv[i];
  }
  return joined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse hitting set toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand(
      "generate", "Build a hardness-construction instance from a formula "
                  "or source graph");
  gen->add_option("--reduction", opt.reduction)
      ->required()
      ->check(CLI::IsMember({"svc", "fvc", "ofvc", "dm", "rhd"}));
  gen->add_option("--formula", opt.formula_path, "DIMACS CNF file");
  gen->add_option("--graph", opt.graph_path, "graph text file (rhd)");
  gen->add_option("--k", opt.k);
  gen->add_option("--c", opt.c, "gadget copy count (rhd)");
  gen->add_flag("--as-set-system", opt.as_set_system,
                "emit the hitting-set view instead of the graph form");
  gen->add_option("--out", opt.out_path);

  auto* wit = app.add_subcommand(
      "witness", "Build the canonical solution for a satisfying "
                 "assignment or clique");
  wit->add_option("--reduction", opt.reduction)
      ->required()
      ->check(CLI::IsMember({"svc", "fvc", "dm", "rhd"}));
  wit->add_option("--formula", opt.formula_path);
  wit->add_option("--graph", opt.graph_path);
  wit->add_option("--assignment", opt.assignment_path,
                  "assignment JSON file");
  wit->add_option("--clique", opt.clique, "clique vertex ids (rhd)")
      ->delimiter(',');
  wit->add_option("--k", opt.k);
  wit->add_option("--c", opt.c);
  wit->add_option("--out", opt.out_path);

  auto* ext = app.add_subcommand(
      "extract", "Read an assignment back off a solution");
  ext->add_option("--reduction", opt.reduction)
      ->required()
      ->check(CLI::IsMember({"svc", "dm"}));
  ext->add_option("--formula", opt.formula_path)->required();
  ext->add_option("--cover", opt.cover_path, "hitting solution JSON (svc)");
  ext->add_option("--matching", opt.matching_path, "matching JSON (dm)");
  ext->add_option("--k", opt.k);
  ext->add_option("--out", opt.out_path);

  auto* sol = app.add_subcommand("solve-exact", "Run an exact solver");
  sol->add_option("--problem", opt.problem)
      ->required()
      ->check(CLI::IsMember(
          {"sparse-hs", "rspc", "mmsc", "dense-matching", "rhd-ball"}));
  sol->add_option("--instance", opt.instance_path,
                  "instance JSON (sparse-hs, mmsc)");
  sol->add_option("--graph", opt.graph_path);
  sol->add_option("--balls", opt.balls_path, "vertex-set collection JSON");
  sol->add_option("--radius", opt.radius, "rational radius");
  sol->add_option("--center", opt.center, "ball center (rhd-ball)");
  sol->add_flag("--hubs-within-ball", opt.hubs_within_ball);
  sol->add_option("--budget", opt.budget, "search node budget");
  sol->add_option("--cap", opt.cap, "path enumeration cap");
  sol->add_option("--out", opt.out_path);

  auto* k1 = app.add_subcommand(
      "solve-k1", "Budget-one cover through the implication route");
  k1->add_option("--graph", opt.graph_path)->required();
  k1->add_option("--balls", opt.balls_path)->required();
  k1->add_option("--out", opt.out_path);

  auto* apx = app.add_subcommand("approx", "Run an approximation algorithm");
  apx->add_option("--algo", opt.algo)
      ->required()
      ->check(CLI::IsMember({"svc2", "fairvc", "mmsc", "rspc"}));
  apx->add_option("--graph", opt.graph_path);
  apx->add_option("--balls", opt.balls_path);
  apx->add_option("--instance", opt.instance_path, "covering instance JSON");
  apx->add_option("--radius", opt.radius);
  apx->add_option("--seed", opt.seed);
  apx->add_option("--cap", opt.cap);
  apx->add_option("--oracle", opt.oracle_path,
                  "exact solution JSON to report a ratio against");
  apx->add_option("--out", opt.out_path);

  auto* pth = app.add_subcommand("paths", "Enumerate the path family");
  pth->add_option("--graph", opt.graph_path)->required();
  pth->add_option("--radius", opt.radius)->required();
  pth->add_option("--cap", opt.cap);
  pth->add_option("--out", opt.out_path);

  auto* rad = app.add_subcommand("radii", "List the radii where the path "
                                          "family can change");
  rad->add_option("--graph", opt.graph_path)->required();
  rad->add_option("--out", opt.out_path);

  auto* hd = app.add_subcommand("hd", "Largest per-ball hub requirement "
                                      "across those radii");
  hd->add_option("--graph", opt.graph_path)->required();
  hd->add_option("--cap", opt.cap);
  hd->add_option("--out", opt.out_path);

  auto* ver = app.add_subcommand("verify", "Check a candidate solution");
  ver->add_option("--kind", opt.kind)
      ->required()
      ->check(CLI::IsMember({"hitting", "matching", "assignment",
                             "rhd-witness"}));
  ver->add_option("--instance", opt.instance_path);
  ver->add_option("--graph", opt.graph_path);
  ver->add_option("--balls", opt.balls_path);
  ver->add_option("--formula", opt.formula_path);
  ver->add_option("--candidate", opt.candidate_path)->required();
  ver->add_option("--radius", opt.radius);
  ver->add_option("--cap", opt.cap);
  ver->add_option("--out", opt.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  Session session;
  session.command = join_arguments(argc, argv);
  try {
    if (gen->parsed()) return run_generate(session, opt);
    if (wit->parsed()) return run_witness(session, opt);
    if (ext->parsed()) return run_extract(session, opt);
    if (sol->parsed()) return run_solve_exact(session, opt);
    if (k1->parsed()) return run_solve_k1(session, opt);
    if (apx->parsed()) return run_approx(session, opt);
    if (pth->parsed()) return run_paths(session, opt);
    if (rad->parsed()) return run_radii(session, opt);
    if (hd->parsed()) return run_hd(session, opt);
    if (ver->parsed()) return run_verify(session, opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
