#include "sparsehs/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sparsehs/errors.hpp"

namespace sparsehs::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse_root(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw InputError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) {
    throw InputError(std::string(what) + " must be a boolean");
  }
  return j.get<bool>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw InputError(std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(as_string(j, what));
}

std::vector<int> as_int_list(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw InputError(std::string(what) + " must be an array");
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

std::vector<VertexSet> as_set_list(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw InputError(std::string(what) + " must be an array of arrays");
  }
  std::vector<VertexSet> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int_list(e, what));
  return out;
}

Json int_lists(const std::vector<VertexSet>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("cannot read file: " + path);
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  out.flush();
  if (!out) throw InputError("cannot write file: " + path);
}

std::string fnv1a_hex(const std::vector<std::string>& chunks) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& chunk : chunks) {
    for (unsigned char byte : chunk) {
      h ^= byte;
      h *= 1099511628211ULL;
    }
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

WeightedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) {
    throw InputError("graph text must start with 'n m'");
  }
  if (n < 0 || m < 0) throw InputError("negative count in graph header");
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long u = 0, v = 0;
    std::string len;
    if (!(in >> u >> v >> len)) {
      throw InputError("graph text ended before all edges were read");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v),
                     Rational::parse(len)});
  }
  std::string extra;
  if (in >> extra) throw InputError("unexpected trailing text in graph");
  return make_graph(static_cast<int>(n), std::move(edges));
}

std::string graph_text(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) {
    out << e.u << ' ' << e.v << ' ' << e.length.to_string() << '\n';
  }
  return std::move(out).str();
}

SetSystemInstance parse_instance_json(const std::string& text) {
  Json j = parse_root(text);
  return make_set_system(as_int(field(j, "n"), "n"),
                         as_set_list(field(j, "F"), "F"),
                         as_set_list(field(j, "B"), "B"));
}

std::string instance_json(const SetSystemInstance& instance) {
  Json j;
  j["n"] = instance.n;
  j["F"] = int_lists(instance.family_f);
  j["B"] = int_lists(instance.family_b);
  return dump(j);
}

HittingSolution parse_hitting_json(const std::string& text) {
  Json j = parse_root(text);
  HittingSolution sol;
  sol.members = as_int_list(field(j, "H"), "H");
  if (j.is_object() && j.contains("sparseness")) {
    sol.sparseness = as_int(j.at("sparseness"), "sparseness");
  }
  return sol;
}

std::string hitting_json(const HittingSolution& solution) {
  Json j;
  j["H"] = solution.members;
  j["sparseness"] = solution.sparseness;
  return dump(j);
}

std::vector<VertexSet> parse_vertex_sets_json(const std::string& text) {
  return as_set_list(parse_root(text), "vertex sets");
}

std::string vertex_sets_json(const std::vector<VertexSet>& sets) {
  return dump(int_lists(sets));
}

Assignment parse_assignment_json(const std::string& text) {
  Json j = parse_root(text);
  const Json& vals = field(j, "values");
  if (!vals.is_array()) throw InputError("values must be an array");
  Assignment a;
  a.values.reserve(vals.size());
  for (const auto& e : vals) a.values.push_back(as_bool(e, "values entry"));
  return a;
}

std::string assignment_json(const Assignment& a) {
  Json j;
  j["values"] = a.values;
  return dump(j);
}

MatchingSolution parse_matching_json(const std::string& text) {
  Json j = parse_root(text);
  const Json& edges = field(j, "M");
  if (!edges.is_array()) throw InputError("M must be an array of pairs");
  MatchingSolution m;
  for (const auto& e : edges) {
    std::vector<int> pair = as_int_list(e, "matching edge");
    if (pair.size() != 2) {
      throw InputError("each matching edge needs exactly two endpoints");
    }
    m.edges.emplace_back(pair[0], pair[1]);
  }
  if (j.contains("density")) {
    m.density = as_int(j.at("density"), "density");
  }
  return m;
}

std::string matching_json(const MatchingSolution& m) {
  Json j;
  Json edges = Json::array();
  for (const auto& [u, v] : m.edges) edges.push_back(Json::array({u, v}));
  j["M"] = std::move(edges);
  j["density"] = m.density;
  return dump(j);
}

PathFamily parse_path_family_json(const std::string& text) {
  Json j = parse_root(text);
  PathFamily family;
  family.radius = as_rational(field(j, "radius"), "radius");
  family.truncated = as_bool(field(j, "truncated"), "truncated");
  const Json& paths = field(j, "paths");
  if (!paths.is_array()) throw InputError("paths must be an array");
  for (const auto& p : paths) {
    PathRecord rec;
    rec.endpoints.first = as_int(field(p, "s"), "s");
    rec.endpoints.second = as_int(field(p, "t"), "t");
    rec.length = as_rational(field(p, "length"), "length");
    rec.vertex_set = as_int_list(field(p, "vertices"), "vertices");
    family.paths.push_back(std::move(rec));
  }
  return family;
}

std::string path_family_json(const PathFamily& family) {
  Json j;
  j["radius"] = family.radius.to_string();
  j["truncated"] = family.truncated;
  Json paths = Json::array();
  for (const auto& p : family.paths) {
    Json rec;
    rec["s"] = p.endpoints.first;
    rec["t"] = p.endpoints.second;
    rec["length"] = p.length.to_string();
    rec["vertices"] = p.vertex_set;
    paths.push_back(std::move(rec));
  }
  j["paths"] = std::move(paths);
  return dump(j);
}

MmscInstance parse_mmsc_json(const std::string& text) {
  Json j = parse_root(text);
  MmscInstance inst;
  inst.universe = as_int_list(field(j, "universe"), "universe");
  inst.sets = as_set_list(field(j, "sets"), "sets");
  return inst;
}

std::string mmsc_json(const MmscInstance& instance) {
  Json j;
  j["universe"] = instance.universe;
  j["sets"] = int_lists(instance.sets);
  return dump(j);
}

std::string mmsc_solution_json(const MmscSolution& solution) {
  Json j;
  j["chosen"] = solution.chosen;
  j["membership"] = solution.membership;
  return dump(j);
}

std::string mmsc_cover_json(const MmscCover& cover) {
  Json j;
  j["chosen"] = cover.chosen;
  j["membership"] = cover.membership;
  j["lp_value"] = cover.lp_value.to_string();
  j["seed"] = cover.seed;
  return dump(j);
}

std::string rhd_json(const RhdResult& result) {
  Json j;
  j["value"] = result.value;
  Json per = Json::object();
  for (const auto& [center, hubs] : result.per_ball) {
    per[std::to_string(center)] = hubs;
  }
  j["per_ball"] = std::move(per);
  return dump(j);
}

GeneratedInstance parse_generated_json(const std::string& text) {
  Json j = parse_root(text);
  int n = as_int(field(j, "n"), "n");
  const Json& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw InputError("edges must be an array");
  std::vector<WeightedGraph::Edge> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 3) {
      throw InputError("each edge must be [u, v, length]");
    }
    edges.push_back({as_int(e.at(0), "edge endpoint"),
                     as_int(e.at(1), "edge endpoint"),
                     as_rational(e.at(2), "edge length")});
  }
  GeneratedInstance out;
  out.graph = make_graph(n, std::move(edges));
  out.balls = as_set_list(field(j, "balls"), "balls");
  const Json& labels = field(j, "labels");
  if (!labels.is_object()) throw InputError("labels must be an object");
  out.labels.assign(static_cast<std::size_t>(n), "");
  if (static_cast<int>(labels.size()) != n) {
    throw InputError("labels must name every vertex exactly once");
  }
  for (const auto& [key, value] : labels.items()) {
    int id = 0;
    try {
      id = std::stoi(key);
    } catch (...) {
      throw InputError("label key is not a vertex id: " + key);
    }
    if (id < 0 || id >= n) throw InputError("label key out of range: " + key);
    out.labels[static_cast<std::size_t>(id)] = as_string(value, "label");
  }
  const Json& params = field(j, "params");
  if (!params.is_object()) throw InputError("params must be an object");
  if (params.contains("k")) out.params.k = as_int(params.at("k"), "k");
  if (params.contains("c")) out.params.c = as_int(params.at("c"), "c");
  if (params.contains("r")) out.params.r = as_rational(params.at("r"), "r");
  if (params.contains("k_prime")) {
    const Json& kp = params.at("k_prime");
    if (!kp.is_number_integer()) throw InputError("k_prime must be an integer");
    out.params.k_prime = kp.get<long long>();
  }
  return out;
}

std::string generated_json(const GeneratedInstance& instance) {
  Json j;
  j["n"] = instance.graph.n;
  Json edges = Json::array();
  for (const auto& e : instance.graph.edges) {
    edges.push_back(Json::array({e.u, e.v, e.length.to_string()}));
  }
  j["edges"] = std::move(edges);
  j["balls"] = int_lists(instance.balls);
  Json labels = Json::object();
  for (std::size_t v = 0; v < instance.labels.size(); ++v) {
    labels[std::to_string(v)] = instance.labels[v];
  }
  j["labels"] = std::move(labels);
  Json params = Json::object();
  if (instance.params.k) params["k"] = *instance.params.k;
  if (instance.params.c) params["c"] = *instance.params.c;
  if (instance.params.r) params["r"] = instance.params.r->to_string();
  if (instance.params.k_prime) params["k_prime"] = *instance.params.k_prime;
  j["params"] = std::move(params);
  return dump(j);
}

}  // namespace sparsehs::io
