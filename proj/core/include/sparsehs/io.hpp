#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sparsehs/approx.hpp"
#include "sparsehs/cnf.hpp"
#include "sparsehs/exact.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/reductions.hpp"
#include "sparsehs/set_system.hpp"

// Text formats. JSON payloads parse strictly (missing or mistyped
// fields throw InputError); every parse_* here accepts exactly what
// the matching *_json emits. Rationals travel as their canonical
// strings ("p" or "p/q").
namespace sparsehs::io {

/// Whole-file read; throws InputError when the file cannot be read.
std::string read_file(const std::string& path);

/// Whole-file write; throws InputError when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

/// 64-bit FNV-1a over the chunks in order, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::vector<std::string>& chunks);

// --- graphs: line-oriented text ---------------------------------------
// First line "n m", then m lines "u v length" with length a rational.

WeightedGraph parse_graph_text(const std::string& text);
std::string graph_text(const WeightedGraph& g);

// --- set-system instances: {"n", "F", "B"} ----------------------------

SetSystemInstance parse_instance_json(const std::string& text);
std::string instance_json(const SetSystemInstance& instance);

// --- hitting solutions: {"H", "sparseness"} ---------------------------
// "sparseness" is optional on input; it can always be recomputed.

HittingSolution parse_hitting_json(const std::string& text);
std::string hitting_json(const HittingSolution& solution);

// --- plain collections of vertex sets: [[...], ...] -------------------

std::vector<VertexSet> parse_vertex_sets_json(const std::string& text);
std::string vertex_sets_json(const std::vector<VertexSet>& sets);

// --- assignments: {"values": [bool, ...]} -----------------------------

Assignment parse_assignment_json(const std::string& text);
std::string assignment_json(const Assignment& a);

// --- matchings: {"M": [[u, v], ...], "density"} ------------------------
// "density" is optional on input.

MatchingSolution parse_matching_json(const std::string& text);
std::string matching_json(const MatchingSolution& m);

// --- path families ------------------------------------------------------
// {"radius", "truncated", "paths": [{"s", "t", "length", "vertices"}]}

PathFamily parse_path_family_json(const std::string& text);
std::string path_family_json(const PathFamily& family);

// --- covering instances: {"universe", "sets"} ---------------------------

struct MmscInstance {
  std::vector<int> universe;
  std::vector<VertexSet> sets;
};

MmscInstance parse_mmsc_json(const std::string& text);
std::string mmsc_json(const MmscInstance& instance);
std::string mmsc_solution_json(const MmscSolution& solution);
std::string mmsc_cover_json(const MmscCover& cover);

// --- per-ball hub results: {"value", "per_ball": {"center": [...]}} -----

std::string rhd_json(const RhdResult& result);

// --- generated instances -------------------------------------------------
// {"n", "edges": [[u, v, "length"], ...], "balls", "labels", "params"};
// labels keyed by vertex id as a string, params carrying only the
// fields the generator set.

GeneratedInstance parse_generated_json(const std::string& text);
std::string generated_json(const GeneratedInstance& instance);

}  // namespace sparsehs::io
