#pragma once

#include <optional>

#include "sparsehs/cnf.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/set_system.hpp"

namespace sparsehs {

/// Satisfiability for CNF with clauses of width 1 or 2, via the
/// implication graph and its strongly connected components. Returns a
/// satisfying assignment, or std::nullopt when none exists. The
/// returned assignment is deterministic: components are compared in
/// reverse topological order and unconstrained variables come out
/// false. Throws InputError on clauses wider than 2.
std::optional<Assignment> twosat_solve(const CnfFormula& f);

/// The width-2 formula whose models are exactly the vertex covers of g
/// that overlap every listed ball in at most one vertex: one clause
/// (x_u or x_v) per edge and one clause (not x_u or not x_v) per pair
/// of distinct vertices inside a ball. Variable i+1 stands for vertex
/// i. Throws InputError on out-of-range ball entries.
CnfFormula sparse_vc_k1_formula(const WeightedGraph& g,
                                const std::vector<VertexSet>& balls);

/// Vertex cover of g with at most one vertex inside every listed ball,
/// or std::nullopt when no such cover exists. The cover is exactly the
/// set of variables made true by twosat_solve on sparse_vc_k1_formula.
std::optional<VertexSet> solve_sparse_vc_k1(const WeightedGraph& g,
                                            const std::vector<VertexSet>& balls);

}  // namespace sparsehs
