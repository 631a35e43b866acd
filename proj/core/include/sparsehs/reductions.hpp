#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsehs/cnf.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/rational.hpp"
#include "sparsehs/set_system.hpp"

namespace sparsehs {

/// Parameters a generator was invoked with, echoed into its output.
struct ReductionParams {
  std::optional<int> k;
  std::optional<int> c;
  std::optional<Rational> r;
  std::optional<long long> k_prime;
};

/// A generated instance: the graph, the ball collection the problem is
/// measured against, a human-readable label per vertex (a bijection),
/// and the parameters used.
struct GeneratedInstance {
  WeightedGraph graph;
  std::vector<VertexSet> balls;
  std::vector<std::string> labels;
  ReductionParams params;
};

// --- satisfiability -> sparse vertex cover ---------------------------

/// For a formula whose clauses have exactly three literals (repeats
/// allowed) and k >= 2: a perfect matching of literal pairs and helper
/// pairs, with one ball per variable and one per clause, such that the
/// optimum sparseness is at most k exactly when the formula is
/// satisfiable (for clauses without repeated literals). Throws
/// InputError on malformed input, arity != 3, or k < 2.
GeneratedInstance exactly3sat_to_sparse_vc(const CnfFormula& f, int k);

/// The cover encoding a satisfying assignment: all false literal
/// vertices plus the first k-1 helper vertices. Throws InputError when
/// a does not satisfy f.
VertexSet sparse_vc_witness(const CnfFormula& f, int k, const Assignment& a);

/// Reads the assignment off a vertex cover of sparseness at most k:
/// variable i is true exactly when the negated-literal vertex is in h.
/// Throws InputError when h is not such a cover, or when the decoded
/// assignment fails the formula (possible only with repeated literals
/// inside a clause).
Assignment sparse_vc_extract(const CnfFormula& f, int k, const VertexSet& h);

// --- satisfiability -> fair vertex cover -----------------------------

/// For a formula where every variable occurs exactly twice positively
/// and once negatively, clauses are sets of 2 or 3 literals, and
/// k >= 3: the star-padded cover instance whose optimum overlap with
/// any closed neighborhood is at most k exactly when the formula is
/// satisfiable. Balls are the closed neighborhoods. Throws InputError
/// on malformed input, occurrence-pattern violations, repeated
/// literals in a clause, or k < 3.
GeneratedInstance p2p1n3sat_to_fair_vc(const CnfFormula& f, int k);

/// The cover encoding a satisfying assignment: false literal vertices
/// plus every star center. Throws InputError when a does not satisfy f
/// or the formula/k violate the generator's preconditions.
VertexSet fair_vc_witness(const CnfFormula& f, int k, const Assignment& a);

/// Open-neighborhood variant for k >= 4: each variable carries one
/// two-level tree whose root joins both literal vertices; every root
/// and first-level child has degree k+1 and is forced into any
/// feasible cover. Balls are the open neighborhoods.
GeneratedInstance p2p1n3sat_to_open_fair_vc(const CnfFormula& f, int k);

// --- satisfiability -> dense matching --------------------------------

/// For a formula with clause arity at most 3 and no repeated literal
/// inside a clause: the triangle-and-chain graph whose radius-2 balls
/// all contain two matching edges exactly when the formula is
/// satisfiable (for clause arity at least 2). Balls are all radius-2
/// balls. Throws InputError on malformed input.
GeneratedInstance threesat_to_dense_matching(const CnfFormula& f);

/// The matching encoding a satisfying assignment, serving each clause
/// through its first satisfied literal. Throws InputError when a does
/// not satisfy f.
std::vector<std::pair<int, int>> dense_matching_witness(const CnfFormula& f,
                                                        const Assignment& a);

/// Same, but serving clause j through chosen_literals[j], which must
/// appear in clause j and be satisfied by a.
std::vector<std::pair<int, int>> dense_matching_witness(
    const CnfFormula& f, const Assignment& a,
    const std::vector<int>& chosen_literals);

/// Reads the assignment off a matching of density at least 2: variable
/// i is true exactly when some clause edge to a positive occurrence's
/// chain is matched. Throws InputError when m is invalid, its density
/// is below 2, or the decoded assignment fails the formula.
Assignment dense_matching_extract(const CnfFormula& f,
                                  const std::vector<std::pair<int, int>>& m);

// --- clique -> shortest-path hub structure ---------------------------

/// For a simple graph h with at least one edge, k >= 2, and copy count
/// c >= 1: the hub-lower-bound instance at radius r = 2^m (m = number
/// of direction-resolved edges of h), whose radius-r hub structure
/// admits k' = 4ck(k-1) + C(k,2) + k + 3 hubs per ball exactly when h
/// has a k-clique. Edge lengths of h are ignored; balls is empty (the
/// covering structure follows from the radius in params). Throws
/// InputError when k < 2 or h has no edge.
GeneratedInstance clique_to_rhd(const WeightedGraph& h, int k, int c);

/// The hub set encoding a k-clique of h: the matching path positions
/// in every gadget copy, the pair selectors of the clique's edges, the
/// anchors of its vertices, and the three gates. Throws InputError
/// when clique is not a k-clique of h.
VertexSet rhd_witness_from_clique(const WeightedGraph& h,
                                  const VertexSet& clique, int k, int c);

/// The eight boundary paths of gadget copy (i, j, lambda): shortest
/// paths of length r+1 across the gadget's long connectors, recorded
/// with endpoints and length. No gadget vertex lies on more than two
/// of them, which forces at least four hubs per copy.
std::vector<PathRecord> rhd_gadget_paths(const WeightedGraph& h, int k, int c,
                                         int i, int j, int lambda);

/// The selector probe path of gadget copy (i, j, lambda), i < j, for
/// direction-resolved edge (x, y): from the pair selector across the
/// descending side into the synchronizing path. A hub position tau
/// meets it exactly when tau differs from the edge's index.
PathRecord rhd_selector_path(const WeightedGraph& h, int k, int c, int i,
                             int j, int lambda, std::pair<int, int> xy);

/// The anchor probe path of gadget copy (i, j, lambda) for vertex x of
/// h: from the anchor across the ascending side into the synchronizing
/// path. A hub position tau meets it exactly when tau lies outside x's
/// own edge-index range.
PathRecord rhd_anchor_path(const WeightedGraph& h, int k, int c, int i, int j,
                           int lambda, int x);

}  // namespace sparsehs
