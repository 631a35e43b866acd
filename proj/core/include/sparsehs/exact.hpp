#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sparsehs/graph.hpp"
#include "sparsehs/rational.hpp"
#include "sparsehs/set_system.hpp"

namespace sparsehs {

/// Node budget for branch-and-bound searches. A search that would
/// expand more nodes than max_nodes throws ResourceLimitError instead
/// of returning an unproven answer.
struct SearchBudget {
  std::uint64_t max_nodes = 100000000;
};

/// Filled in (when passed) with how much work a search performed.
struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Minimum-sparseness hitting set by branch and bound: branch on the
/// first member of family_f not yet hit, trying its elements in
/// ascending order, each after excluding its predecessors; excluding
/// an element propagates (a member left with one candidate forces that
/// candidate, a member left with none closes the branch). The largest
/// overlap with any member of family_b only grows along a branch, so
/// it prunes against the incumbent. Returns the first optimum the
/// search proves in this canonical order; ties are deterministic.
HittingSolution solve_sparse_hs_exact(const SetSystemInstance& instance,
                                      SearchBudget budget = {},
                                      SearchStats* stats = nullptr);

/// Decision variant: a hitting set with sparseness at most k, or
/// std::nullopt once the search has proven none exists. Same engine,
/// same budget contract.
std::optional<HittingSolution> solve_sparse_hs_decision(
    const SetSystemInstance& instance, int k, SearchBudget budget = {},
    SearchStats* stats = nullptr);

/// Per-ball hub sets: per_ball[v] is a smallest hub set for the ball
/// of radius 2r around v; value is the largest size among them.
struct RhdResult {
  std::map<int, VertexSet> per_ball;
  int value = 0;
};

/// Smallest set of hubs covering every family path that intersects
/// the ball of radius 2r around center; ties are broken toward the
/// lexicographically smallest hub set. Hubs live on the relevant
/// paths; with hubs_within_ball they are additionally confined to the
/// ball (a stricter reading of where hubs may sit). Throws InputError
/// when the family was built for a different radius or is truncated.
VertexSet solve_rhd_ball_exact(const WeightedGraph& g, const Rational& r,
                               int center, const PathFamily& family,
                               bool hubs_within_ball = false);

/// Evaluates solve_rhd_ball_exact on every ball of radius 2r. The path
/// family is enumerated internally; truncation surfaces as InputError.
RhdResult rhd_value(const WeightedGraph& g, const Rational& r,
                    std::uint64_t cap = 1000000,
                    bool hubs_within_ball = false);

/// Largest rhd_value across all radii where the path family can
/// change; 0 when no two vertices are connected.
int highway_dimension_exact(const WeightedGraph& g,
                            std::uint64_t cap = 1000000);

/// Exact shortest-path cover: hitting set over the family's vertex
/// sets, sparseness measured against the given balls. Throws
/// InputError when the family was built for a different radius or is
/// truncated.
HittingSolution solve_rspc_exact(const WeightedGraph& g, const Rational& r,
                                 const PathFamily& family,
                                 const std::vector<VertexSet>& balls,
                                 SearchBudget budget = {},
                                 SearchStats* stats = nullptr);

/// A set cover minimizing the largest number of chosen sets any
/// element belongs to.
struct MmscSolution {
  std::vector<int> chosen;  // indices into the set list, ascending
  int membership = 0;
};

/// Exact minimum-membership set cover; among optimal covers, returns
/// the one whose sorted index sequence is lexicographically smallest
/// (a shorter sequence beats any extension of it). Meant for small set
/// counts; the tie-break alone probes one decision search per index.
/// Throws InputError on duplicate universe elements, set entries
/// outside the universe, or an uncoverable element.
MmscSolution solve_mmsc_exact(const std::vector<int>& universe,
                              const std::vector<VertexSet>& sets);

/// Matching maximizing the smallest number of matching edges inside
/// any listed ball, by branch and bound over edges in canonical order
/// (include before exclude). Returns the first optimum in that order.
/// With no balls the density is 0 by convention and the empty matching
/// is returned.
MatchingSolution solve_dense_matching_exact(const WeightedGraph& g,
                                            const std::vector<VertexSet>& balls,
                                            SearchBudget budget = {},
                                            SearchStats* stats = nullptr);

}  // namespace sparsehs
