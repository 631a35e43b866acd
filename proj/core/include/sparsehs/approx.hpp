#pragma once

#include <cstdint>
#include <vector>

#include "sparsehs/graph.hpp"
#include "sparsehs/rational.hpp"
#include "sparsehs/set_system.hpp"

namespace sparsehs {

/// Vertex cover from the sparse-cover relaxation, rounded at 1/2 (ties
/// round in). The cover's overlap with any listed ball is at most
/// twice the relaxation's optimum.
HittingSolution sparse_vc_2approx(const WeightedGraph& g,
                                  const std::vector<VertexSet>& balls);

/// Vertex cover keeping the largest overlap with any closed
/// neighborhood within twice the optimum (minus one): for each guess
/// k_star = 1..n, vertices of degree above k_star are forced to 1 in
/// the relaxation, the solution is rounded at 1/2, and vertices whose
/// whole closed neighborhood was taken are removed (smallest id
/// first); the best guess wins, ties to the smallest k_star. Guesses
/// sharing the same forced set share one LP solve.
HittingSolution fair_vc_approx(const WeightedGraph& g);

/// A cover produced by randomized rounding, with the exact relaxation
/// optimum it was rounded from.
struct MmscCover {
  std::vector<int> chosen;  // set indices, ascending
  int membership = 0;
  Rational lp_value;
  std::uint64_t seed = 0;
};

/// Randomized-rounding cover for minimum-membership set cover: each
/// set enters with probability min(1, 2 ln(|U|+2) y_S); up to 64
/// resampling rounds, then a deterministic greedy cover as a fallback.
/// Fully deterministic for a fixed seed. Throws InputError on
/// duplicate universe elements, set entries outside the universe, or
/// an uncoverable element.
MmscCover mmsc_approx(const std::vector<int>& universe,
                      const std::vector<VertexSet>& sets, std::uint64_t seed);

/// Drops every ball that contains no family path entirely; such balls
/// never determine the optimum. Order of the kept balls is preserved.
/// Throws InputError when the family was built for a different radius
/// or is truncated.
std::vector<VertexSet> rspc_prune_balls(const WeightedGraph& g,
                                        const Rational& r,
                                        const PathFamily& family,
                                        const std::vector<VertexSet>& balls);

/// Shortest-path cover via set-cover rounding: elements are the family
/// paths plus the surviving radius-2r balls, candidate sets are the
/// per-vertex memberships of vertices lying on family paths, and the
/// chosen sets name the cover. Hits every family path; its overlap
/// with any radius-2r ball is at most the rounding's membership.
HittingSolution rspc_logn_approx(const WeightedGraph& g, const Rational& r,
                                 std::uint64_t seed,
                                 std::uint64_t cap = 1000000);

}  // namespace sparsehs
