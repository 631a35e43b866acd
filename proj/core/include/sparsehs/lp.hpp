#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sparsehs/graph.hpp"
#include "sparsehs/rational.hpp"
#include "sparsehs/set_system.hpp"

namespace sparsehs {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<std::pair<int, Rational>> coefficients;  // (variable, coefficient)
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Minimize objective . x subject to the constraints and per-variable
/// bounds. Bound vectors may be empty (all defaults) or size
/// variable_count with std::nullopt marking the default for that
/// variable. The default lower bound is 0 and the default upper bound
/// is +infinity; bounds are enforced inside the solver and are not
/// members of `constraints`.
struct LinearProgram {
  int variable_count = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;
  std::vector<std::optional<Rational>> upper_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective_value;          // meaningful only when Optimal
  std::vector<Rational> assignment;  // meaningful only when Optimal
};

/// Exact rational two-phase simplex. Pivoting is most-negative
/// reduced cost with a permanent switch to Bland's rule when the
/// objective stalls, so the solve always terminates. Deterministic.
/// Throws InputError on malformed programs (wrong vector sizes, bad
/// variable ids, crossed bounds).
LpResult solve_lp(const LinearProgram& lp);

/// Relaxation for sparse vertex cover: variables x_0..x_{n-1} and a
/// sparseness variable k at index n; minimize k subject to
/// x_u + x_v >= 1 per edge and sum_{v in B} x_v <= k per ball; all
/// variables nonnegative. Throws InputError on bad ball entries.
LinearProgram build_sparse_vc_relaxation(const WeightedGraph& g,
                                         const std::vector<VertexSet>& balls);

/// Relaxation for fair vertex cover at guess k_star: like the sparse
/// cover relaxation with balls = closed neighborhoods, plus x_v = 1
/// for every vertex of degree greater than k_star. Throws InputError
/// when k_star < 0.
LinearProgram build_fair_vc_relaxation(const WeightedGraph& g, int k_star);

/// Relaxation for minimum-membership set cover: variables y_S per set
/// and z at index |sets|; minimize z subject to, for every element u,
/// sum_{S : u in S} y_S >= 1 (coverage) and sum_{S : u in S} y_S <= z
/// (membership), with 0 <= y_S <= 1. Throws InputError on duplicate
/// universe elements or set entries outside the universe.
LinearProgram build_mmsc_relaxation(const std::vector<int>& universe,
                                    const std::vector<VertexSet>& sets);

}  // namespace sparsehs
