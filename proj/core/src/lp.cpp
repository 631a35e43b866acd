#include "sparsehs/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "sparsehs/errors.hpp"

namespace sparsehs {

namespace {

struct Row {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

std::optional<Rational> bound_at(const std::vector<std::optional<Rational>>& v,
                                 std::size_t j) {
  if (v.empty()) return std::nullopt;
  return v[j];
}

void validate_program(const LinearProgram& lp) {
  if (lp.variable_count < 0) throw InputError("negative variable count");
  const auto n = static_cast<std::size_t>(lp.variable_count);
  if (lp.objective.size() != n) {
    throw InputError("objective length does not match variable count");
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    throw InputError("lower bound vector length mismatch");
  }
  if (!lp.upper_bounds.empty() && lp.upper_bounds.size() != n) {
    throw InputError("upper bound vector length mismatch");
  }
  for (const auto& c : lp.constraints) {
    for (const auto& [var, coeff] : c.coefficients) {
      (void)coeff;
      if (var < 0 || var >= lp.variable_count) {
        throw InputError("constraint references variable " +
                         std::to_string(var) + " outside range");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto lo = bound_at(lp.lower_bounds, j);
    auto hi = bound_at(lp.upper_bounds, j);
    if (lo && hi && *hi < *lo) {
      throw InputError("variable " + std::to_string(j) + " has crossed bounds");
    }
  }
}

/// Dense tableau simplex over exact rationals.
class SimplexTableau {
 public:
  SimplexTableau(std::vector<Row> rows, std::vector<Rational> objective,
                 std::size_t structural_count)
      : structural_count_(structural_count) {
    // Negative right-hand sides are normalized away so the artificial
    // basis below is feasible.
    for (auto& row : rows) {
      if (row.rhs < Rational(0)) {
        for (auto& c : row.coefficients) c = -c;
        row.rhs = -row.rhs;
        if (row.relation == Relation::LessEqual) {
          row.relation = Relation::GreaterEqual;
        } else if (row.relation == Relation::GreaterEqual) {
          row.relation = Relation::LessEqual;
        }
      }
    }
    const std::size_t m = rows.size();
    std::size_t slack_count = 0;
    for (const auto& row : rows) {
      if (row.relation != Relation::Equal) ++slack_count;
    }
    std::size_t artificial_count = 0;
    for (const auto& row : rows) {
      if (row.relation != Relation::LessEqual) ++artificial_count;
    }
    artificial_start_ = structural_count_ + slack_count;
    column_count_ = artificial_start_ + artificial_count;

    matrix_.assign(m, std::vector<Rational>(column_count_ + 1, Rational(0)));
    basis_.assign(m, 0);
    phase1_.assign(column_count_ + 1, Rational(0));
    phase2_.assign(column_count_ + 1, Rational(0));
    for (std::size_t j = 0; j < structural_count_; ++j) {
      phase2_[j] = objective[j];
    }

    std::size_t next_slack = structural_count_;
    std::size_t next_artificial = artificial_start_;
    for (std::size_t i = 0; i < m; ++i) {
      auto& out = matrix_[i];
      for (std::size_t j = 0; j < structural_count_; ++j) {
        out[j] = rows[i].coefficients[j];
      }
      out[column_count_] = rows[i].rhs;
      switch (rows[i].relation) {
        case Relation::LessEqual:
          out[next_slack] = Rational(1);
          basis_[i] = static_cast<int>(next_slack++);
          break;
        case Relation::GreaterEqual:
          out[next_slack] = Rational(-1);
          ++next_slack;
          out[next_artificial] = Rational(1);
          basis_[i] = static_cast<int>(next_artificial++);
          break;
        case Relation::Equal:
          out[next_artificial] = Rational(1);
          basis_[i] = static_cast<int>(next_artificial++);
          break;
      }
    }
    // Phase-1 cost: sum of artificials, priced out of the basis.
    for (std::size_t j = artificial_start_; j < column_count_; ++j) {
      phase1_[j] = Rational(1);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(basis_[i]) >= artificial_start_) {
        subtract_row(phase1_, matrix_[i]);
      }
    }
    // Phase-2 cost priced for the initial basis (slack costs are 0, so
    // only artificial rows would matter and they have cost 0 in
    // phase 2; nothing to do).
  }

  /// Runs phase 1 then phase 2. Returns the solver status; on Optimal
  /// the structural solution can be read with solution_value().
  LpStatus run() {
    if (!optimize(phase1_, /*forbid_artificials=*/false)) {
      // Phase 1 is bounded below by 0, so unboundedness cannot occur.
      throw Error("phase-1 simplex reported unbounded");
    }
    if (phase1_[column_count_] != Rational(0)) return LpStatus::Infeasible;
    evict_artificials();
    if (!optimize(phase2_, /*forbid_artificials=*/true)) {
      return LpStatus::Unbounded;
    }
    return LpStatus::Optimal;
  }

  /// Value of structural variable j in the current basis.
  Rational solution_value(std::size_t j) const {
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      if (static_cast<std::size_t>(basis_[i]) == j) {
        return matrix_[i][column_count_];
      }
    }
    return Rational(0);
  }

 private:
  static void subtract_row(std::vector<Rational>& target,
                           const std::vector<Rational>& row) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (row[j] != Rational(0)) target[j] -= row[j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pivot_row = matrix_[row];
    Rational inverse = Rational(1) / pivot_row[col];
    if (inverse != Rational(1)) {
      for (auto& c : pivot_row) {
        if (c != Rational(0)) c *= inverse;
      }
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational factor = target[col];
      if (factor == Rational(0)) return;
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (pivot_row[j] != Rational(0)) target[j] -= factor * pivot_row[j];
      }
    };
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      if (i != row) eliminate(matrix_[i]);
    }
    eliminate(phase1_);
    eliminate(phase2_);
    basis_[row] = static_cast<int>(col);
  }

  /// Minimizes the given cost row. Returns false if unbounded.
  bool optimize(std::vector<Rational>& cost, bool forbid_artificials) {
    const std::size_t limit =
        forbid_artificials ? artificial_start_ : column_count_;
    std::uint64_t stalled = 0;
    const std::uint64_t stall_threshold =
        4 * (matrix_.size() + column_count_) + 16;
    bool bland = false;
    while (true) {
      // Entering column: most negative reduced cost, or the smallest
      // index with a negative cost once Bland's rule kicks in.
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost[j] < Rational(0)) {
          if (bland) {
            entering = j;
            break;
          }
          if (entering == limit || cost[j] < cost[entering]) entering = j;
        }
      }
      if (entering == limit) return true;  // optimal
      // Leaving row: minimum ratio, ties to the smallest basis index.
      std::size_t leaving = matrix_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < matrix_.size(); ++i) {
        const Rational& a = matrix_[i][entering];
        if (a <= Rational(0)) continue;
        Rational ratio = matrix_[i][column_count_] / a;
        if (leaving == matrix_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == matrix_.size()) return false;  // unbounded
      Rational before = cost[column_count_];
      pivot(leaving, entering);
      if (!bland) {
        if (cost[column_count_] == before) {
          if (++stalled > stall_threshold) bland = true;
        } else {
          stalled = 0;
        }
      }
    }
  }

  /// After phase 1, pivots remaining artificial basics out; rows that
  /// cannot be pivoted out are redundant and harmless (their artificial
  /// stays basic at zero and never re-enters).
  void evict_artificials() {
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      if (static_cast<std::size_t>(basis_[i]) < artificial_start_) continue;
      for (std::size_t j = 0; j < artificial_start_; ++j) {
        if (matrix_[i][j] != Rational(0)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t structural_count_ = 0;
  std::size_t artificial_start_ = 0;
  std::size_t column_count_ = 0;
  std::vector<std::vector<Rational>> matrix_;
  std::vector<Rational> phase1_;
  std::vector<Rational> phase2_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  validate_program(lp);
  const auto n = static_cast<std::size_t>(lp.variable_count);

  // Shift every variable by its lower bound so the solver works with
  // nonnegative variables; upper bounds become extra tableau rows.
  std::vector<Rational> shift(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (auto lo = bound_at(lp.lower_bounds, j)) shift[j] = *lo;
  }

  std::vector<Row> rows;
  rows.reserve(lp.constraints.size() + n);
  for (const auto& c : lp.constraints) {
    Row row;
    row.coefficients.assign(n, Rational(0));
    Rational offset(0);
    for (const auto& [var, coeff] : c.coefficients) {
      row.coefficients[static_cast<std::size_t>(var)] += coeff;
      offset += coeff * shift[static_cast<std::size_t>(var)];
    }
    row.relation = c.relation;
    row.rhs = c.rhs - offset;
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (auto hi = bound_at(lp.upper_bounds, j)) {
      Row row;
      row.coefficients.assign(n, Rational(0));
      row.coefficients[j] = Rational(1);
      row.relation = Relation::LessEqual;
      row.rhs = *hi - shift[j];
      rows.push_back(std::move(row));
    }
  }

  SimplexTableau tableau(std::move(rows), lp.objective, n);
  LpResult result;
  result.status = tableau.run();
  if (result.status != LpStatus::Optimal) return result;
  result.assignment.resize(n);
  result.objective_value = Rational(0);
  for (std::size_t j = 0; j < n; ++j) {
    result.assignment[j] = tableau.solution_value(j) + shift[j];
    result.objective_value += lp.objective[j] * result.assignment[j];
  }
  return result;
}

LinearProgram build_sparse_vc_relaxation(const WeightedGraph& g,
                                         const std::vector<VertexSet>& balls) {
  LinearProgram lp;
  lp.variable_count = g.n + 1;
  lp.objective.assign(static_cast<std::size_t>(g.n + 1), Rational(0));
  lp.objective[static_cast<std::size_t>(g.n)] = Rational(1);
  for (const auto& e : g.edges) {
    LinearConstraint c;
    c.coefficients = {{e.u, Rational(1)}, {e.v, Rational(1)}};
    c.relation = Relation::GreaterEqual;
    c.rhs = Rational(1);
    lp.constraints.push_back(std::move(c));
  }
  for (const auto& raw : balls) {
    VertexSet b = detail::canonical_vertex_set(raw, g.n, "ball");
    LinearConstraint c;
    for (int v : b) c.coefficients.emplace_back(v, Rational(1));
    c.coefficients.emplace_back(g.n, Rational(-1));
    c.relation = Relation::LessEqual;
    c.rhs = Rational(0);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

LinearProgram build_fair_vc_relaxation(const WeightedGraph& g, int k_star) {
  if (k_star < 0) throw InputError("negative degree guess");
  std::vector<VertexSet> neighborhoods;
  neighborhoods.reserve(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    VertexSet close{v};
    for (const auto& [to, len] : g.adjacency[static_cast<std::size_t>(v)]) {
      (void)len;
      close.push_back(to);
    }
    std::sort(close.begin(), close.end());
    neighborhoods.push_back(std::move(close));
  }
  LinearProgram lp = build_sparse_vc_relaxation(g, neighborhoods);
  for (int v = 0; v < g.n; ++v) {
    if (static_cast<int>(g.adjacency[static_cast<std::size_t>(v)].size()) >
        k_star) {
      LinearConstraint c;
      c.coefficients = {{v, Rational(1)}};
      c.relation = Relation::Equal;
      c.rhs = Rational(1);
      lp.constraints.push_back(std::move(c));
    }
  }
  return lp;
}

LinearProgram build_mmsc_relaxation(const std::vector<int>& universe,
                                    const std::vector<VertexSet>& sets) {
  std::set<int> element_check(universe.begin(), universe.end());
  if (element_check.size() != universe.size()) {
    throw InputError("duplicate universe element");
  }
  std::map<int, std::vector<int>> covering;  // element -> set indices
  for (int u : universe) covering[u];
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int u : sets[s]) {
      auto it = covering.find(u);
      if (it == covering.end()) {
        throw InputError("set entry " + std::to_string(u) +
                         " outside the universe");
      }
      if (it->second.empty() || it->second.back() != static_cast<int>(s)) {
        it->second.push_back(static_cast<int>(s));
      }
    }
  }
  const int m = static_cast<int>(sets.size());
  LinearProgram lp;
  lp.variable_count = m + 1;
  lp.objective.assign(static_cast<std::size_t>(m + 1), Rational(0));
  lp.objective[static_cast<std::size_t>(m)] = Rational(1);
  lp.lower_bounds.assign(static_cast<std::size_t>(m + 1), Rational(0));
  lp.upper_bounds.assign(static_cast<std::size_t>(m + 1), std::nullopt);
  for (int s = 0; s < m; ++s) {
    lp.upper_bounds[static_cast<std::size_t>(s)] = Rational(1);
  }
  for (int u : universe) {
    LinearConstraint coverage;
    for (int s : covering[u]) coverage.coefficients.emplace_back(s, Rational(1));
    coverage.relation = Relation::GreaterEqual;
    coverage.rhs = Rational(1);
    lp.constraints.push_back(std::move(coverage));
  }
  for (int u : universe) {
    LinearConstraint membership;
    for (int s : covering[u]) {
      membership.coefficients.emplace_back(s, Rational(1));
    }
    membership.coefficients.emplace_back(m, Rational(-1));
    membership.relation = Relation::LessEqual;
    membership.rhs = Rational(0);
    lp.constraints.push_back(std::move(membership));
  }
  return lp;
}

}  // namespace sparsehs
