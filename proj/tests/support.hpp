#pragma once

// Shared helpers for the test binaries: a deterministic RNG, small
// random instance generators, brute-force reference solvers, and a few
// fixed formulas with hand-checked properties. The reference solvers
// are deliberately naive (full enumeration) so they cannot share a bug
// with the real implementations.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsehs/cnf.hpp"
#include "sparsehs/exact.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/set_system.hpp"

namespace testsupport {

using sparsehs::Assignment;
using sparsehs::CnfFormula;
using sparsehs::Rational;
using sparsehs::SetSystemInstance;
using sparsehs::VertexSet;
using sparsehs::WeightedGraph;

// splitmix64: tiny, deterministic, plenty for test-instance draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be positive.
  int below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)],
                v[static_cast<std::size_t>(below(i + 1))]);
    }
  }

 private:
  std::uint64_t state_;
};

// --- random structures -------------------------------------------------

// Connected graph: a random spanning tree plus independent extra edges.
// Lengths are 1 when unit_lengths, otherwise drawn from a small pool of
// rationals including non-integers.
inline WeightedGraph random_connected_graph(Rng& rng, int n,
                                            double extra_edge_p,
                                            bool unit_lengths) {
  const Rational pool[] = {Rational(1), Rational(2),      Rational(1, 2),
                           Rational(3), Rational(3, 2),   Rational(5, 2)};
  auto length = [&]() {
    return unit_lengths ? Rational(1) : pool[rng.below(6)];
  };
  std::vector<WeightedGraph::Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    int u = rng.below(v);
    edges.push_back({u, v, length()});
    seen.insert({u, v});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (seen.count({u, v})) continue;
      if (rng.chance(extra_edge_p)) {
        edges.push_back({u, v, length()});
      }
    }
  }
  return sparsehs::make_graph(n, std::move(edges));
}

// Graph that may be disconnected: every pair independently an edge.
inline WeightedGraph random_graph(Rng& rng, int n, double edge_p) {
  std::vector<WeightedGraph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(edge_p)) edges.push_back({u, v, Rational(1)});
    }
  }
  return sparsehs::make_graph(n, std::move(edges));
}

inline VertexSet random_subset(Rng& rng, int n, double member_p,
                               bool force_nonempty) {
  VertexSet s;
  for (int v = 0; v < n; ++v) {
    if (rng.chance(member_p)) s.push_back(v);
  }
  if (force_nonempty && s.empty()) s.push_back(rng.below(n));
  return s;
}

inline std::vector<VertexSet> random_balls(Rng& rng, int n, int count,
                                           double member_p) {
  std::vector<VertexSet> balls;
  for (int i = 0; i < count; ++i) {
    balls.push_back(random_subset(rng, n, member_p, false));
  }
  return balls;
}

inline SetSystemInstance random_instance(Rng& rng, int n, int f_count,
                                         int b_count) {
  std::vector<VertexSet> family_f, family_b;
  for (int i = 0; i < f_count; ++i) {
    family_f.push_back(random_subset(rng, n, 0.3, true));
  }
  for (int i = 0; i < b_count; ++i) {
    family_b.push_back(random_subset(rng, n, 0.3, false));
  }
  return sparsehs::make_set_system(n, family_f, family_b);
}

inline std::vector<VertexSet> closed_neighborhood_balls(
    const WeightedGraph& g) {
  std::vector<VertexSet> balls;
  for (int v = 0; v < g.n; ++v) {
    VertexSet b{v};
    for (const auto& [w, len] : g.adjacency[static_cast<std::size_t>(v)]) {
      (void)len;
      b.push_back(w);
    }
    std::sort(b.begin(), b.end());
    balls.push_back(std::move(b));
  }
  return balls;
}

// --- reference solvers ---------------------------------------------------

// Exhaustive minimum sparseness over all 2^n vertex subsets. Assumes the
// instance is canonical (members of family_f nonempty), so a hitting set
// always exists. Usable up to n ~ 20.
inline int oracle_min_sparseness(const SetSystemInstance& inst) {
  if (inst.n > 24) throw std::logic_error("oracle instance too large");
  std::vector<std::uint32_t> f_masks, b_masks;
  for (const auto& s : inst.family_f) {
    std::uint32_t m = 0;
    for (int v : s) m |= 1u << v;
    f_masks.push_back(m);
  }
  for (const auto& s : inst.family_b) {
    std::uint32_t m = 0;
    for (int v : s) m |= 1u << v;
    b_masks.push_back(m);
  }
  int best = inst.n + 1;
  const std::uint32_t limit = 1u << inst.n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool hits = true;
    for (std::uint32_t fm : f_masks) {
      if ((fm & mask) == 0) {
        hits = false;
        break;
      }
    }
    if (!hits) continue;
    int worst = 0;
    for (std::uint32_t bm : b_masks) {
      worst = std::max(worst, __builtin_popcount(bm & mask));
      if (worst >= best) break;
    }
    best = std::min(best, worst);
    if (best == 0) break;
  }
  return best;
}

inline bool oracle_decision(const SetSystemInstance& inst, int k) {
  return oracle_min_sparseness(inst) <= k;
}

// Exhaustive satisfiability via the full truth table; up to ~20 variables.
inline std::optional<Assignment> oracle_satisfying(const CnfFormula& f) {
  if (f.variable_count > 24) throw std::logic_error("formula too large");
  const std::uint32_t limit = 1u << f.variable_count;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        int var = lit > 0 ? lit : -lit;
        bool val = (mask >> (var - 1)) & 1u;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a;
      for (int i = 0; i < f.variable_count; ++i) {
        a.values.push_back((mask >> i) & 1u);
      }
      return a;
    }
  }
  return std::nullopt;
}

inline bool oracle_satisfiable(const CnfFormula& f) {
  return oracle_satisfying(f).has_value();
}

// Exhaustive maximum over matchings of the minimum per-ball edge count.
// Recursion over edges (use / skip); fine up to ~16 edges.
inline int oracle_max_min_density(const WeightedGraph& g,
                                  const std::vector<VertexSet>& balls) {
  if (balls.empty()) return 0;
  // ball_hits[e] = bitmask of balls containing both endpoints of edge e
  std::vector<std::uint32_t> ball_hits(g.edges.size(), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (std::size_t b = 0; b < balls.size(); ++b) {
      const VertexSet& ball = balls[b];
      bool u_in = std::binary_search(ball.begin(), ball.end(), g.edges[e].u);
      bool v_in = std::binary_search(ball.begin(), ball.end(), g.edges[e].v);
      if (u_in && v_in) ball_hits[e] |= 1u << b;
    }
  }
  std::vector<int> counts(balls.size(), 0);
  std::vector<bool> used(static_cast<std::size_t>(g.n), false);
  int best = 0;
  auto leaf_value = [&]() {
    int worst = counts.empty() ? 0 : counts[0];
    for (int c : counts) worst = std::min(worst, c);
    return worst;
  };
  auto recurse = [&](auto&& self, std::size_t e) -> void {
    if (e == g.edges.size()) {
      best = std::max(best, leaf_value());
      return;
    }
    const auto& edge = g.edges[e];
    if (!used[static_cast<std::size_t>(edge.u)] &&
        !used[static_cast<std::size_t>(edge.v)]) {
      used[static_cast<std::size_t>(edge.u)] = true;
      used[static_cast<std::size_t>(edge.v)] = true;
      for (std::size_t b = 0; b < balls.size(); ++b) {
        if (ball_hits[e] & (1u << b)) ++counts[b];
      }
      self(self, e + 1);
      for (std::size_t b = 0; b < balls.size(); ++b) {
        if (ball_hits[e] & (1u << b)) --counts[b];
      }
      used[static_cast<std::size_t>(edge.u)] = false;
      used[static_cast<std::size_t>(edge.v)] = false;
    }
    self(self, e + 1);
  };
  recurse(recurse, 0);
  return best;
}

// Exhaustive minimum-membership set cover with the same tie-break the
// real solver promises: among optimal covers, the lexicographically
// smallest ascending index sequence (a prefix beats its extensions).
inline sparsehs::MmscSolution oracle_mmsc(const std::vector<int>& universe,
                                          const std::vector<VertexSet>& sets) {
  if (sets.size() > 20) throw std::logic_error("too many sets for oracle");
  std::vector<std::uint32_t> elem_masks;
  for (int u : universe) {
    std::uint32_t m = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (std::find(sets[s].begin(), sets[s].end(), u) != sets[s].end()) {
        m |= 1u << s;
      }
    }
    elem_masks.push_back(m);
  }
  std::optional<sparsehs::MmscSolution> best;
  const std::uint32_t limit = 1u << sets.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    int membership = 0;
    bool covers = true;
    for (std::uint32_t em : elem_masks) {
      int inside = __builtin_popcount(em & mask);
      if (inside == 0) {
        covers = false;
        break;
      }
      membership = std::max(membership, inside);
    }
    if (!covers) continue;
    sparsehs::MmscSolution cand;
    cand.membership = membership;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (mask & (1u << s)) cand.chosen.push_back(static_cast<int>(s));
    }
    if (!best || cand.membership < best->membership ||
        (cand.membership == best->membership &&
         std::lexicographical_compare(cand.chosen.begin(), cand.chosen.end(),
                                      best->chosen.begin(),
                                      best->chosen.end()))) {
      best = std::move(cand);
    }
  }
  if (!best) throw std::logic_error("oracle: universe is uncoverable");
  return *best;
}

// --- random formulas -----------------------------------------------------

// Clauses of exactly three distinct literals (distinct variables).
inline CnfFormula random_exactly3_formula(Rng& rng, int variables,
                                          int clauses) {
  if (variables < 3) throw std::logic_error("need at least 3 variables");
  CnfFormula f;
  f.variable_count = variables;
  for (int j = 0; j < clauses; ++j) {
    VertexSet vars;
    while (static_cast<int>(vars.size()) < 3) {
      int v = 1 + rng.below(variables);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        vars.push_back(v);
      }
    }
    std::vector<int> clause;
    for (int v : vars) clause.push_back(rng.chance(0.5) ? v : -v);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// Every variable occurs exactly twice positively and once negatively;
// clauses have 2 or 3 literals over distinct variables. Built by
// shuffling the 3n-literal occurrence pool into clause-sized chunks and
// retrying when a chunk repeats a variable.
inline CnfFormula random_2p1n_formula(Rng& rng, int n) {
  if (n < 3) throw std::logic_error("need at least 3 variables");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> pool;
    for (int v = 1; v <= n; ++v) {
      pool.push_back(v);
      pool.push_back(v);
      pool.push_back(-v);
    }
    rng.shuffle(pool);
    CnfFormula f;
    f.variable_count = n;
    std::size_t at = 0;
    bool ok = true;
    while (at < pool.size()) {
      std::size_t remaining = pool.size() - at;
      std::size_t size;
      if (remaining >= 5) {
        size = static_cast<std::size_t>(2 + rng.below(2));
      } else if (remaining == 4) {
        size = 2;
      } else {
        size = remaining;  // 3 or 2
      }
      std::vector<int> clause(pool.begin() + static_cast<long>(at),
                              pool.begin() + static_cast<long>(at + size));
      at += size;
      std::set<int> vars;
      for (int lit : clause) vars.insert(lit > 0 ? lit : -lit);
      if (vars.size() != clause.size()) {
        ok = false;
        break;
      }
      f.clauses.push_back(std::move(clause));
    }
    if (ok) return f;
  }
  throw std::logic_error("could not build an occurrence-balanced formula");
}

// Clauses of 2 or 3 distinct-variable literals.
inline CnfFormula random_matching_formula(Rng& rng, int variables,
                                          int clauses) {
  if (variables < 2) throw std::logic_error("need at least 2 variables");
  CnfFormula f;
  f.variable_count = variables;
  for (int j = 0; j < clauses; ++j) {
    int width = std::min(2 + static_cast<int>(rng.below(2)), variables);
    VertexSet vars;
    while (static_cast<int>(vars.size()) < width) {
      int v = 1 + rng.below(variables);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        vars.push_back(v);
      }
    }
    std::vector<int> clause;
    for (int v : vars) clause.push_back(rng.chance(0.5) ? v : -v);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// --- fixed formulas -------------------------------------------------------

// Four variables, five clauses; every variable twice positive, once
// negative. Satisfied by (1,1,0,0).
inline CnfFormula fig_formula() {
  CnfFormula f;
  f.variable_count = 4;
  f.clauses = {{1, 2, 3}, {1, 3, 4}, {-1, 2}, {-2, -4}, {-3, 4}};
  return f;
}

inline Assignment fig_assignment() { return Assignment{{true, true, false, false}}; }

// Four variables, two width-3 clauses. Satisfied by (0,1,0,1) serving
// the clauses through literals 2 and 4.
inline CnfFormula caption_formula() {
  CnfFormula f;
  f.variable_count = 4;
  f.clauses = {{1, 2, -3}, {-1, 2, 4}};
  return f;
}

inline Assignment caption_assignment() {
  return Assignment{{false, true, false, true}};
}

// Four variables, six clauses of width 2; every variable twice
// positive, once negative; unsatisfiable (tests re-check by truth
// table before relying on it).
inline CnfFormula unsat_occurrence_formula() {
  CnfFormula f;
  f.variable_count = 4;
  f.clauses = {{2, -4}, {1, -3}, {-1, -2}, {1, 3}, {2, 4}, {3, 4}};
  return f;
}

// Unit path 0-1-...-(n-1).
inline WeightedGraph path_graph(int n) {
  std::vector<WeightedGraph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, Rational(1)});
  return sparsehs::make_graph(n, std::move(edges));
}

// Unit cycle on n vertices.
inline WeightedGraph cycle_graph(int n) {
  std::vector<WeightedGraph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, Rational(1)});
  return sparsehs::make_graph(n, std::move(edges));
}

// Unit star: center 0, leaves 1..q.
inline WeightedGraph star_graph(int q) {
  std::vector<WeightedGraph::Edge> edges;
  for (int l = 1; l <= q; ++l) edges.push_back({0, l, Rational(1)});
  return sparsehs::make_graph(q + 1, std::move(edges));
}

}  // namespace testsupport
