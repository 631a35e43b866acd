#include "sparsehs/reductions.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sparsehs/errors.hpp"

namespace sparsehs {
namespace {

std::string ts(int v) { return std::to_string(v); }

// ====================================================================
// exactly-three-literal formulas -> sparse vertex cover
// ====================================================================

void require_exactly_three(const CnfFormula& f) {
  validate_cnf(f);
  for (const auto& clause : f.clauses) {
    if (clause.size() != 3) {
      throw InputError("every clause must have exactly three literals");
    }
  }
}

// Vertex layout: positive literals, negated literals, then k-1 helper
// pairs (plain before negated).
struct PairCoverLayout {
  int n = 0;
  int k = 0;

  int pos(int i) const { return i - 1; }
  int neg(int i) const { return n + i - 1; }
  int helper(int s) const { return 2 * n + s - 1; }
  int helper_neg(int s) const { return 2 * n + (k - 1) + s - 1; }
  int lit(int l) const { return l > 0 ? pos(l) : neg(-l); }
  int total() const { return 2 * n + 2 * (k - 1); }
};

}  // namespace

GeneratedInstance exactly3sat_to_sparse_vc(const CnfFormula& f, int k) {
  require_exactly_three(f);
  if (k < 2) throw InputError("sparseness budget k must be at least 2");
  PairCoverLayout L{f.variable_count, k};

  std::vector<std::string> labels(static_cast<std::size_t>(L.total()));
  for (int i = 1; i <= L.n; ++i) {
    labels[static_cast<std::size_t>(L.pos(i))] = "x_" + ts(i);
    labels[static_cast<std::size_t>(L.neg(i))] = "!x_" + ts(i);
  }
  for (int s = 1; s <= k - 1; ++s) {
    labels[static_cast<std::size_t>(L.helper(s))] = "y_" + ts(s);
    labels[static_cast<std::size_t>(L.helper_neg(s))] = "!y_" + ts(s);
  }

  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i <= L.n; ++i) edges.push_back({L.pos(i), L.neg(i), Rational(1)});
  for (int s = 1; s <= k - 1; ++s) {
    edges.push_back({L.helper(s), L.helper_neg(s), Rational(1)});
  }

  std::vector<VertexSet> balls;
  for (int i = 1; i <= L.n; ++i) {
    VertexSet b{L.pos(i), L.neg(i)};
    for (int s = 1; s <= k - 1; ++s) {
      b.push_back(L.helper(s));
      b.push_back(L.helper_neg(s));
    }
    std::sort(b.begin(), b.end());
    balls.push_back(std::move(b));
  }
  for (const auto& clause : f.clauses) {
    VertexSet b;
    for (int lit : clause) b.push_back(L.lit(lit));
    for (int s = 1; s <= k - 2; ++s) {
      b.push_back(L.helper(s));
      b.push_back(L.helper_neg(s));
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    balls.push_back(std::move(b));
  }

  GeneratedInstance out;
  out.graph = make_graph(L.total(), std::move(edges));
  out.balls = std::move(balls);
  out.labels = std::move(labels);
  out.params.k = k;
  return out;
}

VertexSet sparse_vc_witness(const CnfFormula& f, int k, const Assignment& a) {
  require_exactly_three(f);
  if (k < 2) throw InputError("sparseness budget k must be at least 2");
  if (!evaluate_assignment(f, a)) {
    throw InputError("assignment does not satisfy the formula");
  }
  PairCoverLayout L{f.variable_count, k};
  VertexSet h;
  for (int i = 1; i <= L.n; ++i) {
    h.push_back(a.values[static_cast<std::size_t>(i - 1)] ? L.neg(i) : L.pos(i));
  }
  for (int s = 1; s <= k - 1; ++s) h.push_back(L.helper(s));
  std::sort(h.begin(), h.end());
  return h;
}

Assignment sparse_vc_extract(const CnfFormula& f, int k, const VertexSet& h) {
  GeneratedInstance inst = exactly3sat_to_sparse_vc(f, k);
  SetSystemInstance ss = vertex_cover_instance(inst.graph, inst.balls);
  if (!is_hitting_set(ss, h)) throw InputError("not a vertex cover");
  if (sparseness_of(ss, h) > k) {
    throw InputError("cover exceeds the sparseness budget");
  }
  PairCoverLayout L{f.variable_count, k};
  std::set<int> in_cover(h.begin(), h.end());
  Assignment a;
  a.values.resize(static_cast<std::size_t>(f.variable_count));
  for (int i = 1; i <= L.n; ++i) {
    a.values[static_cast<std::size_t>(i - 1)] = in_cover.count(L.neg(i)) > 0;
  }
  if (!evaluate_assignment(f, a)) {
    throw InputError("cover does not decode to a satisfying assignment");
  }
  return a;
}

// ====================================================================
// two-positive-one-negative formulas -> fair vertex cover
// ====================================================================

namespace {

void require_two_pos_one_neg(const CnfFormula& f) {
  validate_cnf(f);
  std::vector<int> pos(static_cast<std::size_t>(f.variable_count) + 1, 0);
  std::vector<int> neg(static_cast<std::size_t>(f.variable_count) + 1, 0);
  for (const auto& clause : f.clauses) {
    if (clause.size() < 2 || clause.size() > 3) {
      throw InputError("every clause must have two or three literals");
    }
    std::set<int> seen(clause.begin(), clause.end());
    if (seen.size() != clause.size()) {
      throw InputError("repeated literal in a clause");
    }
    for (int lit : clause) {
      if (lit > 0) {
        ++pos[static_cast<std::size_t>(lit)];
      } else {
        ++neg[static_cast<std::size_t>(-lit)];
      }
    }
  }
  for (int i = 1; i <= f.variable_count; ++i) {
    if (pos[static_cast<std::size_t>(i)] != 2 ||
        neg[static_cast<std::size_t>(i)] != 1) {
      throw InputError(
          "each variable must occur exactly twice positively and once "
          "negatively");
    }
  }
}

// Clause blocks shared by both cover constructions: one hub star
// z_{j,0..k} plus k - |C_j| padding stars q^s_{j,0..k}.
struct ClauseBlocks {
  int k = 0;
  std::vector<int> base;
  std::vector<int> pad_count;
  int end = 0;

  ClauseBlocks(const CnfFormula& f, int k_, int start) : k(k_) {
    int at = start;
    for (const auto& clause : f.clauses) {
      base.push_back(at);
      pad_count.push_back(k - static_cast<int>(clause.size()));
      at += (k + 1) * (1 + k - static_cast<int>(clause.size()));
    }
    end = at;
  }

  int z(int j, int rho) const {
    return base[static_cast<std::size_t>(j - 1)] + rho;
  }
  int q(int j, int rho, int s) const {
    return base[static_cast<std::size_t>(j - 1)] + (k + 1) +
           (s - 1) * (k + 1) + rho;
  }
  int pads(int j) const { return pad_count[static_cast<std::size_t>(j - 1)]; }
};

void fill_clause_labels(const CnfFormula& f, const ClauseBlocks& cb,
                        std::vector<std::string>& labels) {
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    for (int rho = 0; rho <= cb.k; ++rho) {
      labels[static_cast<std::size_t>(cb.z(j, rho))] =
          "z_{" + ts(j) + "," + ts(rho) + "}";
    }
    for (int s = 1; s <= cb.pads(j); ++s) {
      for (int rho = 0; rho <= cb.k; ++rho) {
        labels[static_cast<std::size_t>(cb.q(j, rho, s))] =
            "q_{" + ts(j) + "," + ts(rho) + "}^{" + ts(s) + "}";
      }
    }
  }
}

template <typename LitVertex>
void append_clause_edges(const CnfFormula& f, const ClauseBlocks& cb,
                         LitVertex lit_vertex,
                         std::vector<WeightedGraph::Edge>& edges) {
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    for (int lit : f.clauses[static_cast<std::size_t>(j - 1)]) {
      edges.push_back({lit_vertex(lit), cb.z(j, 0), Rational(1)});
    }
    for (int rho = 1; rho <= cb.k; ++rho) {
      edges.push_back({cb.z(j, 0), cb.z(j, rho), Rational(1)});
    }
    for (int s = 1; s <= cb.pads(j); ++s) {
      edges.push_back({cb.z(j, 0), cb.q(j, 0, s), Rational(1)});
      for (int rho = 1; rho <= cb.k; ++rho) {
        edges.push_back({cb.q(j, 0, s), cb.q(j, rho, s), Rational(1)});
      }
    }
  }
}

// Variable blocks of the closed-neighborhood construction: the literal
// pair plus k-2 stars y^s_{i,0..k} hanging off the literals.
struct StarLayout {
  int n = 0;
  int k = 0;

  int var_block() const { return 2 + (k - 2) * (k + 1); }
  int x(int i) const { return (i - 1) * var_block(); }
  int xbar(int i) const { return x(i) + 1; }
  int lit(int l) const { return l > 0 ? x(l) : xbar(-l); }
  int y(int i, int rho, int s) const {
    return x(i) + 2 + (s - 1) * (k + 1) + rho;
  }
  int vars_end() const { return n * var_block(); }
};

std::vector<VertexSet> closed_neighborhoods(const WeightedGraph& g) {
  std::vector<VertexSet> balls(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    VertexSet b{v};
    for (const auto& [w, len] : g.adjacency[static_cast<std::size_t>(v)]) {
      (void)len;
      b.push_back(w);
    }
    std::sort(b.begin(), b.end());
    balls[static_cast<std::size_t>(v)] = std::move(b);
  }
  return balls;
}

std::vector<VertexSet> open_neighborhoods(const WeightedGraph& g) {
  std::vector<VertexSet> balls(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    VertexSet b;
    for (const auto& [w, len] : g.adjacency[static_cast<std::size_t>(v)]) {
      (void)len;
      b.push_back(w);
    }
    balls[static_cast<std::size_t>(v)] = std::move(b);
  }
  return balls;
}

}  // namespace

GeneratedInstance p2p1n3sat_to_fair_vc(const CnfFormula& f, int k) {
  require_two_pos_one_neg(f);
  if (k < 3) throw InputError("neighborhood budget k must be at least 3");
  StarLayout L{f.variable_count, k};
  ClauseBlocks cb(f, k, L.vars_end());

  std::vector<std::string> labels(static_cast<std::size_t>(cb.end));
  for (int i = 1; i <= L.n; ++i) {
    labels[static_cast<std::size_t>(L.x(i))] = "x_" + ts(i);
    labels[static_cast<std::size_t>(L.xbar(i))] = "!x_" + ts(i);
    for (int s = 1; s <= k - 2; ++s) {
      for (int rho = 0; rho <= k; ++rho) {
        labels[static_cast<std::size_t>(L.y(i, rho, s))] =
            "y_{" + ts(i) + "," + ts(rho) + "}^{" + ts(s) + "}";
      }
    }
  }
  fill_clause_labels(f, cb, labels);

  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i <= L.n; ++i) {
    edges.push_back({L.x(i), L.xbar(i), Rational(1)});
    for (int s = 1; s <= k - 3; ++s) {
      edges.push_back({L.x(i), L.y(i, 0, s), Rational(1)});
    }
    for (int s = 1; s <= k - 2; ++s) {
      edges.push_back({L.xbar(i), L.y(i, 0, s), Rational(1)});
    }
    for (int s = 1; s <= k - 2; ++s) {
      for (int rho = 1; rho <= k; ++rho) {
        edges.push_back({L.y(i, 0, s), L.y(i, rho, s), Rational(1)});
      }
    }
  }
  append_clause_edges(f, cb, [&](int l) { return L.lit(l); }, edges);

  GeneratedInstance out;
  out.graph = make_graph(cb.end, std::move(edges));
  out.balls = closed_neighborhoods(out.graph);
  out.labels = std::move(labels);
  out.params.k = k;
  return out;
}

VertexSet fair_vc_witness(const CnfFormula& f, int k, const Assignment& a) {
  require_two_pos_one_neg(f);
  if (k < 3) throw InputError("neighborhood budget k must be at least 3");
  if (!evaluate_assignment(f, a)) {
    throw InputError("assignment does not satisfy the formula");
  }
  StarLayout L{f.variable_count, k};
  ClauseBlocks cb(f, k, L.vars_end());
  VertexSet h;
  for (int i = 1; i <= L.n; ++i) {
    h.push_back(a.values[static_cast<std::size_t>(i - 1)] ? L.xbar(i)
                                                          : L.x(i));
    for (int s = 1; s <= k - 2; ++s) h.push_back(L.y(i, 0, s));
  }
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    h.push_back(cb.z(j, 0));
    for (int s = 1; s <= cb.pads(j); ++s) h.push_back(cb.q(j, 0, s));
  }
  std::sort(h.begin(), h.end());
  return h;
}

namespace {

// Variable blocks of the open-neighborhood construction: the literal
// pair plus one two-level tree (root, k-1 children, k grandchildren
// per child) whose root joins both literals.
struct TreeLayout {
  int n = 0;
  int k = 0;

  int var_block() const { return k * k + 2; }
  int x(int i) const { return (i - 1) * var_block(); }
  int xbar(int i) const { return x(i) + 1; }
  int lit(int l) const { return l > 0 ? x(l) : xbar(-l); }
  int root(int i) const { return x(i) + 2; }
  int child(int i, int j) const { return x(i) + 2 + j; }
  int grandchild(int i, int j, int rho) const {
    return x(i) + (k + 2) + (j - 1) * k + (rho - 1);
  }
  int vars_end() const { return n * var_block(); }
};

}  // namespace

GeneratedInstance p2p1n3sat_to_open_fair_vc(const CnfFormula& f, int k) {
  require_two_pos_one_neg(f);
  if (k < 4) throw InputError("neighborhood budget k must be at least 4");
  TreeLayout L{f.variable_count, k};
  ClauseBlocks cb(f, k, L.vars_end());

  std::vector<std::string> labels(static_cast<std::size_t>(cb.end));
  for (int i = 1; i <= L.n; ++i) {
    labels[static_cast<std::size_t>(L.x(i))] = "x_" + ts(i);
    labels[static_cast<std::size_t>(L.xbar(i))] = "!x_" + ts(i);
    labels[static_cast<std::size_t>(L.root(i))] = "y_{" + ts(i) + ",0}";
    for (int j = 1; j <= k - 1; ++j) {
      labels[static_cast<std::size_t>(L.child(i, j))] =
          "y_{" + ts(i) + "," + ts(j) + "}";
      for (int rho = 1; rho <= k; ++rho) {
        labels[static_cast<std::size_t>(L.grandchild(i, j, rho))] =
            "y_{" + ts(i) + "," + ts(rho) + "}^{" + ts(j) + "}";
      }
    }
  }
  fill_clause_labels(f, cb, labels);

  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i <= L.n; ++i) {
    edges.push_back({L.x(i), L.xbar(i), Rational(1)});
    edges.push_back({L.x(i), L.root(i), Rational(1)});
    edges.push_back({L.xbar(i), L.root(i), Rational(1)});
    for (int j = 1; j <= k - 1; ++j) {
      edges.push_back({L.root(i), L.child(i, j), Rational(1)});
      for (int rho = 1; rho <= k; ++rho) {
        edges.push_back({L.child(i, j), L.grandchild(i, j, rho), Rational(1)});
      }
    }
  }
  append_clause_edges(f, cb, [&](int l) { return L.lit(l); }, edges);

  GeneratedInstance out;
  out.graph = make_graph(cb.end, std::move(edges));
  out.balls = open_neighborhoods(out.graph);
  out.labels = std::move(labels);
  out.params.k = k;
  return out;
}

// ====================================================================
// bounded-arity formulas -> dense matching
// ====================================================================

namespace {

void require_matching_formula(const CnfFormula& f) {
  validate_cnf(f);
  for (const auto& clause : f.clauses) {
    if (clause.size() > 3) {
      throw InputError("every clause must have at most three literals");
    }
    std::set<int> seen(clause.begin(), clause.end());
    if (seen.size() != clause.size()) {
      throw InputError("repeated literal in a clause");
    }
  }
}

// Variable blocks of 17: the literal pair, one shared hub, and two
// 7-vertex rings. Clause blocks: a selector plus one 4-vertex chain
// per literal occurrence.
struct MatchLayout {
  int n = 0;
  std::vector<int> clause_base;
  int total = 0;

  explicit MatchLayout(const CnfFormula& f) : n(f.variable_count) {
    int at = 17 * n;
    for (const auto& clause : f.clauses) {
      clause_base.push_back(at);
      at += 1 + 4 * static_cast<int>(clause.size());
    }
    total = at;
  }

  int x(int i) const { return (i - 1) * 17; }
  int xbar(int i) const { return x(i) + 1; }
  int hub(int i) const { return x(i) + 2; }
  int ring(int i, int l) const { return x(i) + 2 + l; }
  int ringbar(int i, int l) const { return x(i) + 9 + l; }
  int lit(int l) const { return l > 0 ? x(l) : xbar(-l); }
  int lit_ring1(int l) const { return l > 0 ? ring(l, 1) : ringbar(-l, 1); }
  int z(int j) const { return clause_base[static_cast<std::size_t>(j - 1)]; }
  int chain(int j, int p, int t) const {
    return clause_base[static_cast<std::size_t>(j - 1)] + 1 + 4 * p + (t - 1);
  }
};

}  // namespace

GeneratedInstance threesat_to_dense_matching(const CnfFormula& f) {
  require_matching_formula(f);
  MatchLayout L(f);

  std::vector<std::string> labels(static_cast<std::size_t>(L.total));
  for (int i = 1; i <= L.n; ++i) {
    labels[static_cast<std::size_t>(L.x(i))] = "x_" + ts(i);
    labels[static_cast<std::size_t>(L.xbar(i))] = "!x_" + ts(i);
    labels[static_cast<std::size_t>(L.hub(i))] = "x_" + ts(i) + "^0";
    for (int l = 1; l <= 7; ++l) {
      labels[static_cast<std::size_t>(L.ring(i, l))] =
          "x_" + ts(i) + "^" + ts(l);
      labels[static_cast<std::size_t>(L.ringbar(i, l))] =
          "!x_" + ts(i) + "^" + ts(l);
    }
  }
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    labels[static_cast<std::size_t>(L.z(j))] = "z_" + ts(j);
    const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
    for (int p = 0; p < static_cast<int>(clause.size()); ++p) {
      int lit = clause[static_cast<std::size_t>(p)];
      std::string stem = lit > 0 ? "x_" + ts(lit) : "!x_" + ts(-lit);
      for (int t = 1; t <= 4; ++t) {
        labels[static_cast<std::size_t>(L.chain(j, p, t))] =
            stem + "^{" + ts(j) + "," + ts(t) + "}";
      }
    }
  }

  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i <= L.n; ++i) {
    edges.push_back({L.x(i), L.hub(i), Rational(1)});
    edges.push_back({L.x(i), L.ring(i, 1), Rational(1)});
    edges.push_back({L.ring(i, 1), L.hub(i), Rational(1)});
    edges.push_back({L.xbar(i), L.hub(i), Rational(1)});
    edges.push_back({L.xbar(i), L.ringbar(i, 1), Rational(1)});
    edges.push_back({L.ringbar(i, 1), L.hub(i), Rational(1)});
    for (int l = 1; l <= 6; ++l) {
      edges.push_back({L.ring(i, l), L.ring(i, l + 1), Rational(1)});
      edges.push_back({L.ringbar(i, l), L.ringbar(i, l + 1), Rational(1)});
    }
    edges.push_back({L.ring(i, 7), L.ring(i, 4), Rational(1)});
    edges.push_back({L.ringbar(i, 7), L.ringbar(i, 4), Rational(1)});
  }
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
    for (int p = 0; p < static_cast<int>(clause.size()); ++p) {
      int lit = clause[static_cast<std::size_t>(p)];
      edges.push_back({L.z(j), L.chain(j, p, 1), Rational(1)});
      edges.push_back({L.chain(j, p, 1), L.chain(j, p, 2), Rational(1)});
      edges.push_back({L.chain(j, p, 2), L.chain(j, p, 3), Rational(1)});
      edges.push_back({L.chain(j, p, 3), L.chain(j, p, 4), Rational(1)});
      edges.push_back({L.chain(j, p, 4), L.lit(lit), Rational(1)});
      edges.push_back({L.chain(j, p, 4), L.hub(std::abs(lit)), Rational(1)});
    }
  }

  GeneratedInstance out;
  out.graph = make_graph(L.total, std::move(edges));
  out.balls.reserve(static_cast<std::size_t>(L.total));
  for (int v = 0; v < L.total; ++v) {
    out.balls.push_back(ball(out.graph, v, Rational(2)));
  }
  out.labels = std::move(labels);
  return out;
}

std::vector<std::pair<int, int>> dense_matching_witness(
    const CnfFormula& f, const Assignment& a,
    const std::vector<int>& chosen_literals) {
  require_matching_formula(f);
  if (!evaluate_assignment(f, a)) {
    throw InputError("assignment does not satisfy the formula");
  }
  if (chosen_literals.size() != f.clauses.size()) {
    throw InputError("one chosen literal per clause required");
  }
  auto satisfied = [&](int lit) {
    bool val = a.values[static_cast<std::size_t>(std::abs(lit) - 1)];
    return lit > 0 ? val : !val;
  };
  MatchLayout L(f);
  std::vector<std::pair<int, int>> m;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    m.emplace_back(u, v);
  };
  for (int i = 1; i <= L.n; ++i) {
    add(L.ring(i, 2), L.ring(i, 3));
    add(L.ring(i, 4), L.ring(i, 5));
    add(L.ring(i, 6), L.ring(i, 7));
    add(L.ringbar(i, 2), L.ringbar(i, 3));
    add(L.ringbar(i, 4), L.ringbar(i, 5));
    add(L.ringbar(i, 6), L.ringbar(i, 7));
    if (a.values[static_cast<std::size_t>(i - 1)]) {
      add(L.x(i), L.hub(i));
      add(L.xbar(i), L.ringbar(i, 1));
    } else {
      add(L.xbar(i), L.hub(i));
      add(L.x(i), L.ring(i, 1));
    }
  }
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
    int pick = chosen_literals[static_cast<std::size_t>(j - 1)];
    auto it = std::find(clause.begin(), clause.end(), pick);
    if (it == clause.end()) {
      throw InputError("chosen literal does not appear in its clause");
    }
    if (!satisfied(pick)) throw InputError("chosen literal is not satisfied");
    int p_star = static_cast<int>(it - clause.begin());
    for (int p = 0; p < static_cast<int>(clause.size()); ++p) {
      if (p == p_star) {
        add(L.z(j), L.chain(j, p, 1));
        add(L.chain(j, p, 2), L.chain(j, p, 3));
      } else {
        add(L.chain(j, p, 1), L.chain(j, p, 2));
        add(L.chain(j, p, 3), L.chain(j, p, 4));
      }
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<std::pair<int, int>> dense_matching_witness(const CnfFormula& f,
                                                        const Assignment& a) {
  require_matching_formula(f);
  if (!evaluate_assignment(f, a)) {
    throw InputError("assignment does not satisfy the formula");
  }
  std::vector<int> chosen;
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      bool val = a.values[static_cast<std::size_t>(std::abs(lit) - 1)];
      if (lit > 0 ? val : !val) {
        chosen.push_back(lit);
        break;
      }
    }
  }
  return dense_matching_witness(f, a, chosen);
}

Assignment dense_matching_extract(const CnfFormula& f,
                                  const std::vector<std::pair<int, int>>& m) {
  GeneratedInstance inst = threesat_to_dense_matching(f);
  int density = matching_density(inst.graph, inst.balls, m);
  if (density < 2) throw InputError("matching density below two");
  MatchLayout L(f);
  std::set<std::pair<int, int>> in_matching;
  for (auto [u, v] : m) in_matching.insert(std::minmax(u, v));
  Assignment a;
  a.values.assign(static_cast<std::size_t>(f.variable_count), false);
  for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
    const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
    for (int p = 0; p < static_cast<int>(clause.size()); ++p) {
      int lit = clause[static_cast<std::size_t>(p)];
      if (lit <= 0) continue;
      if (in_matching.count(std::minmax(L.z(j), L.chain(j, p, 1)))) {
        a.values[static_cast<std::size_t>(lit - 1)] = true;
      }
    }
  }
  if (!evaluate_assignment(f, a)) {
    throw InputError("matching does not decode to a satisfying assignment");
  }
  return a;
}

// ====================================================================
// clique -> shortest-path hub structure
// ====================================================================

namespace {

// One gadget copy: four length-m unit paths (u, v, a, b) with their
// endpoint connectors.
struct HubGadget {
  std::vector<int> u, v, a, b;
  int u0a = 0, uMa = 0, a0u = 0, aMu = 0;
  int u0v = 0, uMv = 0, v0u = 0, vMu = 0;
  int u0b = 0, uMb = 0, b0u = 0, bMu = 0;
  int aMv = 0, v0a = 0, vMb = 0, b0v = 0;
};

class HubBuilder {
 public:
  HubBuilder(const WeightedGraph& h, int k, int c) : k_(k), c_(c) {
    if (k < 2) throw InputError("clique size k must be at least 2");
    if (c < 1) throw InputError("copy count must be at least 1");
    if (h.edges.empty()) {
      throw InputError("the source graph needs at least one edge");
    }
    nbrs_.resize(static_cast<std::size_t>(h.n));
    for (const auto& e : h.edges) {
      directed_.emplace_back(e.u, e.v);
      directed_.emplace_back(e.v, e.u);
      nbrs_[static_cast<std::size_t>(e.u)].push_back(e.v);
      nbrs_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::sort(directed_.begin(), directed_.end());
    for (auto& lst : nbrs_) std::sort(lst.begin(), lst.end());
    m_ = static_cast<int>(directed_.size());
    for (int t = 0; t < m_; ++t) tau_[directed_[static_cast<std::size_t>(t)]] = t + 1;
    r_ = Rational(mpq_class(mpz_class(1) << static_cast<unsigned>(m_)));

    make_vertices(h);
    make_edges();
  }

  GeneratedInstance assemble() const {
    GeneratedInstance out;
    out.graph = make_graph(static_cast<int>(labels_.size()), edges_);
    out.labels = labels_;
    out.params.k = k_;
    out.params.c = c_;
    out.params.r = r_;
    long long kk = k_;
    out.params.k_prime =
        4LL * c_ * kk * (kk - 1) + kk * (kk - 1) / 2 + kk + 3;
    return out;
  }

  const HubGadget& gadget(int i, int j, int lambda) const {
    auto it = gadgets_.find({i, j, lambda});
    if (it == gadgets_.end()) {
      throw InputError("no such gadget copy");
    }
    return it->second;
  }

  // a-side position t in 2..m+1; m+1 names the synchronizing connector
  int a_up(const HubGadget& g, int t) const {
    return t <= m_ ? g.a[static_cast<std::size_t>(t - 1)] : g.aMv;
  }
  // b-side position t in 0..m-1; 0 names the synchronizing connector
  int b_down(const HubGadget& g, int t) const {
    return t >= 1 ? g.b[static_cast<std::size_t>(t - 1)] : g.b0v;
  }

  int k_ = 0, c_ = 0, m_ = 0;
  Rational r_;
  std::vector<std::pair<int, int>> directed_;
  std::map<std::pair<int, int>, int> tau_;
  std::vector<std::vector<int>> nbrs_;
  std::map<std::tuple<int, int, int>, HubGadget> gadgets_;
  int psi_ = 0, psi1_ = 0, psi2_ = 0;
  int psia_ = 0, psia1_ = 0, psia2_ = 0;
  int psib_ = 0, psib1_ = 0, psib2_ = 0;
  std::map<std::tuple<int, int, int, int>, int> alpha_;  // (i, j, x, y), i < j
  std::map<std::pair<int, int>, int> beta_;              // (i, x)
  std::vector<std::string> labels_;
  std::vector<WeightedGraph::Edge> edges_;

 private:
  int add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<int>(labels_.size()) - 1;
  }
  void link(int u, int v, Rational len) {
    edges_.push_back({u, v, std::move(len)});
  }

  void make_vertices(const WeightedGraph& h) {
    for (int i = 1; i <= k_; ++i) {
      for (int j = 1; j <= k_; ++j) {
        if (i == j) continue;
        for (int lam = 1; lam <= c_; ++lam) {
          HubGadget g;
          std::string tag = "_{" + ts(i) + "," + ts(j) + "}";
          std::string copy = "#" + ts(lam);
          const char* names = "uvab";
          std::vector<int>* paths[4] = {&g.u, &g.v, &g.a, &g.b};
          for (int p = 0; p < 4; ++p) {
            for (int t = 1; t <= m_; ++t) {
              paths[p]->push_back(
                  add(std::string(1, names[p]) + tag + "^{" + ts(t) + "}" + copy));
            }
          }
          g.u0a = add("u" + tag + "^{0,a}" + copy);
          g.uMa = add("u" + tag + "^{m+1,a}" + copy);
          g.a0u = add("a" + tag + "^{0,u}" + copy);
          g.aMu = add("a" + tag + "^{m+1,u}" + copy);
          g.u0v = add("u" + tag + "^{0,v}" + copy);
          g.uMv = add("u" + tag + "^{m+1,v}" + copy);
          g.v0u = add("v" + tag + "^{0,u}" + copy);
          g.vMu = add("v" + tag + "^{m+1,u}" + copy);
          g.u0b = add("u" + tag + "^{0,b}" + copy);
          g.uMb = add("u" + tag + "^{m+1,b}" + copy);
          g.b0u = add("b" + tag + "^{0,u}" + copy);
          g.bMu = add("b" + tag + "^{m+1,u}" + copy);
          g.aMv = add("a" + tag + "^{m+1,v}" + copy);
          g.v0a = add("v" + tag + "^{0,a}" + copy);
          g.vMb = add("v" + tag + "^{m+1,b}" + copy);
          g.b0v = add("b" + tag + "^{0,v}" + copy);
          gadgets_[{i, j, lam}] = std::move(g);
        }
      }
    }
    psi_ = add("psi");
    psi1_ = add("psi'");
    psi2_ = add("psi''");
    psia_ = add("psi_a");
    psia1_ = add("psi_a'");
    psia2_ = add("psi_a''");
    psib_ = add("psi_b");
    psib1_ = add("psi_b'");
    psib2_ = add("psi_b''");
    for (int i = 1; i <= k_; ++i) {
      for (int j = i + 1; j <= k_; ++j) {
        for (auto [x, y] : directed_) {
          alpha_[{i, j, x, y}] = add("alpha_{" + ts(i) + "," + ts(j) +
                                     "}^{(" + ts(x) + "," + ts(y) + ")}");
        }
      }
    }
    for (int i = 1; i <= k_; ++i) {
      for (int x = 0; x < h.n; ++x) {
        if (nbrs_[static_cast<std::size_t>(x)].empty()) continue;
        beta_[{i, x}] = add("beta_" + ts(i) + "^{" + ts(x) + "}");
      }
    }
  }

  void make_edges() {
    Rational one(1);
    Rational half_r = r_ / Rational(2);
    Rational bridge = r_ - Rational(m_) + one;       // outer connectors
    Rational sync = r_ - Rational(2 * m_) + Rational(2);  // inner connectors

    for (const auto& [key, g] : gadgets_) {
      (void)key;
      for (const auto* path : {&g.u, &g.v, &g.a, &g.b}) {
        for (int t = 0; t + 1 < m_; ++t) {
          link((*path)[static_cast<std::size_t>(t)],
               (*path)[static_cast<std::size_t>(t + 1)], one);
        }
      }
      struct Side {
        const std::vector<int>* zp;
        int u0z, uMz, z0u, zMu;
      };
      Side sides[3] = {{&g.a, g.u0a, g.uMa, g.a0u, g.aMu},
                       {&g.v, g.u0v, g.uMv, g.v0u, g.vMu},
                       {&g.b, g.u0b, g.uMb, g.b0u, g.bMu}};
      for (const auto& s : sides) {
        link(g.u.front(), s.u0z, one);
        link(g.u.back(), s.uMz, one);
        link(s.zp->front(), s.z0u, one);
        link(s.zp->back(), s.zMu, one);
        link(s.uMz, s.z0u, bridge);
        link(s.zMu, s.u0z, bridge);
      }
      link(g.a.back(), g.aMv, one);
      link(g.v.front(), g.v0a, one);
      link(g.v.back(), g.vMb, one);
      link(g.b.front(), g.b0v, one);
      link(g.aMv, g.v0a, sync);
      link(g.vMb, g.b0v, sync);
    }

    link(psi_, psi1_, r_);
    link(psi_, psi2_, r_);
    link(psia_, psia1_, r_);
    link(psia_, psia2_, r_);
    link(psib_, psib1_, r_);
    link(psib_, psib2_, r_);
    for (const auto& [key, g] : gadgets_) {
      (void)key;
      for (int v : {g.a0u, g.aMu, g.b0u, g.bMu, g.u0a, g.uMa, g.u0b, g.uMb}) {
        link(psi_, v, half_r);
      }
    }
    for (const auto& [key, id] : alpha_) {
      (void)key;
      link(psi_, id, half_r);
    }
    for (const auto& [key, id] : beta_) {
      (void)key;
      link(psi_, id, half_r);
    }

    for (const auto& [key, id] : alpha_) {
      auto [i, j, x, y] = key;
      int t_xy = tau_.at({x, y});
      int t_yx = tau_.at({y, x});
      for (int lam = 1; lam <= c_; ++lam) {
        link(id, a_up(gadget(i, j, lam), t_xy + 1), Rational(m_));
        link(id, a_up(gadget(j, i, lam), t_yx + 1), Rational(m_));
      }
    }
    for (const auto& [key, g] : gadgets_) {
      (void)key;
      for (auto [x, y] : directed_) {
        link(psia_, a_up(g, tau_.at({x, y}) + 1), Rational(m_ - 1));
      }
    }

    for (const auto& [key, id] : beta_) {
      auto [i, x] = key;
      const auto& nb = nbrs_[static_cast<std::size_t>(x)];
      int d = static_cast<int>(nb.size()) - 1;
      int t0 = tau_.at({x, nb.front()});
      for (int j = 1; j <= k_; ++j) {
        if (j == i) continue;
        for (int lam = 1; lam <= c_; ++lam) {
          link(id, b_down(gadget(i, j, lam), t0 - 1), Rational(m_ + d));
        }
      }
    }
    for (const auto& [key, g] : gadgets_) {
      (void)key;
      for (int x = 0; x < static_cast<int>(nbrs_.size()); ++x) {
        const auto& nb = nbrs_[static_cast<std::size_t>(x)];
        if (nb.empty()) continue;
        int d = static_cast<int>(nb.size()) - 1;
        int td = tau_.at({x, nb.back()});
        link(psib_, b_down(g, td - 1), Rational(m_ + d - 1));
      }
    }
  }
};

PathRecord make_record(VertexSet vs, int e1, int e2, Rational len) {
  std::sort(vs.begin(), vs.end());
  if (e1 > e2) std::swap(e1, e2);
  PathRecord rec;
  rec.vertex_set = std::move(vs);
  rec.endpoints = {e1, e2};
  rec.length = std::move(len);
  return rec;
}

void require_gadget_coords(const HubBuilder& b, int i, int j, int lambda) {
  if (i < 1 || i > b.k_ || j < 1 || j > b.k_ || i == j || lambda < 1 ||
      lambda > b.c_) {
    throw InputError("gadget coordinates out of range");
  }
}

}  // namespace

GeneratedInstance clique_to_rhd(const WeightedGraph& h, int k, int c) {
  return HubBuilder(h, k, c).assemble();
}

VertexSet rhd_witness_from_clique(const WeightedGraph& h,
                                  const VertexSet& clique, int k, int c) {
  HubBuilder b(h, k, c);
  VertexSet w = clique;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (static_cast<int>(w.size()) != k) {
    throw InputError("clique must list exactly k distinct vertices");
  }
  if (w.front() < 0 || w.back() >= h.n) {
    throw InputError("clique vertex out of range");
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      if (!b.tau_.count({w[p], w[q]})) {
        throw InputError("clique vertices must be pairwise adjacent");
      }
    }
  }
  VertexSet out;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      int t = b.tau_.at({w[static_cast<std::size_t>(i - 1)],
                         w[static_cast<std::size_t>(j - 1)]});
      for (int lam = 1; lam <= c; ++lam) {
        const HubGadget& g = b.gadget(i, j, lam);
        out.push_back(g.u[static_cast<std::size_t>(t - 1)]);
        out.push_back(g.v[static_cast<std::size_t>(t - 1)]);
        out.push_back(g.a[static_cast<std::size_t>(t - 1)]);
        out.push_back(g.b[static_cast<std::size_t>(t - 1)]);
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      out.push_back(b.alpha_.at({i, j, w[static_cast<std::size_t>(i - 1)],
                                 w[static_cast<std::size_t>(j - 1)]}));
    }
  }
  for (int i = 1; i <= k; ++i) {
    out.push_back(b.beta_.at({i, w[static_cast<std::size_t>(i - 1)]}));
  }
  out.push_back(b.psi_);
  out.push_back(b.psia_);
  out.push_back(b.psib_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathRecord> rhd_gadget_paths(const WeightedGraph& h, int k, int c,
                                         int i, int j, int lambda) {
  HubBuilder b(h, k, c);
  require_gadget_coords(b, i, j, lambda);
  const HubGadget& g = b.gadget(i, j, lambda);
  Rational len = b.r_ + Rational(1);
  std::vector<PathRecord> out;

  auto with = [](const std::vector<int>& path, int extra1, int extra2) {
    VertexSet vs(path.begin(), path.end());
    vs.push_back(extra1);
    vs.push_back(extra2);
    return vs;
  };
  out.push_back(make_record(with(g.u, g.uMa, g.a0u), g.u.front(), g.a0u, len));
  out.push_back(make_record(with(g.a, g.uMa, g.a0u), g.uMa, g.a.back(), len));
  out.push_back(make_record(with(g.a, g.aMu, g.u0a), g.a.front(), g.u0a, len));
  out.push_back(make_record(with(g.v, g.uMv, g.v0u), g.uMv, g.v.back(), len));
  out.push_back(make_record(with(g.v, g.vMu, g.u0v), g.v.front(), g.u0v, len));
  out.push_back(make_record(with(g.b, g.bMu, g.u0b), g.b.front(), g.u0b, len));
  out.push_back(make_record(with(g.b, g.uMb, g.b0u), g.uMb, g.b.back(), len));
  out.push_back(make_record(with(g.u, g.bMu, g.u0b), g.bMu, g.u.back(), len));
  return out;
}

PathRecord rhd_selector_path(const WeightedGraph& h, int k, int c, int i,
                             int j, int lambda, std::pair<int, int> xy) {
  HubBuilder b(h, k, c);
  require_gadget_coords(b, i, j, lambda);
  auto it = b.alpha_.find({i, j, xy.first, xy.second});
  if (it == b.alpha_.end()) {
    throw InputError("no selector for this pair and edge");
  }
  const HubGadget& g = b.gadget(i, j, lambda);
  int t = b.tau_.at(xy);
  VertexSet vs{it->second};
  for (int s = t + 1; s <= b.m_; ++s) {
    vs.push_back(g.a[static_cast<std::size_t>(s - 1)]);
  }
  vs.push_back(g.aMv);
  vs.push_back(g.v0a);
  for (int s = 1; s <= t - 1; ++s) {
    vs.push_back(g.v[static_cast<std::size_t>(s - 1)]);
  }
  int tail = t >= 2 ? g.v[static_cast<std::size_t>(t - 2)] : g.v0a;
  return make_record(std::move(vs), it->second, tail, b.r_ + Rational(1));
}

PathRecord rhd_anchor_path(const WeightedGraph& h, int k, int c, int i, int j,
                           int lambda, int x) {
  HubBuilder b(h, k, c);
  require_gadget_coords(b, i, j, lambda);
  auto it = b.beta_.find({i, x});
  if (it == b.beta_.end()) throw InputError("no anchor for this index pair");
  const HubGadget& g = b.gadget(i, j, lambda);
  const auto& nb = b.nbrs_[static_cast<std::size_t>(x)];
  int t0 = b.tau_.at({x, nb.front()});
  int td = b.tau_.at({x, nb.back()});
  VertexSet vs{it->second};
  for (int s = 1; s <= t0 - 1; ++s) {
    vs.push_back(g.b[static_cast<std::size_t>(s - 1)]);
  }
  vs.push_back(g.b0v);
  vs.push_back(g.vMb);
  for (int s = td + 1; s <= b.m_; ++s) {
    vs.push_back(g.v[static_cast<std::size_t>(s - 1)]);
  }
  int tail = td <= b.m_ - 1 ? g.v[static_cast<std::size_t>(td)] : g.vMb;
  return make_record(std::move(vs), it->second, tail, b.r_ + Rational(1));
}

}  // namespace sparsehs
