#include "sparsehs/twosat.hpp"

#include <algorithm>
#include <vector>

#include "sparsehs/errors.hpp"

namespace sparsehs {

namespace {

// Literal nodes: variable i (0-based) has its negative literal at 2i
// and its positive literal at 2i+1, so the node scan visits negations
// first and unconstrained variables settle on false.
int literal_node(int lit) {
  int var = std::abs(lit) - 1;
  return 2 * var + (lit > 0 ? 1 : 0);
}

/// Iterative Tarjan; components are numbered in completion order,
/// which is reverse topological order of the condensation.
std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& graph) {
  const int n = static_cast<int>(graph.size());
  std::vector<int> comp(n, -1), low(n, 0), order(n, -1), scc_stack;
  std::vector<std::pair<int, std::size_t>> call_stack;
  std::vector<bool> on_stack(n, false);
  int next_order = 0, next_comp = 0;
  for (int root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    call_stack.emplace_back(root, 0);
    while (!call_stack.empty()) {
      auto& [v, edge_index] = call_stack.back();
      if (edge_index == 0) {
        order[v] = low[v] = next_order++;
        scc_stack.push_back(v);
        on_stack[v] = true;
      }
      if (edge_index < graph[static_cast<std::size_t>(v)].size()) {
        int to = graph[static_cast<std::size_t>(v)][edge_index++];
        if (order[to] == -1) {
          call_stack.emplace_back(to, 0);
        } else if (on_stack[to]) {
          low[v] = std::min(low[v], order[to]);
        }
        continue;
      }
      if (low[v] == order[v]) {
        while (true) {
          int w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      int finished = v;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        low[call_stack.back().first] =
            std::min(low[call_stack.back().first], low[finished]);
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<Assignment> twosat_solve(const CnfFormula& f) {
  validate_cnf(f);
  for (const auto& clause : f.clauses) {
    if (clause.size() > 2) {
      throw InputError("clause of width " + std::to_string(clause.size()) +
                       " in width-2 solver");
    }
  }
  const int nodes = 2 * f.variable_count;
  std::vector<std::vector<int>> implications(
      static_cast<std::size_t>(nodes));
  auto add_implication = [&](int from_lit, int to_lit) {
    implications[static_cast<std::size_t>(literal_node(from_lit))].push_back(
        literal_node(to_lit));
  };
  for (const auto& clause : f.clauses) {
    int a = clause[0];
    int b = clause.size() == 2 ? clause[1] : clause[0];
    add_implication(-a, b);
    add_implication(-b, a);
  }
  std::vector<int> comp = strongly_connected_components(implications);
  Assignment assignment;
  assignment.values.resize(static_cast<std::size_t>(f.variable_count));
  for (int i = 0; i < f.variable_count; ++i) {
    int neg = comp[static_cast<std::size_t>(2 * i)];
    int pos = comp[static_cast<std::size_t>(2 * i + 1)];
    if (neg == pos) return std::nullopt;
    // A literal holds when its node's component comes earlier in the
    // completion order, i.e. lies deeper toward the sinks.
    assignment.values[static_cast<std::size_t>(i)] = pos < neg;
  }
  return assignment;
}

CnfFormula sparse_vc_k1_formula(const WeightedGraph& g,
                                const std::vector<VertexSet>& balls) {
  CnfFormula f;
  f.variable_count = g.n;
  for (const auto& e : g.edges) {
    f.clauses.push_back({e.u + 1, e.v + 1});
  }
  for (const auto& raw : balls) {
    VertexSet b = detail::canonical_vertex_set(raw, g.n, "ball");
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        f.clauses.push_back({-(b[i] + 1), -(b[j] + 1)});
      }
    }
  }
  return f;
}

std::optional<VertexSet> solve_sparse_vc_k1(const WeightedGraph& g,
                                            const std::vector<VertexSet>& balls) {
  auto assignment = twosat_solve(sparse_vc_k1_formula(g, balls));
  if (!assignment) return std::nullopt;
  VertexSet cover;
  for (int v = 0; v < g.n; ++v) {
    if (assignment->values[static_cast<std::size_t>(v)]) cover.push_back(v);
  }
  return cover;
}

}  // namespace sparsehs
