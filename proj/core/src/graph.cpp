#include "sparsehs/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "sparsehs/errors.hpp"

namespace sparsehs {

WeightedGraph make_graph(int n, std::vector<WeightedGraph::Edge> edges) {
  if (n < 0) throw InputError("graph with negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.length <= Rational(0)) {
      throw InputError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} with non-positive length");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
      throw InputError("repeated edge {" + std::to_string(edges[i].u) + "," +
                       std::to_string(edges[i].v) + "}");
    }
  }
  WeightedGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : g.edges) {
    g.adjacency[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.length);
    g.adjacency[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.length);
  }
  for (auto& row : g.adjacency) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return g;
}

namespace {

std::vector<std::optional<Rational>> dijkstra(const WeightedGraph& g,
                                              int source) {
  std::vector<std::optional<Rational>> dist(
      static_cast<std::size_t>(g.n));
  using Item = std::pair<Rational, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = Rational(0);
  heap.emplace(Rational(0), source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    const auto& best = dist[static_cast<std::size_t>(v)];
    if (best && *best < d) continue;  // stale entry
    for (const auto& [to, len] : g.adjacency[static_cast<std::size_t>(v)]) {
      Rational candidate = d + len;
      auto& slot = dist[static_cast<std::size_t>(to)];
      if (!slot || candidate < *slot) {
        slot = candidate;
        heap.emplace(std::move(candidate), to);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<std::optional<Rational>>> all_pairs_distances(
    const WeightedGraph& g) {
  std::vector<std::vector<std::optional<Rational>>> matrix;
  matrix.reserve(static_cast<std::size_t>(g.n));
  for (int s = 0; s < g.n; ++s) matrix.push_back(dijkstra(g, s));
  return matrix;
}

VertexSet ball(const WeightedGraph& g, int center, const Rational& r) {
  if (center < 0 || center >= g.n) {
    throw InputError("ball center outside [0, " + std::to_string(g.n) + ")");
  }
  if (r < Rational(0)) throw InputError("ball with negative radius");
  auto dist = dijkstra(g, center);
  VertexSet members;
  for (int v = 0; v < g.n; ++v) {
    const auto& d = dist[static_cast<std::size_t>(v)];
    if (d && *d <= r) members.push_back(v);
  }
  return members;
}

namespace {

/// Enumerates the vertex sequences of all shortest source-target paths
/// by walking the shortest-path predecessor relation backwards from
/// the target. Invokes emit(set) with the sorted vertex set of each
/// complete path; emit returns false to abort, which propagates out.
/// Positive edge lengths guarantee every backward walk reaches the
/// source, so total work is proportional to the paths emitted.
bool walk_shortest_paths(const WeightedGraph& g,
                         const std::vector<std::optional<Rational>>& dist,
                         int source, int target,
                         const std::function<bool(VertexSet)>& emit) {
  VertexSet stack{target};
  std::function<bool(int)> recurse = [&](int v) -> bool {
    if (v == source) {
      VertexSet set = stack;
      std::sort(set.begin(), set.end());
      return emit(std::move(set));
    }
    const auto& dv = dist[static_cast<std::size_t>(v)];
    for (const auto& [u, len] : g.adjacency[static_cast<std::size_t>(v)]) {
      const auto& du = dist[static_cast<std::size_t>(u)];
      if (!du || !dv || *du + len != *dv) continue;
      stack.push_back(u);
      bool keep_going = recurse(u);
      stack.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return recurse(target);
}

}  // namespace

PathFamily enumerate_path_family(const WeightedGraph& g, const Rational& r,
                                 std::uint64_t cap) {
  if (r <= Rational(0)) throw InputError("path family radius must be positive");
  if (cap == 0) throw InputError("path family cap must be positive");
  PathFamily family;
  family.radius = r;
  Rational upper = r + r;
  std::set<VertexSet> seen;
  for (int s = 0; s < g.n && !family.truncated; ++s) {
    auto dist = dijkstra(g, s);
    for (int t = s + 1; t < g.n && !family.truncated; ++t) {
      const auto& d = dist[static_cast<std::size_t>(t)];
      if (!d || *d <= r || *d > upper) continue;
      bool complete = walk_shortest_paths(
          g, dist, s, t, [&](VertexSet set) {
            auto [it, inserted] = seen.insert(std::move(set));
            if (inserted) {
              if (seen.size() > cap) {
                seen.erase(it);
                return false;
              }
              family.paths.push_back(PathRecord{*it, {s, t}, *d});
            }
            return true;
          });
      if (!complete) family.truncated = true;
    }
  }
  return family;
}

std::vector<Rational> relevant_radii(const WeightedGraph& g) {
  auto matrix = all_pairs_distances(g);
  std::set<Rational> lengths;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      const auto& d = matrix[static_cast<std::size_t>(u)]
                            [static_cast<std::size_t>(v)];
      if (d) lengths.insert(*d);
    }
  }
  if (lengths.empty()) return {};
  const Rational& longest = *lengths.rbegin();
  std::set<Rational> radii;
  for (const Rational& len : lengths) {
    radii.insert(len / Rational(2));
    radii.insert(len);
  }
  std::vector<Rational> out;
  for (const Rational& r : radii) {
    if (r < longest) out.push_back(r);
  }
  return out;
}

int matching_density(const WeightedGraph& g,
                     const std::vector<VertexSet>& balls,
                     const std::vector<std::pair<int, int>>& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.n), false);
  for (auto [u, v] : m) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.n) throw InputError("matching endpoint out of range");
    bool is_edge = std::binary_search(
        g.edges.begin(), g.edges.end(), std::pair(u, v),
        [](const auto& a, const auto& b) {
          auto key = [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>,
                                         WeightedGraph::Edge>) {
              return std::pair(x.u, x.v);
            } else {
              return x;
            }
          };
          return key(a) < key(b);
        });
    if (!is_edge) {
      throw InputError("matching pair {" + std::to_string(u) + "," +
                       std::to_string(v) + "} is not an edge");
    }
    if (used[static_cast<std::size_t>(u)] ||
        used[static_cast<std::size_t>(v)]) {
      throw InputError("matching reuses a vertex");
    }
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] =
        true;
  }
  if (balls.empty()) return 0;
  int density = -1;
  for (const auto& raw : balls) {
    VertexSet b = detail::canonical_vertex_set(raw, g.n, "ball");
    int inside = 0;
    for (auto [u, v] : m) {
      if (std::binary_search(b.begin(), b.end(), u) &&
          std::binary_search(b.begin(), b.end(), v)) {
        ++inside;
      }
    }
    if (density < 0 || inside < density) density = inside;
  }
  return density;
}

SetSystemInstance vertex_cover_instance(const WeightedGraph& g,
                                        const std::vector<VertexSet>& balls) {
  std::vector<VertexSet> family_f;
  family_f.reserve(g.edges.size());
  for (const auto& e : g.edges) family_f.push_back({e.u, e.v});
  return make_set_system(g.n, family_f, balls);
}

}  // namespace sparsehs
