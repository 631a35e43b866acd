#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsehs/rational.hpp"
#include "sparsehs/set_system.hpp"

namespace sparsehs {

/// An undirected simple graph with positive rational edge lengths.
/// Vertices are 0..n-1. Edges are stored canonically: endpoints
/// ordered u < v, list sorted lexicographically. Build through
/// make_graph; treat as immutable afterwards.
struct WeightedGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    Rational length;
  };

  int n = 0;
  std::vector<Edge> edges;
  // adjacency[v] = (neighbor, length), sorted by neighbor id
  std::vector<std::vector<std::pair<int, Rational>>> adjacency;
};

/// Validates (ids in range, u != v, lengths > 0, no repeated edge) and
/// canonicalizes. Throws InputError on violations.
WeightedGraph make_graph(int n, std::vector<WeightedGraph::Edge> edges);

/// One shortest path, recorded by its vertex set. endpoints = (s, t)
/// with s < t; length = shortest-path distance between them.
struct PathRecord {
  VertexSet vertex_set;
  std::pair<int, int> endpoints{0, 0};
  Rational length;
};

/// All shortest paths whose length lies in (radius, 2*radius],
/// deduplicated by vertex set. truncated is set when more distinct
/// sets exist than the enumeration cap admits (family incomplete).
struct PathFamily {
  Rational radius;
  std::vector<PathRecord> paths;
  bool truncated = false;
};

/// Shortest-path distance matrix; std::nullopt marks disconnected
/// pairs. Symmetric with zero diagonal.
std::vector<std::vector<std::optional<Rational>>> all_pairs_distances(
    const WeightedGraph& g);

/// Closed metric ball: every vertex at distance <= r from center
/// (center included for r >= 0). Throws InputError on a bad center or
/// negative r.
VertexSet ball(const WeightedGraph& g, int center, const Rational& r);

/// Enumerates every shortest path of length in (r, 2r], deduplicated
/// by vertex set, endpoint pairs visited in ascending (s, t) order.
/// cap bounds the number of recorded sets and the total enumeration
/// work; exceeding either sets truncated and stops early. Throws
/// InputError when r <= 0 or cap == 0.
PathFamily enumerate_path_family(const WeightedGraph& g, const Rational& r,
                                 std::uint64_t cap = 1000000);

/// The radii at which the family of (r, 2r] shortest paths can change:
/// all half-lengths and full lengths of shortest paths, strictly below
/// the largest finite length, ascending. Empty when no two vertices
/// are connected.
std::vector<Rational> relevant_radii(const WeightedGraph& g);

/// A matching together with the smallest number of matching edges
/// inside any ball of the evaluated collection.
struct MatchingSolution {
  std::vector<std::pair<int, int>> edges;
  int density = 0;
};

/// min over balls of |{e in m : both endpoints in ball}|; 0 when balls
/// is empty. Throws InputError when m is not a matching in g (repeated
/// endpoint, or a pair that is not an edge) or a ball id is out of
/// range.
int matching_density(const WeightedGraph& g,
                     const std::vector<VertexSet>& balls,
                     const std::vector<std::pair<int, int>>& m);

/// The hitting-set view of a cover problem on g: family_f is the edge
/// set (each edge as a 2-element set), family_b the given balls.
SetSystemInstance vertex_cover_instance(const WeightedGraph& g,
                                        const std::vector<VertexSet>& balls);

}  // namespace sparsehs
