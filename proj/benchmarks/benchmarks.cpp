// Micro-benchmarks for the hot paths: shortest-path machinery, path
// enumeration, the rational simplex, the hitting-set search, and the
// implication-graph solver.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "sparsehs/exact.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/lp.hpp"
#include "sparsehs/set_system.hpp"
#include "sparsehs/twosat.hpp"

namespace {

using namespace sparsehs;

std::uint64_t mix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Ring plus deterministic chords: connected, irregular, reproducible.
WeightedGraph ring_with_chords(int n, int chords, std::uint64_t seed) {
  std::vector<WeightedGraph::Edge> edges;
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, (v + 1) % n, Rational(1)});
  }
  std::uint64_t state = seed;
  int added = 0;
  while (added < chords) {
    int u = static_cast<int>(mix(state) % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(mix(state) % static_cast<std::uint64_t>(n));
    if (u == v || (u + 1) % n == v || (v + 1) % n == u) continue;
    bool duplicate = false;
    for (const auto& e : edges) {
      if ((e.u == std::min(u, v) && e.v == std::max(u, v))) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    edges.push_back({u, v, Rational(1 + static_cast<int>(mix(state) % 3), 2)});
    ++added;
  }
  return make_graph(n, std::move(edges));
}

SetSystemInstance random_hitting_instance(int n, int f_count, int b_count,
                                          std::uint64_t seed) {
  std::uint64_t state = seed;
  auto random_set = [&](bool nonempty) {
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (mix(state) % 100 < 30) s.push_back(v);
    }
    if (nonempty && s.empty()) {
      s.push_back(static_cast<int>(mix(state) % static_cast<std::uint64_t>(n)));
    }
    return s;
  };
  std::vector<VertexSet> family_f, family_b;
  for (int i = 0; i < f_count; ++i) family_f.push_back(random_set(true));
  for (int i = 0; i < b_count; ++i) family_b.push_back(random_set(false));
  return make_set_system(n, family_f, family_b);
}

void BM_AllPairsDistances(benchmark::State& state) {
  WeightedGraph g = ring_with_chords(64, 32, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_pairs_distances(g));
  }
}
BENCHMARK(BM_AllPairsDistances);

void BM_PathFamily(benchmark::State& state) {
  WeightedGraph g = ring_with_chords(24, 10, 11);
  Rational r(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_path_family(g, r));
  }
}
BENCHMARK(BM_PathFamily);

void BM_CoverRelaxation(benchmark::State& state) {
  WeightedGraph g = ring_with_chords(25, 12, 13);
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
  for (auto _ : state) {
    LinearProgram lp = build_sparse_vc_relaxation(g, balls);
    benchmark::DoNotOptimize(solve_lp(lp));
  }
}
BENCHMARK(BM_CoverRelaxation);

void BM_HittingSearch(benchmark::State& state) {
  SetSystemInstance inst = random_hitting_instance(16, 18, 10, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_sparse_hs_exact(inst));
  }
}
BENCHMARK(BM_HittingSearch);

void BM_Implications(benchmark::State& state) {
  CnfFormula f;
  f.variable_count = 1500;
  for (int i = 1; i < f.variable_count; ++i) {
    f.clauses.push_back({-i, i + 1});
  }
  f.clauses.push_back({1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(twosat_solve(f));
  }
}
BENCHMARK(BM_Implications);

}  // namespace

BENCHMARK_MAIN();
