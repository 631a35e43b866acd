#include "sparsehs/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "sparsehs/errors.hpp"
#include "sparsehs/lp.hpp"

namespace sparsehs {

namespace {

const Rational kHalf(1, 2);

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

VertexSet round_up_at_half(const std::vector<Rational>& assignment, int n) {
  VertexSet taken;
  for (int v = 0; v < n; ++v) {
    if (assignment[static_cast<std::size_t>(v)] >= kHalf) taken.push_back(v);
  }
  return taken;
}

int worst_overlap(const std::vector<VertexSet>& balls, const VertexSet& h) {
  int worst = 0;
  for (const auto& b : balls) {
    VertexSet overlap;
    std::set_intersection(h.begin(), h.end(), b.begin(), b.end(),
                          std::back_inserter(overlap));
    worst = std::max(worst, static_cast<int>(overlap.size()));
  }
  return worst;
}

}  // namespace

HittingSolution sparse_vc_2approx(const WeightedGraph& g,
                                  const std::vector<VertexSet>& balls) {
  std::vector<VertexSet> canonical;
  canonical.reserve(balls.size());
  for (const auto& raw : balls) {
    canonical.push_back(detail::canonical_vertex_set(raw, g.n, "ball"));
  }
  LpResult lp = solve_lp(build_sparse_vc_relaxation(g, canonical));
  if (lp.status != LpStatus::Optimal) {
    throw Error("vertex-cover relaxation did not solve to optimality");
  }
  HittingSolution solution;
  solution.members = round_up_at_half(lp.assignment, g.n);
  solution.sparseness = worst_overlap(canonical, solution.members);
  return solution;
}

HittingSolution fair_vc_approx(const WeightedGraph& g) {
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

  std::optional<HittingSolution> best;
  std::map<VertexSet, HittingSolution> by_forced_set;
  for (int k_star = 1; k_star <= g.n; ++k_star) {
    VertexSet forced;
    for (int v = 0; v < g.n; ++v) {
      if (static_cast<int>(g.adjacency[static_cast<std::size_t>(v)].size()) >
          k_star) {
        forced.push_back(v);
      }
    }
    HittingSolution candidate;
    if (auto cached = by_forced_set.find(forced);
        cached != by_forced_set.end()) {
      candidate = cached->second;
    } else {
      LpResult lp = solve_lp(build_fair_vc_relaxation(g, k_star));
      if (lp.status != LpStatus::Optimal) {
        throw Error("degree-guess relaxation did not solve to optimality");
      }
      VertexSet cover = round_up_at_half(lp.assignment, g.n);
      // Drop vertices whose whole closed neighborhood was taken; the
      // remaining set still covers every edge.
      bool changed = true;
      while (changed) {
        changed = false;
        for (int v : cover) {
          const auto& close = neighborhoods[static_cast<std::size_t>(v)];
          if (std::includes(cover.begin(), cover.end(), close.begin(),
                            close.end())) {
            cover.erase(std::find(cover.begin(), cover.end(), v));
            changed = true;
            break;
          }
        }
      }
      candidate.members = std::move(cover);
      candidate.sparseness = worst_overlap(neighborhoods, candidate.members);
      by_forced_set.emplace(std::move(forced), candidate);
    }
    if (!best || candidate.sparseness < best->sparseness) best = candidate;
  }
  if (!best) return {};  // no vertices: empty cover
  return *best;
}

MmscCover mmsc_approx(const std::vector<int>& universe,
                      const std::vector<VertexSet>& sets, std::uint64_t seed) {
  std::set<int> distinct(universe.begin(), universe.end());
  if (distinct.size() != universe.size()) {
    throw InputError("duplicate universe element");
  }
  std::set<int> coverable;
  for (const auto& s : sets) {
    for (int u : s) {
      if (!distinct.count(u)) {
        throw InputError("set entry " + std::to_string(u) +
                         " outside the universe");
      }
      coverable.insert(u);
    }
  }
  for (int u : universe) {
    if (!coverable.count(u)) {
      throw InputError("element " + std::to_string(u) +
                       " is not covered by any set");
    }
  }

  LpResult lp = solve_lp(build_mmsc_relaxation(universe, sets));
  if (lp.status != LpStatus::Optimal) {
    throw Error("set-cover relaxation did not solve to optimality");
  }

  MmscCover cover;
  cover.seed = seed;
  cover.lp_value = lp.objective_value;

  const std::size_t m = sets.size();
  std::map<int, int> element_index;
  for (std::size_t e = 0; e < universe.size(); ++e) {
    element_index[universe[e]] = static_cast<int>(e);
  }
  auto evaluate = [&](const std::vector<int>& chosen) {
    std::vector<int> membership(universe.size(), 0);
    for (int s : chosen) {
      std::set<int> once(sets[static_cast<std::size_t>(s)].begin(),
                         sets[static_cast<std::size_t>(s)].end());
      for (int u : once) {
        ++membership[static_cast<std::size_t>(element_index.at(u))];
      }
    }
    bool covered = true;
    int worst = 0;
    for (std::size_t e = 0; e < universe.size(); ++e) {
      if (membership[e] == 0) covered = false;
      worst = std::max(worst, membership[e]);
    }
    return std::pair(covered, worst);
  };

  // Inclusion probabilities: min(1, 2 ln(|U|+2) y_S). The scale factor
  // lives in floating point; coverage and membership stay exact.
  const double scale = 2.0 * std::log(static_cast<double>(universe.size()) + 2.0);
  std::vector<double> probability(m, 0.0);
  for (std::size_t s = 0; s < m; ++s) {
    probability[s] = std::min(1.0, scale * lp.assignment[s].to_double());
  }

  for (std::uint64_t round = 0; round < 64; ++round) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (round + 1));
    std::vector<int> chosen;
    for (std::size_t s = 0; s < m; ++s) {
      std::uint64_t draw = splitmix64_next(state);
      bool include;
      if (probability[s] >= 1.0) {
        include = true;
      } else {
        auto threshold = static_cast<std::uint64_t>(
            probability[s] * 18446744073709551616.0 /* 2^64 */);
        include = draw < threshold;
      }
      if (include) chosen.push_back(static_cast<int>(s));
    }
    auto [covered, worst] = evaluate(chosen);
    if (covered) {
      cover.chosen = std::move(chosen);
      cover.membership = worst;
      return cover;
    }
  }

  // Deterministic fallback: grow a cover greedily by most new
  // elements, ties to the smallest set index.
  std::set<int> uncovered(universe.begin(), universe.end());
  std::vector<int> chosen;
  while (!uncovered.empty()) {
    int best_set = -1;
    int best_gain = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (std::find(chosen.begin(), chosen.end(), static_cast<int>(s)) !=
          chosen.end()) {
        continue;
      }
      int gain = 0;
      for (int u : sets[s]) {
        if (uncovered.count(u)) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_set = static_cast<int>(s);
      }
    }
    if (best_set < 0) {
      throw Error("greedy fallback stalled on a coverable instance");
    }
    chosen.push_back(best_set);
    for (int u : sets[static_cast<std::size_t>(best_set)]) uncovered.erase(u);
  }
  std::sort(chosen.begin(), chosen.end());
  auto [covered, worst] = evaluate(chosen);
  if (!covered) throw Error("greedy fallback produced a non-cover");
  cover.chosen = std::move(chosen);
  cover.membership = worst;
  return cover;
}

std::vector<VertexSet> rspc_prune_balls(const WeightedGraph& g,
                                        const Rational& r,
                                        const PathFamily& family,
                                        const std::vector<VertexSet>& balls) {
  if (family.radius != r) {
    throw InputError("path family was built for radius " +
                     family.radius.to_string() + ", not " + r.to_string());
  }
  if (family.truncated) {
    throw InputError("path family is truncated; raise the enumeration cap");
  }
  std::vector<VertexSet> kept;
  for (const auto& raw : balls) {
    VertexSet b = detail::canonical_vertex_set(raw, g.n, "ball");
    bool contains_path = false;
    for (const auto& path : family.paths) {
      if (std::includes(b.begin(), b.end(), path.vertex_set.begin(),
                        path.vertex_set.end())) {
        contains_path = true;
        break;
      }
    }
    if (contains_path) kept.push_back(std::move(b));
  }
  return kept;
}

HittingSolution rspc_logn_approx(const WeightedGraph& g, const Rational& r,
                                 std::uint64_t seed, std::uint64_t cap) {
  PathFamily family = enumerate_path_family(g, r, cap);
  if (family.truncated) {
    throw InputError("path family is truncated; raise the enumeration cap");
  }
  if (family.paths.empty()) return {};

  Rational doubled = r + r;
  std::vector<VertexSet> all_balls;
  all_balls.reserve(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) all_balls.push_back(ball(g, v, doubled));
  std::vector<VertexSet> kept = rspc_prune_balls(g, r, family, all_balls);

  // Universe: family paths then surviving balls, as vertex sets,
  // first occurrence wins.
  std::vector<VertexSet> elements;
  std::set<VertexSet> dedup;
  for (const auto& path : family.paths) {
    if (dedup.insert(path.vertex_set).second) {
      elements.push_back(path.vertex_set);
    }
  }
  for (const auto& b : kept) {
    if (dedup.insert(b).second) elements.push_back(b);
  }

  // Candidate sets: one per vertex on a family path. Restricting to
  // path vertices keeps the lifted solution inside the path union, so
  // dropped balls stay clean and the optimum is unchanged.
  std::set<int> on_paths;
  for (const auto& path : family.paths) {
    on_paths.insert(path.vertex_set.begin(), path.vertex_set.end());
  }
  std::vector<int> universe_ids(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) {
    universe_ids[e] = static_cast<int>(e);
  }
  std::vector<int> set_vertex(on_paths.begin(), on_paths.end());
  std::vector<VertexSet> sets;
  sets.reserve(set_vertex.size());
  for (int v : set_vertex) {
    VertexSet membership;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (std::binary_search(elements[e].begin(), elements[e].end(), v)) {
        membership.push_back(static_cast<int>(e));
      }
    }
    sets.push_back(std::move(membership));
  }

  MmscCover cover = mmsc_approx(universe_ids, sets, seed);
  HittingSolution solution;
  for (int s : cover.chosen) {
    solution.members.push_back(set_vertex[static_cast<std::size_t>(s)]);
  }
  solution.sparseness = worst_overlap(all_balls, solution.members);
  return solution;
}

}  // namespace sparsehs
