#include "sparsehs/exact.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "sparsehs/errors.hpp"
#include "sparsehs/graph.hpp"

namespace sparsehs {

namespace {

/// Branch-and-bound search for hitting sets of bounded sparseness.
/// One instance serves both the optimization and the decision query.
class HittingSearch {
 public:
  HittingSearch(const SetSystemInstance& instance, SearchBudget budget)
      : instance_(instance), budget_(budget) {
    const auto n = static_cast<std::size_t>(instance.n);
    status_.assign(n, Status::Free);
    sets_of_vertex_.assign(n, {});
    balls_of_vertex_.assign(n, {});
    for (std::size_t f = 0; f < instance.family_f.size(); ++f) {
      for (int v : instance.family_f[f]) {
        sets_of_vertex_[static_cast<std::size_t>(v)].push_back(
            static_cast<int>(f));
      }
    }
    for (std::size_t b = 0; b < instance.family_b.size(); ++b) {
      for (int v : instance.family_b[b]) {
        balls_of_vertex_[static_cast<std::size_t>(v)].push_back(
            static_cast<int>(b));
      }
    }
    hit_count_.assign(instance.family_f.size(), 0);
    candidate_count_.assign(instance.family_f.size(), 0);
    for (std::size_t f = 0; f < instance.family_f.size(); ++f) {
      candidate_count_[f] = static_cast<int>(instance.family_f[f].size());
    }
    load_.assign(instance.family_b.size(), 0);
  }

  /// Minimizes sparseness; pruning_bound caps what is searched (loads
  /// must stay strictly below it), letting the decision query reuse the
  /// optimizer. Returns the best solution found, if any.
  std::optional<HittingSolution> run(int pruning_bound, bool stop_at_first) {
    bound_ = pruning_bound;
    stop_at_first_ = stop_at_first;
    best_.reset();
    search();
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Status { Free, In, Out };

  void charge_node() {
    if (++nodes_ > budget_.max_nodes) {
      throw ResourceLimitError(
          "hitting-set search exceeded its node budget of " +
              std::to_string(budget_.max_nodes),
          nodes_);
    }
  }

  // --- reversible state updates -------------------------------------

  /// Marks v In and updates loads and hit counts. Returns false when a
  /// ball load reaches the pruning bound (the caller must still call
  /// undo_include).
  bool do_include(int v) {
    status_[static_cast<std::size_t>(v)] = Status::In;
    chosen_.push_back(v);
    bool ok = true;
    for (int b : balls_of_vertex_[static_cast<std::size_t>(v)]) {
      if (++load_[static_cast<std::size_t>(b)] > max_load_) {
        max_load_ = load_[static_cast<std::size_t>(b)];
      }
      if (load_[static_cast<std::size_t>(b)] >= bound_) ok = false;
    }
    for (int f : sets_of_vertex_[static_cast<std::size_t>(v)]) {
      ++hit_count_[static_cast<std::size_t>(f)];
    }
    return ok;
  }

  void undo_include(int v, int previous_max_load) {
    status_[static_cast<std::size_t>(v)] = Status::Free;
    chosen_.pop_back();
    for (int b : balls_of_vertex_[static_cast<std::size_t>(v)]) {
      --load_[static_cast<std::size_t>(b)];
    }
    for (int f : sets_of_vertex_[static_cast<std::size_t>(v)]) {
      --hit_count_[static_cast<std::size_t>(f)];
    }
    max_load_ = previous_max_load;
  }

  /// Marks v Out and propagates: an unhit member with one candidate
  /// left forces that candidate In; with none left the branch dies.
  /// Appends every status change to journal (in order) and returns
  /// false when the branch is contradictory or exceeds the bound.
  bool do_exclude(int v, std::vector<std::pair<int, int>>& journal) {
    // journal entries: (vertex, previous max_load) with the convention
    // that excluded vertices record -1 in second.
    status_[static_cast<std::size_t>(v)] = Status::Out;
    journal.emplace_back(v, -1);
    std::vector<int> forced;
    for (int f : sets_of_vertex_[static_cast<std::size_t>(v)]) {
      const auto fi = static_cast<std::size_t>(f);
      --candidate_count_[fi];
      if (hit_count_[fi] > 0) continue;
      if (candidate_count_[fi] == 0) return false;
      if (candidate_count_[fi] == 1) forced.push_back(f);
    }
    for (int f : forced) {
      const auto fi = static_cast<std::size_t>(f);
      if (hit_count_[fi] > 0 || candidate_count_[fi] != 1) continue;
      int candidate = -1;
      for (int u : instance_.family_f[fi]) {
        if (status_[static_cast<std::size_t>(u)] == Status::Free) {
          candidate = u;
          break;
        }
      }
      if (candidate < 0) continue;  // already swallowed by another force
      int previous_max = max_load_;
      bool ok = do_include(candidate);
      journal.emplace_back(candidate, previous_max);
      if (!ok) return false;
    }
    return true;
  }

  void undo_journal(std::vector<std::pair<int, int>>& journal) {
    for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
      auto [v, previous_max] = *it;
      if (previous_max < 0) {
        status_[static_cast<std::size_t>(v)] = Status::Free;
        for (int f : sets_of_vertex_[static_cast<std::size_t>(v)]) {
          ++candidate_count_[static_cast<std::size_t>(f)];
        }
      } else {
        undo_include(v, previous_max);
      }
    }
    journal.clear();
  }

  // --- the search ----------------------------------------------------

  bool improved(int sparseness) const {
    return !best_ || sparseness < best_->sparseness;
  }

  void search() {
    charge_node();
    if (max_load_ >= bound_) return;
    int branch_set = -1;
    for (std::size_t f = 0; f < instance_.family_f.size(); ++f) {
      if (hit_count_[f] == 0) {
        branch_set = static_cast<int>(f);
        break;
      }
    }
    if (branch_set < 0) {
      if (improved(max_load_)) {
        HittingSolution solution;
        solution.members = chosen_;
        std::sort(solution.members.begin(), solution.members.end());
        solution.sparseness = max_load_;
        best_ = std::move(solution);
        if (stop_at_first_) {
          done_ = true;
        } else {
          bound_ = best_->sparseness;  // strict improvement from here on
        }
      }
      return;
    }
    std::vector<std::pair<int, int>> exclusions;
    for (int element : instance_.family_f[static_cast<std::size_t>(branch_set)]) {
      const auto ei = static_cast<std::size_t>(element);
      if (status_[ei] == Status::Out) continue;
      if (status_[ei] == Status::In) {
        // an earlier exclusion in this loop forced this element, so the
        // member is hit; excluding it as well would starve the member
        // that forced it, leaving this single continuation
        search();
        break;
      }
      int previous_max = max_load_;
      bool viable = do_include(element);
      if (viable) search();
      undo_include(element, previous_max);
      if (done_) break;
      if (!do_exclude(element, exclusions)) break;
    }
    undo_journal(exclusions);
  }

  const SetSystemInstance& instance_;
  SearchBudget budget_;
  std::vector<Status> status_;
  std::vector<std::vector<int>> sets_of_vertex_;
  std::vector<std::vector<int>> balls_of_vertex_;
  std::vector<int> hit_count_;
  std::vector<int> candidate_count_;
  std::vector<int> load_;
  VertexSet chosen_;
  int max_load_ = 0;
  int bound_ = std::numeric_limits<int>::max();
  bool stop_at_first_ = false;
  bool done_ = false;
  std::optional<HittingSolution> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

HittingSolution solve_sparse_hs_exact(const SetSystemInstance& instance,
                                      SearchBudget budget, SearchStats* stats) {
  HittingSearch search(instance, budget);
  std::optional<HittingSolution> best;
  try {
    best = search.run(std::numeric_limits<int>::max(), false);
  } catch (...) {
    if (stats) stats->nodes = search.nodes();
    throw;
  }
  if (stats) stats->nodes = search.nodes();
  if (!best) {
    // Unreachable: family_f members are nonempty, so including
    // everything always yields a hitting set.
    throw Error("hitting-set search finished without a solution");
  }
  return *best;
}

std::optional<HittingSolution> solve_sparse_hs_decision(
    const SetSystemInstance& instance, int k, SearchBudget budget,
    SearchStats* stats) {
  if (k < 0) throw InputError("negative sparseness target");
  HittingSearch search(instance, budget);
  std::optional<HittingSolution> found;
  try {
    found = search.run(k + 1, true);
  } catch (...) {
    if (stats) stats->nodes = search.nodes();
    throw;
  }
  if (stats) stats->nodes = search.nodes();
  return found;
}

namespace {

void require_family_matches(const Rational& r, const PathFamily& family) {
  if (family.radius != r) {
    throw InputError("path family was built for radius " +
                     family.radius.to_string() + ", not " + r.to_string());
  }
  if (family.truncated) {
    throw InputError("path family is truncated; raise the enumeration cap");
  }
}

}  // namespace

VertexSet solve_rhd_ball_exact(const WeightedGraph& g, const Rational& r,
                               int center, const PathFamily& family,
                               bool hubs_within_ball) {
  require_family_matches(r, family);
  VertexSet zone = ball(g, center, r + r);
  std::vector<const VertexSet*> relevant;
  for (const auto& path : family.paths) {
    bool intersects = false;
    for (int v : path.vertex_set) {
      if (std::binary_search(zone.begin(), zone.end(), v)) {
        intersects = true;
        break;
      }
    }
    if (intersects) relevant.push_back(&path.vertex_set);
  }
  if (relevant.empty()) return {};

  // A smallest hub set never contains a vertex outside every relevant
  // path, so candidates are confined to their union.
  std::set<int> candidate_set;
  for (const auto* path : relevant) {
    candidate_set.insert(path->begin(), path->end());
  }
  VertexSet candidates(candidate_set.begin(), candidate_set.end());
  if (hubs_within_ball) {
    VertexSet inside;
    std::set_intersection(candidates.begin(), candidates.end(), zone.begin(),
                          zone.end(), std::back_inserter(inside));
    candidates = std::move(inside);
  }

  auto hits_all = [&](const VertexSet& hubs) {
    for (const auto* path : relevant) {
      bool hit = false;
      for (int v : hubs) {
        if (std::binary_search(path->begin(), path->end(), v)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  const int pool = static_cast<int>(candidates.size());
  for (int size = 1; size <= pool; ++size) {
    std::vector<int> index(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) index[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet hubs;
      hubs.reserve(static_cast<std::size_t>(size));
      for (int i : index) hubs.push_back(candidates[static_cast<std::size_t>(i)]);
      if (hits_all(hubs)) return hubs;
      // next lexicographic combination
      int slot = size - 1;
      while (slot >= 0 &&
             index[static_cast<std::size_t>(slot)] == pool - size + slot) {
        --slot;
      }
      if (slot < 0) break;
      ++index[static_cast<std::size_t>(slot)];
      for (int i = slot + 1; i < size; ++i) {
        index[static_cast<std::size_t>(i)] =
            index[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  // Unreachable: taking one vertex from every relevant path (all of
  // them candidates) hits everything, and with hubs_within_ball each
  // relevant path has an in-ball vertex.
  throw Error("hub search finished without a hub set");
}

RhdResult rhd_value(const WeightedGraph& g, const Rational& r,
                    std::uint64_t cap, bool hubs_within_ball) {
  PathFamily family = enumerate_path_family(g, r, cap);
  if (family.truncated) {
    throw InputError("path family is truncated; raise the enumeration cap");
  }
  RhdResult result;
  for (int center = 0; center < g.n; ++center) {
    VertexSet hubs =
        solve_rhd_ball_exact(g, r, center, family, hubs_within_ball);
    result.value = std::max(result.value, static_cast<int>(hubs.size()));
    result.per_ball[center] = std::move(hubs);
  }
  return result;
}

int highway_dimension_exact(const WeightedGraph& g, std::uint64_t cap) {
  int value = 0;
  for (const Rational& r : relevant_radii(g)) {
    value = std::max(value, rhd_value(g, r, cap).value);
  }
  return value;
}

HittingSolution solve_rspc_exact(const WeightedGraph& g, const Rational& r,
                                 const PathFamily& family,
                                 const std::vector<VertexSet>& balls,
                                 SearchBudget budget, SearchStats* stats) {
  require_family_matches(r, family);
  std::vector<VertexSet> family_f;
  family_f.reserve(family.paths.size());
  for (const auto& path : family.paths) family_f.push_back(path.vertex_set);
  SetSystemInstance instance = make_set_system(g.n, std::move(family_f), balls);
  return solve_sparse_hs_exact(instance, budget, stats);
}

namespace {

/// Decision search for minimum-membership set cover: is there a cover
/// extending forced_in, avoiding everything below `first_free` that is
/// not in forced_in, with membership at most mu? Sets at indices >=
/// first_free are free to include or not.
class MmscProbe {
 public:
  MmscProbe(const std::vector<int>& universe, const std::vector<VertexSet>& sets)
      : universe_(universe), sets_(sets) {
    for (std::size_t e = 0; e < universe.size(); ++e) {
      element_index_[universe[e]] = static_cast<int>(e);
    }
    covers_.assign(sets.size(), {});
    covered_by_.assign(universe.size(), {});
    for (std::size_t s = 0; s < sets.size(); ++s) {
      std::set<int> distinct(sets[s].begin(), sets[s].end());
      for (int u : distinct) {
        int e = element_index_.at(u);
        covers_[s].push_back(e);
        covered_by_[static_cast<std::size_t>(e)].push_back(
            static_cast<int>(s));
      }
    }
  }

  /// The lexicographic tie-break needs "does any optimal cover have
  /// exactly this committed prefix"; committed[i] (for i < limit) says
  /// whether set i is in the prefix, sets >= limit are undecided.
  bool feasible(int mu, const std::vector<bool>& committed, int limit) {
    mu_ = mu;
    membership_.assign(universe_.size(), 0);
    // available_[e]: sets that could still cover element e.
    std::vector<int> available(universe_.size(), 0);
    for (std::size_t e = 0; e < universe_.size(); ++e) {
      for (int s : covered_by_[e]) {
        if (s >= limit || committed[static_cast<std::size_t>(s)]) {
          ++available[e];
        }
      }
    }
    available_ = std::move(available);
    for (int s = 0; s < limit; ++s) {
      if (!committed[static_cast<std::size_t>(s)]) continue;
      for (int e : covers_[static_cast<std::size_t>(s)]) {
        if (++membership_[static_cast<std::size_t>(e)] > mu_) return false;
      }
    }
    return extend(limit);
  }

 private:
  bool extend(int s) {
    if (s == static_cast<int>(sets_.size())) {
      for (std::size_t e = 0; e < universe_.size(); ++e) {
        if (membership_[e] == 0) return false;
      }
      return true;
    }
    const auto si = static_cast<std::size_t>(s);
    // Include s (if it fits under mu), then try without it.
    bool fits = true;
    for (int e : covers_[si]) {
      if (membership_[static_cast<std::size_t>(e)] + 1 > mu_) {
        fits = false;
        break;
      }
    }
    if (fits) {
      for (int e : covers_[si]) ++membership_[static_cast<std::size_t>(e)];
      if (extend(s + 1)) return true;
      for (int e : covers_[si]) --membership_[static_cast<std::size_t>(e)];
    }
    bool dead = false;
    for (int e : covers_[si]) {
      if (--available_[static_cast<std::size_t>(e)] == 0 &&
          membership_[static_cast<std::size_t>(e)] == 0) {
        dead = true;
      }
    }
    bool ok = !dead && extend(s + 1);
    for (int e : covers_[si]) ++available_[static_cast<std::size_t>(e)];
    return ok;
  }

  const std::vector<int>& universe_;
  const std::vector<VertexSet>& sets_;
  std::map<int, int> element_index_;
  std::vector<std::vector<int>> covers_;      // set -> element indices
  std::vector<std::vector<int>> covered_by_;  // element index -> sets
  std::vector<int> membership_;
  std::vector<int> available_;
  int mu_ = 0;
};

}  // namespace

MmscSolution solve_mmsc_exact(const std::vector<int>& universe,
                              const std::vector<VertexSet>& sets) {
  std::set<int> distinct(universe.begin(), universe.end());
  if (distinct.size() != universe.size()) {
    throw InputError("duplicate universe element");
  }
  for (const auto& s : sets) {
    for (int u : s) {
      if (!distinct.count(u)) {
        throw InputError("set entry " + std::to_string(u) +
                         " outside the universe");
      }
    }
  }
  std::set<int> coverable;
  for (const auto& s : sets) coverable.insert(s.begin(), s.end());
  for (int u : universe) {
    if (!coverable.count(u)) {
      throw InputError("element " + std::to_string(u) +
                       " is not covered by any set");
    }
  }

  MmscProbe probe(universe, sets);
  const int m = static_cast<int>(sets.size());
  std::vector<bool> committed(static_cast<std::size_t>(m), false);

  int mu = 0;
  while (!probe.feasible(mu, committed, 0)) ++mu;

  // Lexicographically smallest optimal cover, built index by index: a
  // shorter sequence beats its extensions, so stop as soon as the
  // committed prefix alone is a cover.
  MmscSolution solution;
  solution.membership = mu;
  int limit = 0;
  while (true) {
    if (probe.feasible(mu, committed, m)) break;  // committed set covers
    int next = -1;
    for (int s = limit; s < m; ++s) {
      committed[static_cast<std::size_t>(s)] = true;
      bool ok = probe.feasible(mu, committed, s + 1);
      committed[static_cast<std::size_t>(s)] = false;
      if (ok) {
        next = s;
        break;
      }
    }
    if (next < 0) {
      throw Error("lexicographic extension lost feasibility");
    }
    committed[static_cast<std::size_t>(next)] = true;
    solution.chosen.push_back(next);
    limit = next + 1;
  }
  return solution;
}

namespace {

class DenseMatchingSearch {
 public:
  DenseMatchingSearch(const WeightedGraph& g,
                      const std::vector<VertexSet>& balls, SearchBudget budget)
      : graph_(g), budget_(budget) {
    balls_.reserve(balls.size());
    for (const auto& raw : balls) {
      balls_.push_back(detail::canonical_vertex_set(raw, g.n, "ball"));
    }
    const std::size_t m = g.edges.size();
    edge_balls_.assign(m, {});
    for (std::size_t b = 0; b < balls_.size(); ++b) {
      for (std::size_t e = 0; e < m; ++e) {
        const auto& edge = g.edges[e];
        if (std::binary_search(balls_[b].begin(), balls_[b].end(), edge.u) &&
            std::binary_search(balls_[b].begin(), balls_[b].end(), edge.v)) {
          edge_balls_[e].push_back(static_cast<int>(b));
        }
      }
    }
    inside_.assign(balls_.size(), 0);
    undecided_.assign(balls_.size(), 0);
    unmatched_.assign(balls_.size(), 0);
    for (std::size_t b = 0; b < balls_.size(); ++b) {
      unmatched_[b] = static_cast<int>(balls_[b].size());
    }
    for (std::size_t e = 0; e < m; ++e) {
      for (int b : edge_balls_[e]) ++undecided_[static_cast<std::size_t>(b)];
    }
    balls_of_vertex_.assign(static_cast<std::size_t>(g.n), {});
    for (std::size_t b = 0; b < balls_.size(); ++b) {
      for (int v : balls_[b]) {
        balls_of_vertex_[static_cast<std::size_t>(v)].push_back(
            static_cast<int>(b));
      }
    }
    matched_.assign(static_cast<std::size_t>(g.n), false);
  }

  MatchingSolution run() {
    if (balls_.empty()) return {};
    best_density_ = -1;
    search(0);
    MatchingSolution solution;
    solution.density = best_density_;
    for (int e : best_edges_) {
      const auto& edge = graph_.edges[static_cast<std::size_t>(e)];
      solution.edges.emplace_back(edge.u, edge.v);
    }
    return solution;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void charge_node() {
    if (++nodes_ > budget_.max_nodes) {
      throw ResourceLimitError(
          "matching search exceeded its node budget of " +
              std::to_string(budget_.max_nodes),
          nodes_);
    }
  }

  int potential() const {
    int weakest = std::numeric_limits<int>::max();
    for (std::size_t b = 0; b < balls_.size(); ++b) {
      int cap = inside_[b] + std::min(undecided_[b], unmatched_[b] / 2);
      weakest = std::min(weakest, cap);
    }
    return weakest;
  }

  void mark_matched(int v, int delta) {
    for (int b : balls_of_vertex_[static_cast<std::size_t>(v)]) {
      unmatched_[static_cast<std::size_t>(b)] -= delta;
    }
  }

  void search(std::size_t e) {
    charge_node();
    if (potential() <= best_density_) return;
    if (e == graph_.edges.size()) {
      int density = std::numeric_limits<int>::max();
      for (std::size_t b = 0; b < balls_.size(); ++b) {
        density = std::min(density, inside_[b]);
      }
      if (density > best_density_) {
        best_density_ = density;
        best_edges_ = current_;
      }
      return;
    }
    const auto& edge = graph_.edges[e];
    bool can_take = !matched_[static_cast<std::size_t>(edge.u)] &&
                    !matched_[static_cast<std::size_t>(edge.v)];
    if (can_take) {
      matched_[static_cast<std::size_t>(edge.u)] = true;
      matched_[static_cast<std::size_t>(edge.v)] = true;
      mark_matched(edge.u, 1);
      mark_matched(edge.v, 1);
      for (int b : edge_balls_[e]) {
        ++inside_[static_cast<std::size_t>(b)];
        --undecided_[static_cast<std::size_t>(b)];
      }
      current_.push_back(static_cast<int>(e));
      search(e + 1);
      current_.pop_back();
      for (int b : edge_balls_[e]) {
        --inside_[static_cast<std::size_t>(b)];
        ++undecided_[static_cast<std::size_t>(b)];
      }
      mark_matched(edge.u, -1);
      mark_matched(edge.v, -1);
      matched_[static_cast<std::size_t>(edge.u)] = false;
      matched_[static_cast<std::size_t>(edge.v)] = false;
    }
    for (int b : edge_balls_[e]) --undecided_[static_cast<std::size_t>(b)];
    search(e + 1);
    for (int b : edge_balls_[e]) ++undecided_[static_cast<std::size_t>(b)];
  }

  const WeightedGraph& graph_;
  SearchBudget budget_;
  std::vector<VertexSet> balls_;
  std::vector<std::vector<int>> edge_balls_;
  std::vector<std::vector<int>> balls_of_vertex_;
  std::vector<int> inside_, undecided_, unmatched_;
  std::vector<bool> matched_;
  std::vector<int> current_, best_edges_;
  int best_density_ = -1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MatchingSolution solve_dense_matching_exact(const WeightedGraph& g,
                                            const std::vector<VertexSet>& balls,
                                            SearchBudget budget,
                                            SearchStats* stats) {
  DenseMatchingSearch search(g, balls, budget);
  MatchingSolution solution;
  try {
    solution = search.run();
  } catch (...) {
    if (stats) stats->nodes = search.nodes();
    throw;
  }
  if (stats) stats->nodes = search.nodes();
  return solution;
}

}  // namespace sparsehs
