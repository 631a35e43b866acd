#include <doctest.h>

#include <optional>
#include <vector>

#include "sparsehs/errors.hpp"
#include "sparsehs/exact.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/set_system.hpp"
#include "support.hpp"

using sparsehs::HittingSolution;
using sparsehs::InputError;
using sparsehs::make_set_system;
using sparsehs::MmscSolution;
using sparsehs::Rational;
using sparsehs::ResourceLimitError;
using sparsehs::SearchBudget;
using sparsehs::SearchStats;
using sparsehs::SetSystemInstance;
using sparsehs::solve_mmsc_exact;
using sparsehs::VertexSet;
using sparsehs::WeightedGraph;

TEST_SUITE("exact") {
  TEST_CASE("hitting search on fixed instances") {
    SetSystemInstance path =
        make_set_system(3, {{0, 1}, {1, 2}}, {{0, 1, 2}});
    HittingSolution sol = solve_sparse_hs_exact(path);
    CHECK(sol.members == VertexSet{1});
    CHECK(sol.sparseness == 1);

    SetSystemInstance forced =
        make_set_system(3, {{0}, {1}, {2}}, {{0, 1, 2}});
    CHECK(solve_sparse_hs_exact(forced).sparseness == 3);

    // without budget members the sparseness is zero and the first
    // element of the first member wins
    SetSystemInstance free = make_set_system(2, {{0, 1}}, {});
    HittingSolution first = solve_sparse_hs_exact(free);
    CHECK(first.members == VertexSet{0});
    CHECK(first.sparseness == 0);
  }

  TEST_CASE("hitting search matches exhaustive search") {
    testsupport::Rng rng(1001);
    for (int i = 0; i < 300; ++i) {
      int n = 3 + rng.below(7);
      SetSystemInstance inst = testsupport::random_instance(
          rng, n, 1 + rng.below(10), rng.below(11));
      HittingSolution sol = solve_sparse_hs_exact(inst);
      CHECK(sol.sparseness == testsupport::oracle_min_sparseness(inst));
      CHECK(is_hitting_set(inst, sol.members));
      CHECK(sparseness_of(inst, sol.members) == sol.sparseness);
    }
  }

  TEST_CASE("decision variant brackets the optimum") {
    testsupport::Rng rng(2002);
    for (int i = 0; i < 100; ++i) {
      int n = 3 + rng.below(6);
      SetSystemInstance inst = testsupport::random_instance(
          rng, n, 1 + rng.below(8), 1 + rng.below(8));
      int opt = solve_sparse_hs_exact(inst).sparseness;
      auto at_opt = solve_sparse_hs_decision(inst, opt);
      REQUIRE(at_opt.has_value());
      CHECK(at_opt->sparseness <= opt);
      CHECK(is_hitting_set(inst, at_opt->members));
      if (opt > 0) {
        CHECK_FALSE(solve_sparse_hs_decision(inst, opt - 1).has_value());
      }
      for (int k = 0; k <= 2; ++k) {
        CHECK(solve_sparse_hs_decision(inst, k).has_value() ==
              testsupport::oracle_decision(inst, k));
      }
    }
  }

  TEST_CASE("search budget trips as a distinct error") {
    testsupport::Rng rng(3003);
    SetSystemInstance inst = testsupport::random_instance(rng, 9, 10, 10);
    CHECK_THROWS_AS(solve_sparse_hs_exact(inst, SearchBudget{1}),
                    ResourceLimitError);
    SearchStats stats;
    solve_sparse_hs_exact(inst, SearchBudget{}, &stats);
    CHECK(stats.nodes > 0);
  }

  TEST_CASE("per-ball hub sets on a cycle") {
    WeightedGraph c4 = testsupport::cycle_graph(4);
    Rational r(1, 2);
    auto family = enumerate_path_family(c4, r);
    // every edge is a relevant path; two opposite vertices cover them
    CHECK(solve_rhd_ball_exact(c4, r, 0, family) == VertexSet{0, 2});
    // confined to the ball around 0 the best cover shifts
    CHECK(solve_rhd_ball_exact(c4, r, 0, family, true) == VertexSet{1, 3});

    auto wrong = enumerate_path_family(c4, Rational(1));
    CHECK_THROWS_AS(solve_rhd_ball_exact(c4, r, 0, wrong), InputError);
    auto cut = enumerate_path_family(c4, r, 1);
    REQUIRE(cut.truncated);
    CHECK_THROWS_AS(solve_rhd_ball_exact(c4, r, 0, cut), InputError);
  }

  TEST_CASE("hub values across whole graphs") {
    CHECK(rhd_value(testsupport::cycle_graph(4), Rational(1, 2)).value == 2);
    CHECK(rhd_value(testsupport::path_graph(3), Rational(1, 2)).value == 1);

    auto result = rhd_value(testsupport::cycle_graph(4), Rational(1, 2));
    CHECK(result.per_ball.size() == 4);
    CHECK(result.per_ball.at(0) == VertexSet{0, 2});
  }

  TEST_CASE("largest hub requirement over all radii") {
    CHECK(highway_dimension_exact(testsupport::path_graph(2)) == 1);
    CHECK(highway_dimension_exact(testsupport::path_graph(3)) == 1);
    CHECK(highway_dimension_exact(testsupport::cycle_graph(4)) == 2);
    CHECK(highway_dimension_exact(testsupport::star_graph(3)) == 1);
    // no connected pair, no radii, value zero
    CHECK(highway_dimension_exact(sparsehs::make_graph(3, {})) == 0);
  }

  TEST_CASE("shortest-path cover on a path graph") {
    WeightedGraph p6 = testsupport::path_graph(6);
    Rational r(1);
    auto family = enumerate_path_family(p6, r);
    std::vector<VertexSet> balls;
    for (int v = 0; v < p6.n; ++v) balls.push_back(ball(p6, v, r + r));
    HittingSolution sol = solve_rspc_exact(p6, r, family, balls);
    CHECK(sol.sparseness == 2);
    for (const auto& p : family.paths) {
      bool hit = false;
      for (int v : p.vertex_set) {
        if (std::binary_search(sol.members.begin(), sol.members.end(), v)) {
          hit = true;
        }
      }
      CHECK(hit);
    }
    CHECK_THROWS_AS(
        solve_rspc_exact(p6, Rational(2), family, balls), InputError);
  }

  TEST_CASE("membership-minimal covers on fixed instances") {
    MmscSolution tri = solve_mmsc_exact({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.membership == 2);
    CHECK(tri.chosen == std::vector<int>{0, 1});

    // both optima have membership 1; the earlier index pair wins the
    // prefix comparison against the singleton {2}
    MmscSolution pair = solve_mmsc_exact({0, 1}, {{0}, {1}, {0, 1}});
    CHECK(pair.membership == 1);
    CHECK(pair.chosen == std::vector<int>{0, 1});

    CHECK_THROWS_AS(solve_mmsc_exact({0, 1}, {{0}}), InputError);
    CHECK_THROWS_AS(solve_mmsc_exact({0, 0}, {{0}}), InputError);
    CHECK_THROWS_AS(solve_mmsc_exact({0}, {{0, 1}}), InputError);
  }

  TEST_CASE("membership-minimal covers match exhaustive search") {
    testsupport::Rng rng(4004);
    for (int i = 0; i < 150; ++i) {
      int n = 2 + rng.below(7);
      int set_count = 1 + rng.below(8);
      std::vector<int> universe;
      for (int u = 0; u < n; ++u) universe.push_back(u);
      std::vector<VertexSet> sets;
      for (int s = 0; s < set_count; ++s) {
        sets.push_back(testsupport::random_subset(rng, n, 0.4, true));
      }
      // make every element coverable
      for (int u = 0; u < n; ++u) {
        bool covered = false;
        for (const auto& s : sets) {
          if (std::binary_search(s.begin(), s.end(), u)) covered = true;
        }
        if (!covered) sets[rng.below(set_count)].push_back(u);
      }
      for (auto& s : sets) std::sort(s.begin(), s.end());
      MmscSolution got = solve_mmsc_exact(universe, sets);
      MmscSolution expected = testsupport::oracle_mmsc(universe, sets);
      CHECK(got.membership == expected.membership);
      CHECK(got.chosen == expected.chosen);
    }
  }

  TEST_CASE("balanced matchings on fixed instances") {
    WeightedGraph c4 = testsupport::cycle_graph(4);
    auto sol = solve_dense_matching_exact(c4, {{0, 1, 2, 3}});
    CHECK(sol.density == 2);
    CHECK(sol.edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    auto none = solve_dense_matching_exact(c4, {});
    CHECK(none.density == 0);
    CHECK(none.edges.empty());
  }

  TEST_CASE("balanced matchings match exhaustive search") {
    testsupport::Rng rng(5005);
    for (int i = 0; i < 150; ++i) {
      int n = 3 + rng.below(6);
      WeightedGraph g = testsupport::random_graph(rng, n, 0.4);
      if (g.edges.size() > 12) continue;
      auto balls = testsupport::random_balls(rng, n, 1 + rng.below(5), 0.5);
      auto sol = solve_dense_matching_exact(g, balls);
      CHECK(sol.density == testsupport::oracle_max_min_density(g, balls));
      CHECK(matching_density(g, balls, sol.edges) == sol.density);
    }
  }

  TEST_CASE("matching search respects its budget") {
    testsupport::Rng rng(6006);
    WeightedGraph g = testsupport::random_connected_graph(rng, 8, 0.8, true);
    std::vector<VertexSet> balls = {{0, 1, 2, 3, 4, 5, 6, 7}};
    CHECK_THROWS_AS(solve_dense_matching_exact(g, balls, SearchBudget{1}),
                    ResourceLimitError);
  }
}
