#include <doctest.h>

#include <optional>
#include <vector>

#include "sparsehs/errors.hpp"
#include "sparsehs/graph.hpp"
#include "sparsehs/set_system.hpp"
#include "sparsehs/twosat.hpp"
#include "support.hpp"

using sparsehs::Assignment;
using sparsehs::CnfFormula;
using sparsehs::InputError;
using sparsehs::sparse_vc_k1_formula;
using sparsehs::solve_sparse_vc_k1;
using sparsehs::twosat_solve;
using sparsehs::VertexSet;
using sparsehs::WeightedGraph;

namespace {

CnfFormula width2(int vars, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.variable_count = vars;
  f.clauses = std::move(clauses);
  return f;
}

}  // namespace

TEST_SUITE("twosat") {
  TEST_CASE("simple satisfiable and unsatisfiable formulas") {
    auto sat = twosat_solve(width2(2, {{1, 2}, {-1, 2}}));
    REQUIRE(sat.has_value());
    CHECK(evaluate_assignment(width2(2, {{1, 2}, {-1, 2}}), *sat));

    CHECK_FALSE(twosat_solve(width2(1, {{1}, {-1}})).has_value());
    CHECK_FALSE(
        twosat_solve(width2(2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}))
            .has_value());
  }

  TEST_CASE("unit clauses and unconstrained variables") {
    auto a = twosat_solve(width2(3, {{1}}));
    REQUIRE(a.has_value());
    CHECK(a->values == std::vector<bool>{true, false, false});
  }

  TEST_CASE("rejects wide clauses") {
    CHECK_THROWS_AS(twosat_solve(width2(3, {{1, 2, 3}})), InputError);
  }

  TEST_CASE("deterministic output") {
    CnfFormula f = width2(4, {{1, 2}, {-2, 3}, {3, 4}, {-1, -4}});
    auto a = twosat_solve(f);
    auto b = twosat_solve(f);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->values == b->values);
  }

  TEST_CASE("matches the truth table on random formulas") {
    testsupport::Rng rng(424242);
    for (int i = 0; i < 200; ++i) {
      int n = 2 + rng.below(7);
      int m = 1 + rng.below(12);
      CnfFormula f;
      f.variable_count = n;
      for (int j = 0; j < m; ++j) {
        std::vector<int> clause;
        int width = 1 + rng.below(2);
        for (int l = 0; l < width; ++l) {
          int v = 1 + rng.below(n);
          clause.push_back(rng.chance(0.5) ? v : -v);
        }
        f.clauses.push_back(std::move(clause));
      }
      auto got = twosat_solve(f);
      bool expected = testsupport::oracle_satisfiable(f);
      CHECK(got.has_value() == expected);
      if (got) CHECK(evaluate_assignment(f, *got));
    }
  }

  TEST_CASE("cover formula structure") {
    WeightedGraph p3 = testsupport::path_graph(3);
    CnfFormula f = sparse_vc_k1_formula(p3, {{0, 1, 2}});
    CHECK(f.variable_count == 3);
    // two edge clauses plus one exclusion clause per vertex pair
    CHECK(f.clauses.size() == 5);
    CHECK_THROWS_AS(sparse_vc_k1_formula(p3, {{3}}), InputError);
  }

  TEST_CASE("budget-one cover on a path") {
    WeightedGraph p3 = testsupport::path_graph(3);
    auto cover = solve_sparse_vc_k1(p3, {{0, 1, 2}});
    REQUIRE(cover.has_value());
    CHECK(*cover == VertexSet{1});
  }

  TEST_CASE("budget-one cover detects infeasibility") {
    // a triangle needs two cover vertices; one ball holds all three
    WeightedGraph k3 = testsupport::cycle_graph(3);
    CHECK_FALSE(solve_sparse_vc_k1(k3, {{0, 1, 2}}).has_value());
  }

  TEST_CASE("budget-one cover matches exhaustive search") {
    testsupport::Rng rng(777);
    for (int i = 0; i < 200; ++i) {
      int n = 2 + rng.below(9);
      WeightedGraph g = testsupport::random_graph(rng, n, 0.3);
      auto balls = testsupport::random_balls(rng, n, rng.below(4), 0.4);
      auto inst = vertex_cover_instance(g, balls);
      auto cover = solve_sparse_vc_k1(g, balls);
      CHECK(cover.has_value() == testsupport::oracle_decision(inst, 1));
      if (cover) {
        CHECK(is_hitting_set(inst, *cover));
        CHECK(sparseness_of(inst, *cover) <= 1);
      }
    }
  }
}
