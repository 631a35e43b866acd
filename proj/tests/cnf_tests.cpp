#include <doctest.h>

#include <map>
#include <vector>

#include "sparsehs/cnf.hpp"
#include "sparsehs/errors.hpp"
#include "support.hpp"

using sparsehs::Assignment;
using sparsehs::CnfFormula;
using sparsehs::InputError;
using sparsehs::parse_dimacs;
using sparsehs::to_dimacs;

TEST_SUITE("cnf") {
  TEST_CASE("validation") {
    CnfFormula f;
    f.variable_count = 2;
    f.clauses = {{1, -2}};
    CHECK_NOTHROW(validate_cnf(f));

    f.clauses = {{}};
    CHECK_THROWS_AS(validate_cnf(f), InputError);
    f.clauses = {{0}};
    CHECK_THROWS_AS(validate_cnf(f), InputError);
    f.clauses = {{3}};
    CHECK_THROWS_AS(validate_cnf(f), InputError);
    f.clauses = {{-3}};
    CHECK_THROWS_AS(validate_cnf(f), InputError);
  }

  TEST_CASE("evaluation") {
    CnfFormula f = testsupport::fig_formula();
    CHECK(evaluate_assignment(f, testsupport::fig_assignment()));
    CHECK_FALSE(evaluate_assignment(f, Assignment{{true, false, false, false}}));
    CHECK_THROWS_AS(evaluate_assignment(f, Assignment{{true}}), InputError);
  }

  TEST_CASE("dimacs parsing") {
    CnfFormula f = parse_dimacs(
        "c a comment\n"
        "p cnf 3 2\n"
        "1 -2 3 0\n"
        "c mid-stream comment\n"
        "-1\n"
        "2 0\n");
    CHECK(f.variable_count == 3);
    CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2, 3}, {-1, 2}});
  }

  TEST_CASE("dimacs round trip") {
    CnfFormula f = testsupport::fig_formula();
    CnfFormula g = parse_dimacs(to_dimacs(f));
    CHECK(g.variable_count == f.variable_count);
    CHECK(g.clauses == f.clauses);
  }

  TEST_CASE("dimacs rejects malformed input") {
    CHECK_THROWS_AS(parse_dimacs(""), InputError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n"), InputError);         // count
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), InputError);    // no 0
    CHECK_THROWS_AS(parse_dimacs("1 2 0\np cnf 2 1\n"), InputError);  // order
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), InputError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), InputError);      // empty
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), InputError);    // range
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), InputError);
  }

  TEST_CASE("fixed occurrence-balanced formulas have the promised shape") {
    for (const CnfFormula& f :
         {testsupport::fig_formula(), testsupport::unsat_occurrence_formula()}) {
      std::map<int, std::pair<int, int>> occurrences;  // var -> (pos, neg)
      for (const auto& clause : f.clauses) {
        for (int lit : clause) {
          if (lit > 0) {
            ++occurrences[lit].first;
          } else {
            ++occurrences[-lit].second;
          }
        }
      }
      for (int v = 1; v <= f.variable_count; ++v) {
        CHECK(occurrences[v] == std::pair<int, int>(2, 1));
      }
    }
    CHECK(evaluate_assignment(testsupport::fig_formula(),
                              testsupport::fig_assignment()));
    CHECK(evaluate_assignment(testsupport::caption_formula(),
                              testsupport::caption_assignment()));
    // the unsatisfiable fixture really is unsatisfiable
    CHECK_FALSE(
        testsupport::oracle_satisfiable(testsupport::unsat_occurrence_formula()));
    CHECK(testsupport::oracle_satisfiable(testsupport::fig_formula()));
  }

  TEST_CASE("random occurrence-balanced formulas are well-formed") {
    testsupport::Rng rng(99);
    for (int i = 0; i < 50; ++i) {
      CnfFormula f = testsupport::random_2p1n_formula(rng, 3 + rng.below(4));
      std::map<int, std::pair<int, int>> occurrences;
      for (const auto& clause : f.clauses) {
        CHECK(clause.size() >= 2);
        CHECK(clause.size() <= 3);
        for (int lit : clause) {
          if (lit > 0) {
            ++occurrences[lit].first;
          } else {
            ++occurrences[-lit].second;
          }
        }
      }
      for (int v = 1; v <= f.variable_count; ++v) {
        CHECK(occurrences[v] == std::pair<int, int>(2, 1));
      }
    }
  }
}
