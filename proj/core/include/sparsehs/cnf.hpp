#pragma once

#include <string>
#include <vector>

namespace sparsehs {

/// A CNF formula over variables 1..variable_count. A clause is a list
/// of nonzero literals: +v for the variable, -v for its negation.
/// Clause order and literal order are preserved as given; reductions
/// read clauses positionally.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;
};

/// Truth values for variables 1..n; values[i] is variable i+1.
struct Assignment {
  std::vector<bool> values;
};

/// Throws InputError if a clause is empty or a literal's variable is
/// outside [1, variable_count].
void validate_cnf(const CnfFormula& f);

/// True when every clause contains a literal made true by a. Throws
/// InputError when a's length differs from f.variable_count or f is
/// malformed.
bool evaluate_assignment(const CnfFormula& f, const Assignment& a);

/// Reads DIMACS CNF: comment lines 'c ...', one header 'p cnf <vars>
/// <clauses>', then zero-terminated clauses (possibly spanning lines).
/// Throws InputError on malformed input or a clause/variable count
/// mismatch with the header.
CnfFormula parse_dimacs(const std::string& text);

/// Renders DIMACS CNF accepted by parse_dimacs.
std::string to_dimacs(const CnfFormula& f);

}  // namespace sparsehs
