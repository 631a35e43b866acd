#include "sparsehs/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "sparsehs/errors.hpp"

namespace sparsehs {

void validate_cnf(const CnfFormula& f) {
  if (f.variable_count < 0) throw InputError("negative variable count");
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw InputError("empty clause");
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.variable_count) {
        throw InputError("literal " + std::to_string(lit) +
                         " outside variable range 1.." +
                         std::to_string(f.variable_count));
      }
    }
  }
}

bool evaluate_assignment(const CnfFormula& f, const Assignment& a) {
  validate_cnf(f);
  if (static_cast<int>(a.values.size()) != f.variable_count) {
    throw InputError("assignment length " + std::to_string(a.values.size()) +
                     " does not match variable count " +
                     std::to_string(f.variable_count));
  }
  for (const auto& clause : f.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      bool value = a.values[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0) == value) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool header_seen = false;
  long declared_clauses = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') continue;
    std::istringstream fields(line);
    if (line[0] == 'p') {
      if (header_seen) throw InputError("duplicate DIMACS header");
      std::string p, kind;
      long vars = -1, clauses = -1;
      fields >> p >> kind >> vars >> clauses;
      if (fields.fail() || kind != "cnf" || vars < 0 || clauses < 0) {
        throw InputError("malformed DIMACS header: '" + line + "'");
      }
      f.variable_count = static_cast<int>(vars);
      declared_clauses = clauses;
      header_seen = true;
      continue;
    }
    if (!header_seen) throw InputError("DIMACS clause before header");
    int lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        if (pending.empty()) throw InputError("empty clause in DIMACS input");
        f.clauses.push_back(pending);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!fields.eof()) {
      throw InputError("malformed DIMACS clause line: '" + line + "'");
    }
  }
  if (!header_seen) throw InputError("missing DIMACS header");
  if (!pending.empty()) throw InputError("unterminated DIMACS clause");
  if (static_cast<long>(f.clauses.size()) != declared_clauses) {
    throw InputError("DIMACS clause count mismatch: header declares " +
                     std::to_string(declared_clauses) + ", found " +
                     std::to_string(f.clauses.size()));
  }
  validate_cnf(f);
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  validate_cnf(f);
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace sparsehs
