#pragma once

#include <string>
#include <vector>

#include "dbmend/database.hpp"

namespace dbmend::testing {

inline Constant cst(std::string name) { return Constant{std::move(name)}; }

// Uppercase-initial names become variables, everything else constants.
inline Term term(const std::string& name) {
  if (!name.empty() && name[0] >= 'A' && name[0] <= 'Z') {
    return Variable{name};
  }
  return Constant{name};
}

inline GroundAtom ga(std::string predicate, const std::vector<std::string>& args = {}) {
  GroundAtom atom{std::move(predicate), {}};
  for (const std::string& a : args) {
    atom.args.push_back(Constant{a});
  }
  return atom;
}

inline AtomPattern pat(std::string predicate, const std::vector<std::string>& args = {}) {
  AtomPattern atom{std::move(predicate), {}};
  for (const std::string& a : args) {
    atom.args.push_back(term(a));
  }
  return atom;
}

inline ConstraintLiteral eq(const std::string& lhs, const std::string& rhs) {
  return TermEquality{term(lhs), term(rhs), false};
}

inline ConstraintLiteral neq(const std::string& lhs, const std::string& rhs) {
  return TermEquality{term(lhs), term(rhs), true};
}

inline Constraint denial(std::vector<ConstraintLiteral> body) {
  return Constraint(std::move(body), {});
}

inline Constraint implication(std::vector<ConstraintLiteral> body,
                              std::vector<ConstraintLiteral> head) {
  return Constraint(std::move(body), std::move(head));
}

inline Database mkdb(std::vector<GroundAtom> facts, std::vector<Constraint> constraints = {},
                     std::vector<Constant> declared = {}) {
  Database db;
  db.instance.insert(facts.begin(), facts.end());
  db.constraints.insert(constraints.begin(), constraints.end());
  db.declared_domain.insert(declared.begin(), declared.end());
  return db;
}

// Functional dependency on a binary relation: the same first argument
// admits only one second argument.
inline Constraint fd_constraint(const std::string& predicate) {
  return implication({pat(predicate, {"X", "Y"}), pat(predicate, {"X", "Z"})}, {eq("Y", "Z")});
}

// The two teacher databases: three teaches-facts clashing on course c2.
inline Database teachers_db1() {
  return mkdb({ga("teaches", {"c1", "n1"}), ga("teaches", {"c2", "n2"})},
              {fd_constraint("teaches")});
}

inline Database teachers_db2() {
  return mkdb({ga("teaches", {"c2", "n3"})}, {fd_constraint("teaches")});
}

// The p/q databases: p(b) lacks the q(b) its constraint demands.
inline Database pq_db1() { return mkdb({ga("p", {"a"}), ga("p", {"b"})}); }

inline Database pq_db2() {
  return mkdb({ga("q", {"a"}), ga("q", {"c"})},
              {implication({pat("p", {"X"})}, {pat("q", {"X"})})});
}

// The propositional database ({p, r}, {p -> q}).
inline Database small_pr_db() {
  return mkdb({ga("p"), ga("r")}, {implication({pat("p")}, {pat("q")})});
}

}  // namespace dbmend::testing
