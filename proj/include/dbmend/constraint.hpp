#pragma once

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dbmend/atom.hpp"
#include "dbmend/formula.hpp"

namespace dbmend {

// `lhs = rhs` (negated = false) or `lhs != rhs` (negated = true).
struct TermEquality {
  Term lhs;
  Term rhs;
  bool negated = false;

  std::string to_string() const;

  auto operator<=>(const TermEquality&) const = default;
};

using ConstraintLiteral = std::variant<AtomPattern, TermEquality>;

std::string literal_to_string(const ConstraintLiteral& lit);

// An integrity constraint in implication normal form,
//   B1, ..., Bn -> H1 ; ... ; Hm
// with every variable implicitly universally quantified. m = 0 encodes a
// denial. Variables are renamed on construction to X1, X2, ... in order
// of first occurrence, so structurally equal constraints compare equal
// regardless of the variable names they were written with.
class Constraint {
 public:
  Constraint() = default;
  Constraint(std::vector<ConstraintLiteral> body, std::vector<ConstraintLiteral> head);

  const std::vector<ConstraintLiteral>& body() const { return body_; }
  const std::vector<ConstraintLiteral>& head() const { return head_; }
  bool is_denial() const { return head_.empty(); }

  std::set<std::string> variables() const;
  std::set<Constant> constants() const;

  // Every head variable occurs in some body atom.
  bool head_variables_safe() const;
  // Every variable (head, body equality) occurs in some body atom.
  bool range_restricted() const;

  // The constraint as a formula with free (implicitly universal) variables.
  Formula to_formula() const;

  // Canonical text: `ic :- b1, b2.` for denials, `ic b1 -> h1 ; h2.` else.
  std::string to_string() const;

  auto operator<=>(const Constraint&) const = default;

 private:
  std::set<std::string> body_atom_variables() const;

  std::vector<ConstraintLiteral> body_;
  std::vector<ConstraintLiteral> head_;
};

// A fully instantiated constraint with all equalities resolved away:
//   body atoms -> head atoms,
// logically the clause ~b1 | ... | ~bn | h1 | ... | hm. Both sides are
// kept sorted and duplicate-free. An empty head encodes a ground denial;
// empty body and head encode the unsatisfiable clause.
struct GroundClause {
  std::vector<GroundAtom> body;
  std::vector<GroundAtom> head;

  static GroundClause make(std::vector<GroundAtom> body, std::vector<GroundAtom> head);

  // True unless every body atom is in `true_atoms` and no head atom is.
  bool satisfied_by(const std::set<GroundAtom>& true_atoms) const;

  void collect_atoms(std::set<GroundAtom>& out) const;

  Formula to_formula() const;
  std::string to_string() const;

  auto operator<=>(const GroundClause&) const = default;
};

}  // namespace dbmend
