#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dbmend/atom.hpp"

namespace dbmend {

// Immutable first-order formula over atoms, term equalities, the usual
// connectives and universal quantification. Value semantics; structural
// equality and ordering.
class Formula {
 public:
  enum class Kind { True, False, Atom, Equality, Not, And, Or, Implies, Forall };

  static Formula truth(bool value);
  static Formula atom(AtomPattern pattern);
  static Formula atom(const GroundAtom& ga);
  static Formula equal(Term lhs, Term rhs);
  static Formula neg(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);

  // n-ary helpers; the empty conjunction is True, the empty disjunction False.
  static Formula conj_of(std::vector<Formula> fs);
  static Formula disj_of(std::vector<Formula> fs);

  Kind kind() const { return kind_; }
  const AtomPattern& pattern() const { return pattern_; }           // Kind::Atom
  const Term& lhs() const { return terms_[0]; }                     // Kind::Equality
  const Term& rhs() const { return terms_[1]; }                     // Kind::Equality
  const std::string& bound_var() const { return var_; }             // Kind::Forall
  std::size_t child_count() const { return children_.size(); }
  const Formula& child(std::size_t i) const { return children_[i]; }

  bool is_ground() const;
  void collect_free_variables(std::set<std::string>& out) const;
  std::set<std::string> free_variables() const;
  void collect_constants(std::set<Constant>& out) const;
  void collect_atoms(std::set<GroundAtom>& out) const;  // ground atoms only

  // Simultaneous substitution of constants for free variables.
  Formula substitute(const std::map<std::string, Constant>& binding) const;

  std::string to_string() const;

  // Structural three-way comparison: by kind, then node payload, then
  // children.
  std::strong_ordering operator<=>(const Formula& other) const;
  bool operator==(const Formula& other) const { return (*this <=> other) == 0; }

 private:
  Formula() = default;

  Kind kind_ = Kind::True;
  AtomPattern pattern_{};
  std::vector<Term> terms_{};
  std::vector<Formula> children_{};
  std::string var_{};
};

}  // namespace dbmend
