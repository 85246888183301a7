#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace dbmend {

// A domain element. Unique names: two constants are equal iff their
// names are.
struct Constant {
  std::string name;

  auto operator<=>(const Constant&) const = default;
};

// A universally quantified constraint variable.
struct Variable {
  std::string name;

  auto operator<=>(const Variable&) const = default;
};

// A term is either a constant or a variable.
using Term = std::variant<Constant, Variable>;

inline bool is_constant(const Term& t) { return std::holds_alternative<Constant>(t); }
inline bool is_variable(const Term& t) { return std::holds_alternative<Variable>(t); }

std::string term_to_string(const Term& t);

// A relation name with its arity. (name, arity) pairs identify a
// relation; the same name may not be used with two arities.
struct PredicateSignature {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const PredicateSignature&) const = default;
};

// A fully instantiated fact: predicate applied to constants only.
struct GroundAtom {
  std::string predicate;
  std::vector<Constant> args;

  PredicateSignature signature() const { return {predicate, args.size()}; }

  // Canonical form: `pred(c1,c2)`, no whitespace; bare `pred` when 0-ary.
  std::string to_string() const;

  auto operator<=>(const GroundAtom&) const = default;
};

// A possibly non-ground atom as it occurs in a constraint.
struct AtomPattern {
  std::string predicate;
  std::vector<Term> args;

  PredicateSignature signature() const { return {predicate, args.size()}; }
  bool is_ground() const;
  GroundAtom to_ground() const;  // requires is_ground()

  std::string to_string() const;

  auto operator<=>(const AtomPattern&) const = default;
};

}  // namespace dbmend
