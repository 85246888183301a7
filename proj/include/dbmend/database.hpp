#pragma once

#include <compare>
#include <set>

#include "dbmend/atom.hpp"
#include "dbmend/constraint.hpp"

namespace dbmend {

// A database: a fact set (instance) paired with a set of integrity
// constraints. `declared_domain` holds constants explicitly added via
// `domain` declarations; it widens the quantifier range beyond the
// constants occurring in facts and constraints.
struct Database {
  std::set<GroundAtom> instance;
  std::set<Constraint> constraints;
  std::set<Constant> declared_domain;

  auto operator<=>(const Database&) const = default;
};

}  // namespace dbmend
