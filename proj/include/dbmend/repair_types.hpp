#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>

#include "dbmend/atom.hpp"

namespace dbmend {

// A proposed fix: atoms to insert into and retract from an instance.
// Relative to the database it repairs, insert is disjoint from the
// instance and retract is contained in it (so the two sets are disjoint).
struct Repair {
  std::set<GroundAtom> insert;
  std::set<GroundAtom> retract;

  std::size_t total_size() const { return insert.size() + retract.size(); }

  std::string to_string() const;

  auto operator<=>(const Repair&) const = default;
};

// How repairs are ranked: componentwise subset-minimality or minimum
// total size.
enum class PreferenceCriterion { inclusion, cardinality };

std::string criterion_name(PreferenceCriterion c);

}  // namespace dbmend
