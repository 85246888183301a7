#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "dbmend/atom.hpp"

namespace dbmend {

// A fixed, sorted, finite ground-atom universe. Valuations are total
// maps over one of these; sharing is by shared_ptr since many valuations
// reference the same universe.
class AtomUniverse {
 public:
  explicit AtomUniverse(const std::set<GroundAtom>& atoms)
      : atoms_(atoms.begin(), atoms.end()) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      index_.emplace(atoms_[i], i);
    }
  }

  std::size_t size() const { return atoms_.size(); }
  const GroundAtom& atom(std::size_t i) const { return atoms_[i]; }
  const std::vector<GroundAtom>& atoms() const { return atoms_; }

  std::optional<std::size_t> index_of(const GroundAtom& atom) const {
    auto it = index_.find(atom);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool contains(const GroundAtom& atom) const { return index_.contains(atom); }

  bool operator==(const AtomUniverse& other) const { return atoms_ == other.atoms_; }

 private:
  std::vector<GroundAtom> atoms_;
  std::map<GroundAtom, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const AtomUniverse>;

inline UniversePtr make_universe(const std::set<GroundAtom>& atoms) {
  return std::make_shared<const AtomUniverse>(atoms);
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace dbmend
