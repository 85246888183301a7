#pragma once

#include <functional>
#include <set>
#include <vector>

#include "dbmend/constraint.hpp"
#include "dbmend/database.hpp"
#include "dbmend/formula.hpp"
#include "dbmend/universe.hpp"

namespace dbmend {

// A total two-valued valuation over a fixed atom universe.
class TwoValuation {
 public:
  TwoValuation(UniversePtr universe, std::vector<bool> values);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }

  bool at(std::size_t index) const { return values_[index]; }
  // Throws UniverseMismatchError when the atom is outside the universe.
  bool at(const GroundAtom& atom) const;

  std::set<GroundAtom> true_set() const;

  bool operator==(const TwoValuation& other) const;

 private:
  UniversePtr universe_;
  std::vector<bool> values_;
};

// The valuation making exactly the stored facts true. Throws
// UniverseMismatchError if some instance atom is outside the universe.
TwoValuation minimal_herbrand(const std::set<GroundAtom>& instance, UniversePtr universe);
TwoValuation minimal_herbrand(const std::set<GroundAtom>& instance, const std::set<GroundAtom>& universe);

// Classical truth-table evaluation of a ground formula; implication is
// material, denials (empty-head clauses) evaluate as the negated body.
bool evaluate2(const TwoValuation& v, const Formula& f);
bool evaluate2(const TwoValuation& v, const GroundClause& clause);

// Whether the formula follows from the instance under the closed world
// assumption: every ground instance of `f` holds in the minimal Herbrand
// model. The grounding domain is the database's active domain widened by
// the formula's own constants.
bool entails(const std::set<GroundAtom>& instance, const Formula& f, const Database& db);

// Whether every constraint follows from the instance (Herbrand-model
// check over the ground theory; a positive answer also witnesses that
// the constraint set is satisfiable).
bool is_consistent(const Database& db);

// Enumerates every two-valued valuation over `universe` satisfying all
// clauses, in lexicographic order of the valuation vector (f before t,
// atoms in sorted order). Returns false from `fn` to stop early.
void for_each_classical_model(const std::vector<GroundClause>& clauses,
                              const UniversePtr& universe,
                              const std::function<bool(const TwoValuation&)>& fn);

// Materialized variant; an empty result signals an unsatisfiable set.
std::vector<TwoValuation> classical_models(const std::vector<GroundClause>& clauses,
                                           const UniversePtr& universe);
// Grounds the constraints over the constants of the universe and the
// constraints themselves, then enumerates.
std::vector<TwoValuation> classical_models(const std::set<Constraint>& constraints,
                                           const std::set<GroundAtom>& universe);

// Symmetric difference of two fact sets (under the CWA the ground-atom
// theories coincide with the fact sets).
std::set<GroundAtom> dist(const std::set<GroundAtom>& d1, const std::set<GroundAtom>& d2);

// Backtracking satisfiability over the clause set; `fixed` may pin atoms
// (by universe index) to a required value, -1 leaves an atom free.
bool satisfiable(const std::vector<GroundClause>& clauses, const UniversePtr& universe);
bool satisfiable_with_fixed(const std::vector<GroundClause>& clauses,
                            const UniversePtr& universe,
                            const std::vector<signed char>& fixed);

}  // namespace dbmend
