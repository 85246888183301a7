#pragma once

#include <set>
#include <vector>

#include "dbmend/classical.hpp"
#include "dbmend/constraint.hpp"
#include "dbmend/database.hpp"
#include "dbmend/formula.hpp"
#include "dbmend/repair_types.hpp"
#include "dbmend/three.hpp"
#include "dbmend/universe.hpp"

namespace dbmend {

// A total three-valued valuation over a fixed atom universe.
class ThreeValuation {
 public:
  ThreeValuation(UniversePtr universe, std::vector<Three> values);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }

  Three at(std::size_t index) const { return values_[index]; }
  Three at(const GroundAtom& atom) const;

  // The atoms carrying the contradictory value.
  std::set<GroundAtom> top_set() const;

  bool operator==(const ThreeValuation& other) const;

 private:
  UniversePtr universe_;
  std::vector<Three> values_;
};

// Embeds a two-valued valuation (t/f only).
ThreeValuation embed3(const TwoValuation& v);

// Recursive evaluation with the THREE connectives; implication is
// material, ground equalities stay two-valued.
Three eval3(const ThreeValuation& v, const Formula& f);
Three eval3(const ThreeValuation& v, const GroundClause& clause);

bool satisfies3(const ThreeValuation& v, const Formula& f);
bool is_model3(const ThreeValuation& v, const std::vector<Formula>& theory);
bool is_model3(const ThreeValuation& v, const std::vector<GroundClause>& theory);

// Pointwise knowledge-join of two two-valued valuations over one
// universe: agreement keeps the value, disagreement becomes `both`.
ThreeValuation knowledge_join(const TwoValuation& h, const TwoValuation& m);

// The repair components encoded by a valuation's contradictory atoms.
std::set<GroundAtom> insert_of(const ThreeValuation& v, const std::set<GroundAtom>& instance);
std::set<GroundAtom> retract_of(const ThreeValuation& v, const std::set<GroundAtom>& instance);

// Whether the valuation knowledge-dominates the join of the minimal
// Herbrand model with some classical model of the constraints. The
// valuation must range over candidate_universe(db).
bool in_mdb(const ThreeValuation& v, const Database& db);

// The canonical members of that model set whose contradictory-atom set
// is subset-minimal (inclusion) or of minimum size (cardinality).
// Canonical: the valuation agrees with the minimal Herbrand model
// outside its top set. Output sorted by (top-set size, top-set atoms).
// Throws NoModelError when the constraints are unsatisfiable.
std::vector<ThreeValuation> maximally_consistent(const Database& db, PreferenceCriterion criterion);

// The three-valued model encoding a repair: contradictory on the
// repair's atoms, true on the remaining stored facts, false elsewhere.
// Throws InvalidRepairError when `r` is not a repair of `db`.
ThreeValuation repair_to_model3(const Database& db, const Repair& r);

}  // namespace dbmend
