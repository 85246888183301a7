#pragma once

#include <cstddef>
#include <vector>

#include "dbmend/classical.hpp"
#include "dbmend/database.hpp"
#include "dbmend/repair_types.hpp"

namespace dbmend {

inline constexpr std::size_t kDefaultOracleBound = 16;

// The union database: instances and constraint sets are unioned
// (duplicates collapse). Throws SchemaMismatchError when two sources
// disagree on a predicate's arity, and IcConflictError when the merged
// constraints are unsatisfiable over the merged candidate universe.
Database merge(const std::vector<Database>& dbs);

// Checks the three repair conditions: insert disjoint from the instance,
// retract contained in it, and the patched database consistent.
bool is_repair(const Database& db, const Repair& r);

// The repaired database (instance ∪ insert \ retract, constraints).
// Throws InvalidRepairError when `r` is not a repair.
Database apply_repair(const Database& db, const Repair& r);

// Strict dominance between repairs. Inclusion: componentwise subset and
// different. Cardinality: strictly smaller total size. A repair is
// preferred when no repair is strictly better.
bool strictly_better(PreferenceCriterion criterion, const Repair& r1, const Repair& r2);

// The repair a classical model of the constraints induces:
// (true-set \ instance, instance \ true-set). Throws NotAModelError when
// `m` fails some ground constraint.
Repair repair_from_model2(const Database& db, const TwoValuation& m);

// The classical model a repair induces: true exactly on the repaired
// instance, over the candidate universe widened by the repair's own
// atoms. Throws InvalidRepairError when `r` is not a repair.
TwoValuation model2_from_repair(const Database& db, const Repair& r);

// Exhaustive reference implementation of the preferred-repair set: every
// (insert, retract) pair over the candidate universe is tested with
// is_repair and dominated pairs are filtered out. Same contract as the
// search engine; intended for cross-validation. Throws OracleBoundError
// when the universe exceeds `bound` atoms.
std::vector<Repair> brute_force_preferred(const Database& db,
                                          PreferenceCriterion criterion,
                                          std::size_t bound = kDefaultOracleBound);

// Every preferred repair applied to the database, canonically ordered.
std::vector<Database> repaired_databases(const Database& db, PreferenceCriterion criterion);

// Canonical repair-list order: (total size, insert atoms, retract atoms).
void sort_repairs(std::vector<Repair>& repairs);

}  // namespace dbmend
