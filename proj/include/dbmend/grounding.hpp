#pragma once

#include <set>
#include <vector>

#include "dbmend/atom.hpp"
#include "dbmend/constraint.hpp"
#include "dbmend/database.hpp"
#include "dbmend/formula.hpp"

namespace dbmend {

// All constants occurring in the instance, the constraints and the
// declared domain. Quantifiers range over exactly this set.
std::set<Constant> active_domain(const Database& db);

// Instantiates a constraint over the given domain, one clause per
// assignment of domain constants to the constraint's variables. Ground
// (in)equalities are resolved by constant identity: instances reduced to
// `true` are dropped, the rest lose their resolved literals. Throws
// MalformedConstraintError if a head variable is not bound by a body atom.
std::vector<GroundClause> ground(const Constraint& c, const std::set<Constant>& domain);

// Every ground instance of every constraint, over the active domain.
std::vector<GroundClause> ground_theory(const Database& db);

// The instance plus every atom occurring in the ground theory. This is
// the only atom space the repair engine flips.
std::set<GroundAtom> candidate_universe(const Database& db);

// Ground instances of an arbitrary formula: free variables are treated
// as universally quantified over `domain`, explicit quantifiers are
// expanded over it as well.
std::vector<Formula> ground_formula(const Formula& f, const std::set<Constant>& domain);

}  // namespace dbmend
