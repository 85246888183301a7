#pragma once

#include <cstddef>
#include <vector>

#include "dbmend/database.hpp"
#include "dbmend/repair_types.hpp"

namespace dbmend {

struct SearchLimits {
  // 0 = unlimited.
  std::size_t max_solutions = 0;
  std::size_t node_budget = 1'000'000;
};

struct RepairSearchResult {
  std::vector<Repair> repairs;  // canonically ordered
  // False when the node budget or the solution cap cut the search short;
  // the repair list is then a lower approximation and may even contain
  // non-preferred repairs under the cardinality criterion.
  bool complete = true;
  std::size_t nodes = 0;
};

// Computes the set of preferred repairs by branch-and-bound search over
// the two-valued assignments of the candidate universe: assignments are
// explored flipping as few instance-facts as possible first; branches
// whose flip set already includes a discovered repair (inclusion) or
// exceeds the best size found (cardinality) are cut, as are branches
// violating a fully assigned ground constraint. Throws NoRepairError
// when the constraints are unsatisfiable over the candidate universe.
RepairSearchResult preferred_repairs(const Database& db,
                                     PreferenceCriterion criterion,
                                     const SearchLimits& limits = {});

}  // namespace dbmend
