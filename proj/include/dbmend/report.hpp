#pragma once

#include <set>
#include <string>
#include <vector>

#include "dbmend/database.hpp"
#include "dbmend/repair_types.hpp"

#include "json.hpp"

namespace dbmend {

// Machine- and human-readable outcome of a repair computation. Atom
// lists are sorted; repairs are sorted by (total size, insert atoms,
// retract atoms).
struct RepairReport {
  enum class Status { consistent, repaired, partial };

  PreferenceCriterion criterion = PreferenceCriterion::inclusion;
  Status status = Status::consistent;
  std::vector<Repair> repairs;
  std::vector<std::set<GroundAtom>> repaired_instances;  // parallel to repairs

  // `complete` is false when the search was cut short by its limits.
  static RepairReport build(const Database& db,
                            std::vector<Repair> repairs,
                            bool complete,
                            PreferenceCriterion criterion);

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

std::string status_name(RepairReport::Status status);

}  // namespace dbmend
