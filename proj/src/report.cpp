#include "dbmend/report.hpp"

#include <utility>

#include "dbmend/repair.hpp"

namespace dbmend {

std::string status_name(RepairReport::Status status) {
  switch (status) {
    case RepairReport::Status::consistent:
      return "consistent";
    case RepairReport::Status::repaired:
      return "repaired";
    case RepairReport::Status::partial:
      return "partial";
  }
  return "?";
}

RepairReport RepairReport::build(const Database& db,
                                 std::vector<Repair> repairs,
                                 bool complete,
                                 PreferenceCriterion criterion) {
  RepairReport report;
  report.criterion = criterion;
  sort_repairs(repairs);
  report.repairs = std::move(repairs);

  if (!complete) {
    report.status = Status::partial;
  } else if (report.repairs.size() == 1 && report.repairs.front() == Repair{}) {
    report.status = Status::consistent;
  } else {
    report.status = Status::repaired;
  }

  report.repaired_instances.reserve(report.repairs.size());
  for (const Repair& r : report.repairs) {
    std::set<GroundAtom> instance = db.instance;
    instance.insert(r.insert.begin(), r.insert.end());
    for (const GroundAtom& atom : r.retract) {
      instance.erase(atom);
    }
    report.repaired_instances.push_back(std::move(instance));
  }
  return report;
}

namespace {

std::string join_atoms(const std::set<GroundAtom>& atoms) {
  std::string out;
  bool first = true;
  for (const GroundAtom& atom : atoms) {
    if (!first) {
      out += ' ';
    }
    out += atom.to_string();
    first = false;
  }
  return out;
}

std::vector<std::string> atom_strings(const std::set<GroundAtom>& atoms) {
  std::vector<std::string> out;
  out.reserve(atoms.size());
  for (const GroundAtom& atom : atoms) {
    out.push_back(atom.to_string());
  }
  return out;
}

}  // namespace

std::string RepairReport::to_text() const {
  std::string out;
  out += "criterion: " + criterion_name(criterion) + "\n";
  out += "status: " + status_name(status) + "\n";
  for (std::size_t i = 0; i < repairs.size(); ++i) {
    out += "repair: insert[" + join_atoms(repairs[i].insert) + "] retract[" +
           join_atoms(repairs[i].retract) + "]\n";
    out += "repaired: " + join_atoms(repaired_instances[i]) + "\n";
  }
  return out;
}

nlohmann::ordered_json RepairReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["criterion"] = criterion_name(criterion);
  doc["status"] = status_name(status);
  doc["repairs"] = nlohmann::ordered_json::array();
  for (const Repair& r : repairs) {
    nlohmann::ordered_json entry;
    entry["insert"] = atom_strings(r.insert);
    entry["retract"] = atom_strings(r.retract);
    doc["repairs"].push_back(std::move(entry));
  }
  doc["repaired_instances"] = nlohmann::ordered_json::array();
  for (const std::set<GroundAtom>& instance : repaired_instances) {
    doc["repaired_instances"].push_back(atom_strings(instance));
  }
  return doc;
}

}  // namespace dbmend
