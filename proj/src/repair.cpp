#include "dbmend/repair.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "dbmend/errors.hpp"
#include "dbmend/grounding.hpp"
#include "dbmend/solver.hpp"

namespace dbmend {

std::string Repair::to_string() const {
  auto render = [](const std::set<GroundAtom>& atoms) {
    std::string out = "{";
    bool first = true;
    for (const GroundAtom& atom : atoms) {
      if (!first) {
        out += ", ";
      }
      out += atom.to_string();
      first = false;
    }
    return out + "}";
  };
  return "(" + render(insert) + ", " + render(retract) + ")";
}

std::string criterion_name(PreferenceCriterion c) {
  return c == PreferenceCriterion::inclusion ? "inclusion" : "cardinality";
}

Database merge(const std::vector<Database>& dbs) {
  Database out;
  std::map<std::string, std::size_t> arities;
  auto note_signature = [&](const PredicateSignature& sig) {
    auto [it, inserted] = arities.emplace(sig.name, sig.arity);
    if (!inserted && it->second != sig.arity) {
      throw SchemaMismatchError("predicate " + sig.name + " used with arity " +
                                std::to_string(it->second) + " and " + std::to_string(sig.arity));
    }
  };
  for (const Database& db : dbs) {
    for (const GroundAtom& atom : db.instance) {
      note_signature(atom.signature());
      out.instance.insert(atom);
    }
    for (const Constraint& c : db.constraints) {
      for (const auto& lits : {c.body(), c.head()}) {
        for (const ConstraintLiteral& lit : lits) {
          if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
            note_signature(atom->signature());
          }
        }
      }
      out.constraints.insert(c);
    }
    out.declared_domain.insert(db.declared_domain.begin(), db.declared_domain.end());
  }

  const std::set<GroundAtom> atoms = candidate_universe(out);
  if (!satisfiable(ground_theory(out), make_universe(atoms))) {
    throw IcConflictError("merged integrity constraints are unsatisfiable");
  }
  return out;
}

bool is_repair(const Database& db, const Repair& r) {
  for (const GroundAtom& atom : r.insert) {
    if (db.instance.contains(atom)) {
      return false;
    }
  }
  for (const GroundAtom& atom : r.retract) {
    if (!db.instance.contains(atom)) {
      return false;
    }
  }
  Database patched{db.instance, db.constraints, db.declared_domain};
  patched.instance.insert(r.insert.begin(), r.insert.end());
  for (const GroundAtom& atom : r.retract) {
    patched.instance.erase(atom);
  }
  return is_consistent(patched);
}

Database apply_repair(const Database& db, const Repair& r) {
  if (!is_repair(db, r)) {
    throw InvalidRepairError("not a repair: " + r.to_string());
  }
  Database out{db.instance, db.constraints, db.declared_domain};
  out.instance.insert(r.insert.begin(), r.insert.end());
  for (const GroundAtom& atom : r.retract) {
    out.instance.erase(atom);
  }
  return out;
}

bool strictly_better(PreferenceCriterion criterion, const Repair& r1, const Repair& r2) {
  if (criterion == PreferenceCriterion::cardinality) {
    return r1.total_size() < r2.total_size();
  }
  return r1 != r2 &&
         std::includes(r2.insert.begin(), r2.insert.end(), r1.insert.begin(), r1.insert.end()) &&
         std::includes(r2.retract.begin(), r2.retract.end(), r1.retract.begin(), r1.retract.end());
}

Repair repair_from_model2(const Database& db, const TwoValuation& m) {
  for (const GroundClause& clause : ground_theory(db)) {
    if (!evaluate2(m, clause)) {
      throw NotAModelError("valuation violates ground constraint: " + clause.to_string());
    }
  }
  const std::set<GroundAtom> trues = m.true_set();
  Repair r;
  std::set_difference(trues.begin(), trues.end(), db.instance.begin(), db.instance.end(),
                      std::inserter(r.insert, r.insert.end()));
  std::set_difference(db.instance.begin(), db.instance.end(), trues.begin(), trues.end(),
                      std::inserter(r.retract, r.retract.end()));
  return r;
}

TwoValuation model2_from_repair(const Database& db, const Repair& r) {
  if (!is_repair(db, r)) {
    throw InvalidRepairError("not a repair: " + r.to_string());
  }
  std::set<GroundAtom> atoms = candidate_universe(db);
  atoms.insert(r.insert.begin(), r.insert.end());
  const UniversePtr universe = make_universe(atoms);

  std::vector<bool> values(universe->size(), false);
  for (std::size_t i = 0; i < universe->size(); ++i) {
    const GroundAtom& atom = universe->atom(i);
    values[i] = r.insert.contains(atom) ||
                (db.instance.contains(atom) && !r.retract.contains(atom));
  }
  return TwoValuation(universe, std::move(values));
}

void sort_repairs(std::vector<Repair>& repairs) {
  std::sort(repairs.begin(), repairs.end(), [](const Repair& a, const Repair& b) {
    if (a.total_size() != b.total_size()) {
      return a.total_size() < b.total_size();
    }
    return a < b;
  });
}

std::vector<Repair> brute_force_preferred(const Database& db,
                                          PreferenceCriterion criterion,
                                          std::size_t bound) {
  const std::set<GroundAtom> universe = candidate_universe(db);
  if (universe.size() > bound) {
    throw OracleBoundError("candidate universe has " + std::to_string(universe.size()) +
                           " atoms, above the oracle bound of " + std::to_string(bound));
  }
  if (!satisfiable(ground_theory(db), make_universe(universe))) {
    throw NoRepairError("no repair possible: constraints are unsatisfiable");
  }

  std::vector<GroundAtom> insertable;
  for (const GroundAtom& atom : universe) {
    if (!db.instance.contains(atom)) {
      insertable.push_back(atom);
    }
  }
  const std::vector<GroundAtom> retractable(db.instance.begin(), db.instance.end());

  std::vector<Repair> valid;
  const std::size_t ni = insertable.size();
  const std::size_t nr = retractable.size();
  for (std::size_t im = 0; im < (std::size_t{1} << ni); ++im) {
    for (std::size_t rm = 0; rm < (std::size_t{1} << nr); ++rm) {
      Repair r;
      for (std::size_t i = 0; i < ni; ++i) {
        if (im & (std::size_t{1} << i)) {
          r.insert.insert(insertable[i]);
        }
      }
      for (std::size_t i = 0; i < nr; ++i) {
        if (rm & (std::size_t{1} << i)) {
          r.retract.insert(retractable[i]);
        }
      }
      if (is_repair(db, r)) {
        valid.push_back(std::move(r));
      }
    }
  }

  std::vector<Repair> preferred;
  for (const Repair& r : valid) {
    const bool dominated = std::any_of(valid.begin(), valid.end(), [&](const Repair& other) {
      return strictly_better(criterion, other, r);
    });
    if (!dominated) {
      preferred.push_back(r);
    }
  }
  sort_repairs(preferred);
  return preferred;
}

std::vector<Database> repaired_databases(const Database& db, PreferenceCriterion criterion) {
  const RepairSearchResult result = preferred_repairs(db, criterion);
  if (!result.complete) {
    throw Error("repair search exhausted its budget; repaired-database set is incomplete");
  }
  std::vector<Database> out;
  out.reserve(result.repairs.size());
  for (const Repair& r : result.repairs) {
    out.push_back(apply_repair(db, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dbmend
