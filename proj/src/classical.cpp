#include "dbmend/classical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "dbmend/errors.hpp"
#include "dbmend/grounding.hpp"

namespace dbmend {

TwoValuation::TwoValuation(UniversePtr universe, std::vector<bool> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_ || universe_->size() != values_.size()) {
    throw UniverseMismatchError("valuation size does not match its universe");
  }
}

bool TwoValuation::at(const GroundAtom& atom) const {
  const auto index = universe_->index_of(atom);
  if (!index) {
    throw UniverseMismatchError("atom outside universe: " + atom.to_string());
  }
  return values_[*index];
}

std::set<GroundAtom> TwoValuation::true_set() const {
  std::set<GroundAtom> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i]) {
      out.insert(universe_->atom(i));
    }
  }
  return out;
}

bool TwoValuation::operator==(const TwoValuation& other) const {
  return same_universe(universe_, other.universe_) && values_ == other.values_;
}

TwoValuation minimal_herbrand(const std::set<GroundAtom>& instance, UniversePtr universe) {
  std::vector<bool> values(universe->size(), false);
  for (const GroundAtom& atom : instance) {
    const auto index = universe->index_of(atom);
    if (!index) {
      throw UniverseMismatchError("instance atom outside universe: " + atom.to_string());
    }
    values[*index] = true;
  }
  return TwoValuation(std::move(universe), std::move(values));
}

TwoValuation minimal_herbrand(const std::set<GroundAtom>& instance, const std::set<GroundAtom>& universe) {
  return minimal_herbrand(instance, make_universe(universe));
}

bool evaluate2(const TwoValuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      if (!f.pattern().is_ground()) {
        throw std::logic_error("evaluate2: non-ground atom " + f.pattern().to_string());
      }
      return v.at(f.pattern().to_ground());
    case Formula::Kind::Equality: {
      if (!is_constant(f.lhs()) || !is_constant(f.rhs())) {
        throw std::logic_error("evaluate2: non-ground equality");
      }
      return std::get<Constant>(f.lhs()) == std::get<Constant>(f.rhs());
    }
    case Formula::Kind::Not:
      return !evaluate2(v, f.child(0));
    case Formula::Kind::And:
      return evaluate2(v, f.child(0)) && evaluate2(v, f.child(1));
    case Formula::Kind::Or:
      return evaluate2(v, f.child(0)) || evaluate2(v, f.child(1));
    case Formula::Kind::Implies:
      return !evaluate2(v, f.child(0)) || evaluate2(v, f.child(1));
    case Formula::Kind::Forall:
      throw std::logic_error("evaluate2: quantifier in ground formula");
  }
  return false;
}

bool evaluate2(const TwoValuation& v, const GroundClause& clause) {
  for (const GroundAtom& b : clause.body) {
    if (!v.at(b)) {
      return true;
    }
  }
  for (const GroundAtom& h : clause.head) {
    if (v.at(h)) {
      return true;
    }
  }
  return false;
}

bool entails(const std::set<GroundAtom>& instance, const Formula& f, const Database& db) {
  std::set<Constant> domain = active_domain(db);
  f.collect_constants(domain);

  const std::vector<Formula> ground = ground_formula(f, domain);

  std::set<GroundAtom> atoms = candidate_universe(db);
  atoms.insert(instance.begin(), instance.end());
  for (const Formula& g : ground) {
    g.collect_atoms(atoms);
  }

  const TwoValuation h = minimal_herbrand(instance, atoms);
  for (const Formula& g : ground) {
    if (!evaluate2(h, g)) {
      return false;
    }
  }
  return true;
}

bool is_consistent(const Database& db) {
  // D |= IC already witnesses satisfiability of IC, so the Herbrand
  // check covers both conditions of consistency.
  for (const GroundClause& clause : ground_theory(db)) {
    if (!clause.satisfied_by(db.instance)) {
      return false;
    }
  }
  return true;
}

namespace {

struct IndexedClause {
  std::vector<std::size_t> body;
  std::vector<std::size_t> head;
};

std::vector<IndexedClause> index_clauses(const std::vector<GroundClause>& clauses,
                                         const AtomUniverse& universe) {
  std::vector<IndexedClause> out;
  out.reserve(clauses.size());
  for (const GroundClause& clause : clauses) {
    IndexedClause ic;
    for (const GroundAtom& b : clause.body) {
      const auto index = universe.index_of(b);
      if (!index) {
        throw UniverseMismatchError("clause atom outside universe: " + b.to_string());
      }
      ic.body.push_back(*index);
    }
    for (const GroundAtom& h : clause.head) {
      const auto index = universe.index_of(h);
      if (!index) {
        throw UniverseMismatchError("clause atom outside universe: " + h.to_string());
      }
      ic.head.push_back(*index);
    }
    out.push_back(std::move(ic));
  }
  return out;
}

bool clause_satisfied(const IndexedClause& c, const std::vector<bool>& values) {
  for (const std::size_t b : c.body) {
    if (!values[b]) {
      return true;
    }
  }
  for (const std::size_t h : c.head) {
    if (values[h]) {
      return true;
    }
  }
  return false;
}

// Chronological backtracking over atoms [depth, n). `values` holds the
// partial assignment; a clause is checked as soon as its last atom is
// assigned (by_last[i] lists clauses whose maximum atom index is i).
bool extend(std::size_t depth,
            std::vector<bool>& values,
            const std::vector<signed char>& fixed,
            const std::vector<std::vector<const IndexedClause*>>& by_last) {
  const std::size_t n = values.size();
  if (depth == n) {
    return true;
  }
  const signed char pin = fixed[depth];
  for (const bool value : {false, true}) {
    if (pin >= 0 && static_cast<bool>(pin) != value) {
      continue;
    }
    values[depth] = value;
    bool ok = true;
    for (const IndexedClause* clause : by_last[depth]) {
      if (!clause_satisfied(*clause, values)) {
        ok = false;
        break;
      }
    }
    if (ok && extend(depth + 1, values, fixed, by_last)) {
      return true;
    }
  }
  return false;
}

std::vector<std::vector<const IndexedClause*>> group_by_last_atom(
    const std::vector<IndexedClause>& clauses, std::size_t n, bool& has_empty_clause) {
  std::vector<std::vector<const IndexedClause*>> by_last(n);
  has_empty_clause = false;
  for (const IndexedClause& c : clauses) {
    std::size_t last = 0;
    bool any = false;
    for (const std::size_t i : c.body) {
      last = std::max(last, i);
      any = true;
    }
    for (const std::size_t i : c.head) {
      last = std::max(last, i);
      any = true;
    }
    if (!any) {
      has_empty_clause = true;  // empty body and head: unsatisfiable
    } else {
      by_last[last].push_back(&c);
    }
  }
  return by_last;
}

}  // namespace

void for_each_classical_model(const std::vector<GroundClause>& clauses,
                              const UniversePtr& universe,
                              const std::function<bool(const TwoValuation&)>& fn) {
  const std::size_t n = universe->size();
  const std::vector<IndexedClause> indexed = index_clauses(clauses, *universe);

  // Lexicographic enumeration of assignment vectors: atom 0 is the most
  // significant position, false sorts before true.
  std::vector<bool> values(n, false);
  while (true) {
    bool model = true;
    for (const IndexedClause& c : indexed) {
      if (!clause_satisfied(c, values)) {
        model = false;
        break;
      }
    }
    if (model && !fn(TwoValuation(universe, values))) {
      return;
    }
    std::size_t i = n;
    while (i > 0 && values[i - 1]) {
      values[i - 1] = false;
      --i;
    }
    if (i == 0) {
      return;
    }
    values[i - 1] = true;
  }
}

std::vector<TwoValuation> classical_models(const std::vector<GroundClause>& clauses,
                                           const UniversePtr& universe) {
  if (universe->size() > 24) {
    throw Error("classical_models: universe too large to enumerate (" +
                std::to_string(universe->size()) + " atoms)");
  }
  std::vector<TwoValuation> out;
  for_each_classical_model(clauses, universe, [&](const TwoValuation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::vector<TwoValuation> classical_models(const std::set<Constraint>& constraints,
                                           const std::set<GroundAtom>& universe) {
  std::set<Constant> domain;
  for (const GroundAtom& atom : universe) {
    domain.insert(atom.args.begin(), atom.args.end());
  }
  std::set<GroundClause> clauses;
  for (const Constraint& c : constraints) {
    std::set<Constant> full = domain;
    const std::set<Constant> cs = c.constants();
    full.insert(cs.begin(), cs.end());
    for (GroundClause& clause : ground(c, full)) {
      clauses.insert(std::move(clause));
    }
  }
  return classical_models(std::vector<GroundClause>(clauses.begin(), clauses.end()),
                          make_universe(universe));
}

std::set<GroundAtom> dist(const std::set<GroundAtom>& d1, const std::set<GroundAtom>& d2) {
  std::set<GroundAtom> out;
  std::set_symmetric_difference(d1.begin(), d1.end(), d2.begin(), d2.end(),
                                std::inserter(out, out.end()));
  return out;
}

bool satisfiable(const std::vector<GroundClause>& clauses, const UniversePtr& universe) {
  return satisfiable_with_fixed(clauses, universe, std::vector<signed char>(universe->size(), -1));
}

bool satisfiable_with_fixed(const std::vector<GroundClause>& clauses,
                            const UniversePtr& universe,
                            const std::vector<signed char>& fixed) {
  const std::size_t n = universe->size();
  assert(fixed.size() == n);
  const std::vector<IndexedClause> indexed = index_clauses(clauses, *universe);
  bool has_empty_clause = false;
  const auto by_last = group_by_last_atom(indexed, n, has_empty_clause);
  if (has_empty_clause) {
    return false;
  }
  std::vector<bool> values(n, false);
  return extend(0, values, fixed, by_last);
}

}  // namespace dbmend
