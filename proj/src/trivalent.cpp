#include "dbmend/trivalent.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "dbmend/errors.hpp"
#include "dbmend/grounding.hpp"
#include "dbmend/repair.hpp"

namespace dbmend {

ThreeValuation::ThreeValuation(UniversePtr universe, std::vector<Three> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_ || universe_->size() != values_.size()) {
    throw UniverseMismatchError("valuation size does not match its universe");
  }
}

Three ThreeValuation::at(const GroundAtom& atom) const {
  const auto index = universe_->index_of(atom);
  if (!index) {
    throw UniverseMismatchError("atom outside universe: " + atom.to_string());
  }
  return values_[*index];
}

std::set<GroundAtom> ThreeValuation::top_set() const {
  std::set<GroundAtom> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == Three::both) {
      out.insert(universe_->atom(i));
    }
  }
  return out;
}

bool ThreeValuation::operator==(const ThreeValuation& other) const {
  return same_universe(universe_, other.universe_) && values_ == other.values_;
}

ThreeValuation embed3(const TwoValuation& v) {
  std::vector<Three> values(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    values[i] = three_of(v.at(i));
  }
  return ThreeValuation(v.universe(), std::move(values));
}

Three eval3(const ThreeValuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return Three::t;
    case Formula::Kind::False:
      return Three::f;
    case Formula::Kind::Atom:
      if (!f.pattern().is_ground()) {
        throw std::logic_error("eval3: non-ground atom " + f.pattern().to_string());
      }
      return v.at(f.pattern().to_ground());
    case Formula::Kind::Equality: {
      if (!is_constant(f.lhs()) || !is_constant(f.rhs())) {
        throw std::logic_error("eval3: non-ground equality");
      }
      // Unique names leave no room for contradictory identities.
      return three_of(std::get<Constant>(f.lhs()) == std::get<Constant>(f.rhs()));
    }
    case Formula::Kind::Not:
      return neg3(eval3(v, f.child(0)));
    case Formula::Kind::And:
      return and3(eval3(v, f.child(0)), eval3(v, f.child(1)));
    case Formula::Kind::Or:
      return or3(eval3(v, f.child(0)), eval3(v, f.child(1)));
    case Formula::Kind::Implies:
      return implies3(eval3(v, f.child(0)), eval3(v, f.child(1)));
    case Formula::Kind::Forall:
      throw std::logic_error("eval3: quantifier in ground formula");
  }
  return Three::f;
}

Three eval3(const ThreeValuation& v, const GroundClause& clause) {
  Three body = Three::t;
  for (const GroundAtom& b : clause.body) {
    body = and3(body, v.at(b));
  }
  Three head = Three::f;
  for (const GroundAtom& h : clause.head) {
    head = or3(head, v.at(h));
  }
  if (clause.head.empty()) {
    return neg3(body);
  }
  if (clause.body.empty()) {
    return head;
  }
  return implies3(body, head);
}

bool satisfies3(const ThreeValuation& v, const Formula& f) { return designated(eval3(v, f)); }

bool is_model3(const ThreeValuation& v, const std::vector<Formula>& theory) {
  return std::all_of(theory.begin(), theory.end(),
                     [&](const Formula& f) { return satisfies3(v, f); });
}

bool is_model3(const ThreeValuation& v, const std::vector<GroundClause>& theory) {
  return std::all_of(theory.begin(), theory.end(),
                     [&](const GroundClause& c) { return designated(eval3(v, c)); });
}

ThreeValuation knowledge_join(const TwoValuation& h, const TwoValuation& m) {
  if (!same_universe(h.universe(), m.universe())) {
    throw UniverseMismatchError("knowledge_join over different universes");
  }
  std::vector<Three> values(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    values[i] = oplus(three_of(h.at(i)), three_of(m.at(i)));
  }
  return ThreeValuation(h.universe(), std::move(values));
}

std::set<GroundAtom> insert_of(const ThreeValuation& v, const std::set<GroundAtom>& instance) {
  std::set<GroundAtom> out;
  for (const GroundAtom& atom : v.top_set()) {
    if (!instance.contains(atom)) {
      out.insert(atom);
    }
  }
  return out;
}

std::set<GroundAtom> retract_of(const ThreeValuation& v, const std::set<GroundAtom>& instance) {
  std::set<GroundAtom> out;
  for (const GroundAtom& atom : v.top_set()) {
    if (instance.contains(atom)) {
      out.insert(atom);
    }
  }
  return out;
}

namespace {

// Search for a classical model of the clauses that agrees with the given
// values outside the `free` positions. Independent of the repair engine;
// this is the membership test of the model-theoretic route.
bool completion_exists(const std::vector<GroundClause>& clauses,
                       const UniversePtr& universe,
                       const std::vector<bool>& base,
                       const std::vector<bool>& free) {
  std::vector<signed char> fixed(universe->size());
  for (std::size_t i = 0; i < universe->size(); ++i) {
    fixed[i] = free[i] ? static_cast<signed char>(-1) : static_cast<signed char>(base[i]);
  }
  return satisfiable_with_fixed(clauses, universe, fixed);
}

}  // namespace

bool in_mdb(const ThreeValuation& v, const Database& db) {
  const std::set<GroundAtom> atoms = candidate_universe(db);
  const UniversePtr universe = make_universe(atoms);
  if (!same_universe(v.universe(), universe)) {
    throw UniverseMismatchError("valuation must range over the candidate universe");
  }
  const std::size_t n = universe->size();

  // Off the top set the valuation must agree with the minimal Herbrand
  // model; the top set is left free for the witness model.
  std::vector<bool> base(n, false);
  std::vector<bool> free(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const bool stored = db.instance.contains(universe->atom(i));
    switch (v.at(i)) {
      case Three::both:
        free[i] = true;
        break;
      case Three::t:
        if (!stored) {
          return false;
        }
        base[i] = true;
        break;
      case Three::f:
        if (stored) {
          return false;
        }
        break;
    }
  }
  return completion_exists(ground_theory(db), universe, base, free);
}

std::vector<ThreeValuation> maximally_consistent(const Database& db, PreferenceCriterion criterion) {
  const std::set<GroundAtom> atoms = candidate_universe(db);
  const UniversePtr universe = make_universe(atoms);
  const std::size_t n = universe->size();
  const std::vector<GroundClause> clauses = ground_theory(db);

  if (!satisfiable(clauses, universe)) {
    throw NoModelError("constraints have no classical model over the candidate universe");
  }

  std::vector<bool> herbrand(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    herbrand[i] = db.instance.contains(universe->atom(i));
  }

  // Enumerate candidate top sets by ascending size, lexicographic within
  // a size. Accepted sets are subset-minimal because every proper subset
  // has been tried before its supersets.
  std::vector<std::vector<std::size_t>> accepted;
  auto dominated = [&](const std::vector<std::size_t>& top) {
    for (const auto& small : accepted) {
      if (std::includes(top.begin(), top.end(), small.begin(), small.end())) {
        return true;
      }
    }
    return false;
  };
  auto is_member = [&](const std::vector<std::size_t>& top) {
    std::vector<bool> free(n, false);
    for (const std::size_t i : top) {
      free[i] = true;
    }
    return completion_exists(clauses, universe, herbrand, free);
  };

  for (std::size_t k = 0; k <= n; ++k) {
    if (criterion == PreferenceCriterion::cardinality && !accepted.empty()) {
      break;  // all minimum-size members found at the previous size
    }
    // Combination enumeration in lexicographic index order.
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) {
      combo[i] = i;
    }
    while (true) {
      if ((criterion == PreferenceCriterion::cardinality || !dominated(combo)) && is_member(combo)) {
        accepted.push_back(combo);
      }
      // Next combination.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + (i - 1)) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        combo[j] = combo[j - 1] + 1;
      }
    }
  }

  std::vector<ThreeValuation> out;
  out.reserve(accepted.size());
  for (const auto& top : accepted) {
    std::vector<Three> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = three_of(herbrand[i]);
    }
    for (const std::size_t i : top) {
      values[i] = Three::both;
    }
    out.emplace_back(universe, std::move(values));
  }
  return out;
}

ThreeValuation repair_to_model3(const Database& db, const Repair& r) {
  if (!is_repair(db, r)) {
    throw InvalidRepairError("not a repair: " + r.to_string());
  }
  std::set<GroundAtom> atoms = candidate_universe(db);
  atoms.insert(r.insert.begin(), r.insert.end());
  const UniversePtr universe = make_universe(atoms);

  std::vector<Three> values(universe->size());
  for (std::size_t i = 0; i < universe->size(); ++i) {
    const GroundAtom& atom = universe->atom(i);
    if (r.insert.contains(atom) || r.retract.contains(atom)) {
      values[i] = Three::both;
    } else {
      values[i] = three_of(db.instance.contains(atom));
    }
  }
  return ThreeValuation(universe, std::move(values));
}

}  // namespace dbmend
