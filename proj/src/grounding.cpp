#include "dbmend/grounding.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "dbmend/errors.hpp"

namespace dbmend {

std::set<Constant> active_domain(const Database& db) {
  std::set<Constant> out = db.declared_domain;
  for (const GroundAtom& atom : db.instance) {
    out.insert(atom.args.begin(), atom.args.end());
  }
  for (const Constraint& c : db.constraints) {
    const std::set<Constant> cs = c.constants();
    out.insert(cs.begin(), cs.end());
  }
  return out;
}

namespace {

// Enumerates all assignments of `domain` constants to `vars`, invoking
// `fn` with each complete binding. With no variables, `fn` runs once on
// the empty binding.
void for_each_assignment(const std::vector<std::string>& vars,
                         const std::vector<Constant>& domain,
                         std::map<std::string, Constant>& binding,
                         std::size_t depth,
                         auto&& fn) {
  if (depth == vars.size()) {
    fn(binding);
    return;
  }
  for (const Constant& c : domain) {
    binding[vars[depth]] = c;
    for_each_assignment(vars, domain, binding, depth + 1, fn);
  }
  binding.erase(vars[depth]);
}

Constant resolve(const Term& t, const std::map<std::string, Constant>& binding) {
  if (const auto* c = std::get_if<Constant>(&t)) {
    return *c;
  }
  return binding.at(std::get<Variable>(t).name);
}

GroundAtom instantiate(const AtomPattern& pattern, const std::map<std::string, Constant>& binding) {
  GroundAtom atom{pattern.predicate, {}};
  atom.args.reserve(pattern.args.size());
  for (const Term& t : pattern.args) {
    atom.args.push_back(resolve(t, binding));
  }
  return atom;
}

// Builds the clause for one assignment; nullopt when it reduces to true.
std::optional<GroundClause> reduce(const Constraint& c, const std::map<std::string, Constant>& binding) {
  std::vector<GroundAtom> body;
  for (const ConstraintLiteral& lit : c.body()) {
    if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
      body.push_back(instantiate(*atom, binding));
      continue;
    }
    const auto& eq = std::get<TermEquality>(lit);
    const bool holds = (resolve(eq.lhs, binding) == resolve(eq.rhs, binding)) != eq.negated;
    if (!holds) {
      return std::nullopt;  // false conjunct: the implication is true
    }
  }
  std::vector<GroundAtom> head;
  for (const ConstraintLiteral& lit : c.head()) {
    if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
      head.push_back(instantiate(*atom, binding));
      continue;
    }
    const auto& eq = std::get<TermEquality>(lit);
    const bool holds = (resolve(eq.lhs, binding) == resolve(eq.rhs, binding)) != eq.negated;
    if (holds) {
      return std::nullopt;  // true disjunct: the implication is true
    }
  }
  return GroundClause::make(std::move(body), std::move(head));
}

}  // namespace

std::vector<GroundClause> ground(const Constraint& c, const std::set<Constant>& domain) {
  if (!c.head_variables_safe()) {
    throw MalformedConstraintError("unbound head variable in constraint: " + c.to_string());
  }
  const std::set<std::string> var_set = c.variables();
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::vector<Constant> dom(domain.begin(), domain.end());

  std::set<GroundClause> out;
  if (!vars.empty() && dom.empty()) {
    return {};  // no assignments exist
  }
  std::map<std::string, Constant> binding;
  for_each_assignment(vars, dom, binding, 0, [&](const std::map<std::string, Constant>& b) {
    if (std::optional<GroundClause> clause = reduce(c, b)) {
      out.insert(std::move(*clause));
    }
  });
  return {out.begin(), out.end()};
}

std::vector<GroundClause> ground_theory(const Database& db) {
  const std::set<Constant> domain = active_domain(db);
  std::set<GroundClause> out;
  for (const Constraint& c : db.constraints) {
    for (GroundClause& clause : ground(c, domain)) {
      out.insert(std::move(clause));
    }
  }
  return {out.begin(), out.end()};
}

std::set<GroundAtom> candidate_universe(const Database& db) {
  std::set<GroundAtom> out = db.instance;
  for (const GroundClause& clause : ground_theory(db)) {
    clause.collect_atoms(out);
  }
  return out;
}

namespace {

// Replaces every Forall node by the conjunction of its instances.
Formula expand_quantifiers(const Formula& f, const std::vector<Constant>& dom) {
  switch (f.kind()) {
    case Formula::Kind::Forall: {
      std::vector<Formula> instances;
      instances.reserve(dom.size());
      for (const Constant& c : dom) {
        const std::map<std::string, Constant> binding{{f.bound_var(), c}};
        instances.push_back(expand_quantifiers(f.child(0).substitute(binding), dom));
      }
      return Formula::conj_of(std::move(instances));
    }
    case Formula::Kind::Not:
      return Formula::neg(expand_quantifiers(f.child(0), dom));
    case Formula::Kind::And:
      return Formula::conj(expand_quantifiers(f.child(0), dom), expand_quantifiers(f.child(1), dom));
    case Formula::Kind::Or:
      return Formula::disj(expand_quantifiers(f.child(0), dom), expand_quantifiers(f.child(1), dom));
    case Formula::Kind::Implies:
      return Formula::implies(expand_quantifiers(f.child(0), dom), expand_quantifiers(f.child(1), dom));
    default:
      return f;
  }
}

}  // namespace

std::vector<Formula> ground_formula(const Formula& f, const std::set<Constant>& domain) {
  const std::set<std::string> var_set = f.free_variables();
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::vector<Constant> dom(domain.begin(), domain.end());
  if (!vars.empty() && dom.empty()) {
    return {};
  }
  std::set<Formula> out;
  std::map<std::string, Constant> binding;
  for_each_assignment(vars, dom, binding, 0, [&](const std::map<std::string, Constant>& b) {
    out.insert(expand_quantifiers(f.substitute(b), dom));
  });
  return {out.begin(), out.end()};
}

}  // namespace dbmend
