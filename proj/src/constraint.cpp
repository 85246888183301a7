#include "dbmend/constraint.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dbmend {

std::string TermEquality::to_string() const {
  return term_to_string(lhs) + (negated ? " != " : " = ") + term_to_string(rhs);
}

std::string literal_to_string(const ConstraintLiteral& lit) {
  if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
    return atom->to_string();
  }
  return std::get<TermEquality>(lit).to_string();
}

namespace {

void visit_terms(const std::vector<ConstraintLiteral>& lits, auto&& fn) {
  for (const ConstraintLiteral& lit : lits) {
    if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
      for (const Term& t : atom->args) {
        fn(t);
      }
    } else {
      const auto& eq = std::get<TermEquality>(lit);
      fn(eq.lhs);
      fn(eq.rhs);
    }
  }
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& renaming) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    return Variable{renaming.at(v->name)};
  }
  return t;
}

std::vector<ConstraintLiteral> rename_literals(std::vector<ConstraintLiteral> lits,
                                               const std::map<std::string, std::string>& renaming) {
  for (ConstraintLiteral& lit : lits) {
    if (auto* atom = std::get_if<AtomPattern>(&lit)) {
      for (Term& t : atom->args) {
        t = rename_term(t, renaming);
      }
    } else {
      auto& eq = std::get<TermEquality>(lit);
      eq.lhs = rename_term(eq.lhs, renaming);
      eq.rhs = rename_term(eq.rhs, renaming);
    }
  }
  return lits;
}

}  // namespace

Constraint::Constraint(std::vector<ConstraintLiteral> body, std::vector<ConstraintLiteral> head) {
  // Rename variables to X1, X2, ... by first occurrence (body before head).
  std::map<std::string, std::string> renaming;
  auto assign = [&](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (!renaming.contains(v->name)) {
        renaming.emplace(v->name, "X" + std::to_string(renaming.size() + 1));
      }
    }
  };
  visit_terms(body, assign);
  visit_terms(head, assign);
  body_ = rename_literals(std::move(body), renaming);
  head_ = rename_literals(std::move(head), renaming);
}

std::set<std::string> Constraint::variables() const {
  std::set<std::string> out;
  auto collect = [&](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      out.insert(v->name);
    }
  };
  visit_terms(body_, collect);
  visit_terms(head_, collect);
  return out;
}

std::set<Constant> Constraint::constants() const {
  std::set<Constant> out;
  auto collect = [&](const Term& t) {
    if (const auto* c = std::get_if<Constant>(&t)) {
      out.insert(*c);
    }
  };
  visit_terms(body_, collect);
  visit_terms(head_, collect);
  return out;
}

std::set<std::string> Constraint::body_atom_variables() const {
  std::set<std::string> out;
  for (const ConstraintLiteral& lit : body_) {
    if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
      for (const Term& t : atom->args) {
        if (const auto* v = std::get_if<Variable>(&t)) {
          out.insert(v->name);
        }
      }
    }
  }
  return out;
}

bool Constraint::head_variables_safe() const {
  const std::set<std::string> bound = body_atom_variables();
  bool safe = true;
  visit_terms(head_, [&](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (!bound.contains(v->name)) {
        safe = false;
      }
    }
  });
  return safe;
}

bool Constraint::range_restricted() const {
  const std::set<std::string> bound = body_atom_variables();
  for (const std::string& v : variables()) {
    if (!bound.contains(v)) {
      return false;
    }
  }
  return true;
}

namespace {

Formula literal_to_formula(const ConstraintLiteral& lit) {
  if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
    return Formula::atom(*atom);
  }
  const auto& eq = std::get<TermEquality>(lit);
  Formula f = Formula::equal(eq.lhs, eq.rhs);
  return eq.negated ? Formula::neg(std::move(f)) : f;
}

}  // namespace

Formula Constraint::to_formula() const {
  std::vector<Formula> body_fs;
  body_fs.reserve(body_.size());
  for (const ConstraintLiteral& lit : body_) {
    body_fs.push_back(literal_to_formula(lit));
  }
  if (head_.empty()) {
    return Formula::neg(Formula::conj_of(std::move(body_fs)));
  }
  std::vector<Formula> head_fs;
  head_fs.reserve(head_.size());
  for (const ConstraintLiteral& lit : head_) {
    head_fs.push_back(literal_to_formula(lit));
  }
  return Formula::implies(Formula::conj_of(std::move(body_fs)), Formula::disj_of(std::move(head_fs)));
}

std::string Constraint::to_string() const {
  auto join = [](const std::vector<ConstraintLiteral>& lits, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i > 0) {
        out += sep;
      }
      out += literal_to_string(lits[i]);
    }
    return out;
  };
  if (is_denial()) {
    return "ic :- " + join(body_, ", ") + ".";
  }
  return "ic " + join(body_, ", ") + " -> " + join(head_, " ; ") + ".";
}

GroundClause GroundClause::make(std::vector<GroundAtom> body, std::vector<GroundAtom> head) {
  auto canonicalize = [](std::vector<GroundAtom>& atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  };
  canonicalize(body);
  canonicalize(head);
  return GroundClause{std::move(body), std::move(head)};
}

bool GroundClause::satisfied_by(const std::set<GroundAtom>& true_atoms) const {
  for (const GroundAtom& b : body) {
    if (!true_atoms.contains(b)) {
      return true;
    }
  }
  for (const GroundAtom& h : head) {
    if (true_atoms.contains(h)) {
      return true;
    }
  }
  return false;
}

void GroundClause::collect_atoms(std::set<GroundAtom>& out) const {
  out.insert(body.begin(), body.end());
  out.insert(head.begin(), head.end());
}

Formula GroundClause::to_formula() const {
  std::vector<Formula> head_fs;
  head_fs.reserve(head.size());
  for (const GroundAtom& h : head) {
    head_fs.push_back(Formula::atom(h));
  }
  if (body.empty()) {
    return Formula::disj_of(std::move(head_fs));
  }
  std::vector<Formula> body_fs;
  body_fs.reserve(body.size());
  for (const GroundAtom& b : body) {
    body_fs.push_back(Formula::atom(b));
  }
  if (head.empty()) {
    // Denials evaluate as the negated body.
    return Formula::neg(Formula::conj_of(std::move(body_fs)));
  }
  return Formula::implies(Formula::conj_of(std::move(body_fs)), Formula::disj_of(std::move(head_fs)));
}

std::string GroundClause::to_string() const {
  auto join = [](const std::vector<GroundAtom>& atoms, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i > 0) {
        out += sep;
      }
      out += atoms[i].to_string();
    }
    return out;
  };
  if (head.empty()) {
    return ":- " + join(body, ", ") + ".";
  }
  if (body.empty()) {
    return join(head, " ; ") + ".";
  }
  return join(body, ", ") + " -> " + join(head, " ; ") + ".";
}

}  // namespace dbmend
