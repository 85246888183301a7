#include "dbmend/formula.hpp"

#include <utility>

namespace dbmend {

Formula Formula::truth(bool value) {
  Formula f;
  f.kind_ = value ? Kind::True : Kind::False;
  return f;
}

Formula Formula::atom(AtomPattern pattern) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.pattern_ = std::move(pattern);
  return f;
}

Formula Formula::atom(const GroundAtom& ga) {
  AtomPattern p{ga.predicate, {}};
  p.args.reserve(ga.args.size());
  for (const Constant& c : ga.args) {
    p.args.emplace_back(c);
  }
  return atom(std::move(p));
}

Formula Formula::equal(Term lhs, Term rhs) {
  Formula f;
  f.kind_ = Kind::Equality;
  f.terms_ = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::neg(Formula f) {
  Formula out;
  out.kind_ = Kind::Not;
  out.children_.push_back(std::move(f));
  return out;
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  Formula out;
  out.kind_ = Kind::And;
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  Formula out;
  out.kind_ = Kind::Or;
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  Formula out;
  out.kind_ = Kind::Implies;
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

Formula Formula::forall(std::string var, Formula body) {
  Formula out;
  out.kind_ = Kind::Forall;
  out.var_ = std::move(var);
  out.children_.push_back(std::move(body));
  return out;
}

Formula Formula::conj_of(std::vector<Formula> fs) {
  if (fs.empty()) {
    return truth(true);
  }
  Formula acc = std::move(fs.front());
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = conj(std::move(acc), std::move(fs[i]));
  }
  return acc;
}

Formula Formula::disj_of(std::vector<Formula> fs) {
  if (fs.empty()) {
    return truth(false);
  }
  Formula acc = std::move(fs.front());
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = disj(std::move(acc), std::move(fs[i]));
  }
  return acc;
}

bool Formula::is_ground() const {
  switch (kind_) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return pattern_.is_ground();
    case Kind::Equality:
      return is_constant(terms_[0]) && is_constant(terms_[1]);
    case Kind::Forall:
      return false;
    default:
      for (const Formula& c : children_) {
        if (!c.is_ground()) {
          return false;
        }
      }
      return true;
  }
}

void Formula::collect_free_variables(std::set<std::string>& out) const {
  switch (kind_) {
    case Kind::Atom:
      for (const Term& t : pattern_.args) {
        if (const auto* v = std::get_if<Variable>(&t)) {
          out.insert(v->name);
        }
      }
      return;
    case Kind::Equality:
      for (const Term& t : terms_) {
        if (const auto* v = std::get_if<Variable>(&t)) {
          out.insert(v->name);
        }
      }
      return;
    case Kind::Forall: {
      std::set<std::string> inner;
      children_[0].collect_free_variables(inner);
      inner.erase(var_);
      out.insert(inner.begin(), inner.end());
      return;
    }
    default:
      for (const Formula& c : children_) {
        c.collect_free_variables(out);
      }
      return;
  }
}

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> out;
  collect_free_variables(out);
  return out;
}

void Formula::collect_constants(std::set<Constant>& out) const {
  switch (kind_) {
    case Kind::Atom:
      for (const Term& t : pattern_.args) {
        if (const auto* c = std::get_if<Constant>(&t)) {
          out.insert(*c);
        }
      }
      return;
    case Kind::Equality:
      for (const Term& t : terms_) {
        if (const auto* c = std::get_if<Constant>(&t)) {
          out.insert(*c);
        }
      }
      return;
    default:
      for (const Formula& c : children_) {
        c.collect_constants(out);
      }
      return;
  }
}

void Formula::collect_atoms(std::set<GroundAtom>& out) const {
  if (kind_ == Kind::Atom) {
    if (pattern_.is_ground()) {
      out.insert(pattern_.to_ground());
    }
    return;
  }
  for (const Formula& c : children_) {
    c.collect_atoms(out);
  }
}

namespace {

Term substitute_term(const Term& t, const std::map<std::string, Constant>& binding) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    auto it = binding.find(v->name);
    if (it != binding.end()) {
      return it->second;
    }
  }
  return t;
}

}  // namespace

Formula Formula::substitute(const std::map<std::string, Constant>& binding) const {
  switch (kind_) {
    case Kind::True:
    case Kind::False:
      return *this;
    case Kind::Atom: {
      AtomPattern p{pattern_.predicate, {}};
      p.args.reserve(pattern_.args.size());
      for (const Term& t : pattern_.args) {
        p.args.push_back(substitute_term(t, binding));
      }
      return atom(std::move(p));
    }
    case Kind::Equality:
      return equal(substitute_term(terms_[0], binding), substitute_term(terms_[1], binding));
    case Kind::Not:
      return neg(children_[0].substitute(binding));
    case Kind::And:
      return conj(children_[0].substitute(binding), children_[1].substitute(binding));
    case Kind::Or:
      return disj(children_[0].substitute(binding), children_[1].substitute(binding));
    case Kind::Implies:
      return implies(children_[0].substitute(binding), children_[1].substitute(binding));
    case Kind::Forall: {
      // The bound variable shadows any outer binding of the same name.
      std::map<std::string, Constant> inner = binding;
      inner.erase(var_);
      return forall(var_, children_[0].substitute(inner));
    }
  }
  return *this;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (const auto cmp = kind_ <=> other.kind_; cmp != 0) {
    return cmp;
  }
  if (const auto cmp = pattern_ <=> other.pattern_; cmp != 0) {
    return cmp;
  }
  if (const auto cmp = terms_ <=> other.terms_; cmp != 0) {
    return cmp;
  }
  if (const auto cmp = var_ <=> other.var_; cmp != 0) {
    return cmp;
  }
  if (const auto cmp = children_.size() <=> other.children_.size(); cmp != 0) {
    return cmp;
  }
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (const auto cmp = children_[i] <=> other.children_[i]; cmp != 0) {
      return cmp;
    }
  }
  return std::strong_ordering::equal;
}

std::string Formula::to_string() const {
  switch (kind_) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Atom:
      return pattern_.to_string();
    case Kind::Equality:
      return term_to_string(terms_[0]) + " = " + term_to_string(terms_[1]);
    case Kind::Not:
      return "~(" + children_[0].to_string() + ")";
    case Kind::And:
      return "(" + children_[0].to_string() + " & " + children_[1].to_string() + ")";
    case Kind::Or:
      return "(" + children_[0].to_string() + " | " + children_[1].to_string() + ")";
    case Kind::Implies:
      return "(" + children_[0].to_string() + " -> " + children_[1].to_string() + ")";
    case Kind::Forall:
      return "forall " + var_ + " (" + children_[0].to_string() + ")";
  }
  return "?";
}

}  // namespace dbmend
