#include "dbmend/atom.hpp"

#include <cassert>

namespace dbmend {

std::string term_to_string(const Term& t) {
  if (const auto* c = std::get_if<Constant>(&t)) {
    return c->name;
  }
  return std::get<Variable>(t).name;
}

namespace {

template <typename Arg, typename ToString>
std::string render_atom(const std::string& predicate, const std::vector<Arg>& args, ToString&& str) {
  if (args.empty()) {
    return predicate;
  }
  std::string out = predicate;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += str(args[i]);
  }
  out += ')';
  return out;
}

}  // namespace

std::string GroundAtom::to_string() const {
  return render_atom(predicate, args, [](const Constant& c) { return c.name; });
}

bool AtomPattern::is_ground() const {
  for (const Term& t : args) {
    if (is_variable(t)) {
      return false;
    }
  }
  return true;
}

GroundAtom AtomPattern::to_ground() const {
  assert(is_ground());
  GroundAtom atom{predicate, {}};
  atom.args.reserve(args.size());
  for (const Term& t : args) {
    atom.args.push_back(std::get<Constant>(t));
  }
  return atom;
}

std::string AtomPattern::to_string() const {
  return render_atom(predicate, args, term_to_string);
}

}  // namespace dbmend
