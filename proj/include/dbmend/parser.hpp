#pragma once

#include <string>
#include <string_view>

#include "dbmend/database.hpp"

namespace dbmend {

// Parses one problem file. Grammar:
//
//   % comment to end of line
//   domain a, b, c.                          domain declaration
//   pred(c1,...,ck).                         fact (bare `pred.` when 0-ary)
//   ic :- L1, ..., Ln.                       denial constraint
//   ic B1, ..., Bn -> H1 ; ... ; Hm.         implication constraint
//
// Each Li/Bi/Hj is an atom, `s = t` or `s != t`. Lowercase-initial
// tokens are constants (or predicates, by position), uppercase-initial
// tokens are variables, implicitly universally quantified. Predicates
// acquire their arity from first use; a second arity is an error. Every
// constraint variable must occur in some body atom.
//
// Throws ParseError with line/column on any violation.
Database parse_problem(std::string_view text);

// Canonical text for a database: domain declaration first (when any
// constants are declared), then facts and constraints, each sorted.
// parse_problem(print_problem(db)) == db.
std::string print_problem(const Database& db);

}  // namespace dbmend
