#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dbmend {

// Command dispatch for the dbmend tool. Reports go to `out`, diagnostics
// to `err`. Exit status: 0 success (or consistent), 1 inconsistent
// (check), 2 usage/parse/IO error, 3 unsatisfiable merged constraints,
// 4 search budget exhausted (partial report emitted).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbmend
