#include "dbmend/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dbmend/errors.hpp"
#include "dbmend/parser.hpp"
#include "dbmend/repair.hpp"
#include "dbmend/report.hpp"
#include "dbmend/solver.hpp"
#include "dbmend/trivalent.hpp"

namespace dbmend {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitError = 2;
constexpr int kExitIcConflict = 3;
constexpr int kExitPartial = 4;

Database load_and_merge(const std::vector<std::string>& paths) {
  std::vector<Database> dbs;
  dbs.reserve(paths.size());
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      dbs.push_back(parse_problem(buffer.str()));
    } catch (const ParseError& e) {
      throw Error(path + ": " + e.what());
    }
  }
  return merge(dbs);
}

void emit_report(const RepairReport& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
}

void print_valuations(const std::vector<ThreeValuation>& valuations, std::ostream& out) {
  for (std::size_t v = 0; v < valuations.size(); ++v) {
    if (v > 0) {
      out << "\n";
    }
    const auto& universe = *valuations[v].universe();
    for (std::size_t i = 0; i < universe.size(); ++i) {
      out << universe.atom(i).to_string() << ":" << three_to_char(valuations[v].at(i)) << "\n";
    }
  }
}

struct RepairFlags {
  std::string criterion = "inclusion";
  std::string format = "text";
  std::size_t max_solutions = 0;
  std::size_t node_budget = SearchLimits{}.node_budget;
  std::vector<std::string> files;
};

void add_repair_flags(CLI::App* cmd, RepairFlags& flags, bool with_limits) {
  cmd->add_option("--criterion", flags.criterion, "Preference criterion")
      ->check(CLI::IsMember({"inclusion", "cardinality"}))
      ->capture_default_str();
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  auto* max = cmd->add_option("--max-solutions", flags.max_solutions,
                              "Stop after this many repairs (0 = all)");
  auto* budget = cmd->add_option("--node-budget", flags.node_budget, "Search node budget");
  if (!with_limits) {
    max->description("Accepted for flag compatibility; ignored");
    budget->description("Accepted for flag compatibility; ignored");
  }
  cmd->add_option("files", flags.files, "Problem files to merge")->required();
}

PreferenceCriterion to_criterion(const std::string& name) {
  return name == "cardinality" ? PreferenceCriterion::cardinality : PreferenceCriterion::inclusion;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dbmend: merge fact bases under shared integrity constraints and repair them"};
  app.require_subcommand(1);

  std::vector<std::string> check_files;
  auto* check_cmd = app.add_subcommand("check", "Merge the inputs and test consistency");
  check_cmd->add_option("files", check_files, "Problem files to merge")->required();

  RepairFlags repair_flags;
  auto* repair_cmd = app.add_subcommand("repair", "Compute all preferred repairs");
  add_repair_flags(repair_cmd, repair_flags, true);

  std::vector<std::string> models_files;
  std::string models_criterion = "inclusion";
  auto* models_cmd =
      app.add_subcommand("models", "List the maximally consistent three-valued models");
  models_cmd->add_option("--criterion", models_criterion, "Preference criterion")
      ->check(CLI::IsMember({"inclusion", "cardinality"}))
      ->capture_default_str();
  models_cmd->add_option("files", models_files, "Problem files to merge")->required();

  RepairFlags oracle_flags;
  std::size_t oracle_bound = kDefaultOracleBound;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force preferred repairs (cross-validation)");
  add_repair_flags(oracle_cmd, oracle_flags, false);
  oracle_cmd->add_option("--oracle-bound", oracle_bound, "Maximum candidate-universe size")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check_cmd->parsed()) {
      const Database db = load_and_merge(check_files);
      if (is_consistent(db)) {
        out << "consistent\n";
        return kExitOk;
      }
      out << "inconsistent\n";
      return kExitInconsistent;
    }
    if (repair_cmd->parsed()) {
      const Database db = load_and_merge(repair_flags.files);
      SearchLimits limits;
      limits.max_solutions = repair_flags.max_solutions;
      limits.node_budget = repair_flags.node_budget;
      const PreferenceCriterion criterion = to_criterion(repair_flags.criterion);
      RepairSearchResult result = preferred_repairs(db, criterion, limits);
      const RepairReport report =
          RepairReport::build(db, std::move(result.repairs), result.complete, criterion);
      emit_report(report, repair_flags.format, out);
      if (!result.complete) {
        err << "warning: search budget exhausted; repair set may be incomplete\n";
        return kExitPartial;
      }
      return kExitOk;
    }
    if (models_cmd->parsed()) {
      const Database db = load_and_merge(models_files);
      print_valuations(maximally_consistent(db, to_criterion(models_criterion)), out);
      return kExitOk;
    }
    if (oracle_cmd->parsed()) {
      const Database db = load_and_merge(oracle_flags.files);
      const PreferenceCriterion criterion = to_criterion(oracle_flags.criterion);
      std::vector<Repair> repairs = brute_force_preferred(db, criterion, oracle_bound);
      const RepairReport report = RepairReport::build(db, std::move(repairs), true, criterion);
      emit_report(report, oracle_flags.format, out);
      return kExitOk;
    }
  } catch (const IcConflictError& e) {
    err << "ic-conflict: " << e.what() << "\n";
    return kExitIcConflict;
  } catch (const NoRepairError& e) {
    err << "ic-conflict: " << e.what() << "\n";
    return kExitIcConflict;
  } catch (const NoModelError& e) {
    err << "ic-conflict: " << e.what() << "\n";
    return kExitIcConflict;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace dbmend
