#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "eqconic/nodal.hpp"

namespace eqconic {

struct RunConfig {
  std::string command;  ///< verify-all, verify, counterexample, marks, theorem-sweep, pencil
  std::string target;   ///< klein or d8, for counterexample
  std::string group;
  std::string sigma;
  std::string a = "1";
  std::string b = "1";
  std::string c = "1";
  std::string d = "1";
  int case_number = 0;  ///< 1..9, or 0 for every D8 case
  std::string f;
  std::string g;
  std::string format = "text";
  std::string output;   ///< empty for the given stream
};

enum ExitCode : int { kExpected = 0, kUnexpected = 1, kInvalid = 2 };

/// Runs one command, writing the report to `out` (or to config.output) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SweepCell {
  std::string group;  ///< preset name
  std::string type;   ///< abstract isomorphism type
  VerificationReport report;
};

/// verify_all over one preset per conjugacy class of subgroups of S4.
std::vector<SweepCell> theorem_sweep();

/// True if every unequal cell has abstract type Z2xZ2 or D8, and both the
/// normal Klein group and D8 have an unequal cell.
bool sweep_matches_scope(const std::vector<SweepCell>& cells);

}  // namespace eqconic
