#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chernob/chern.hpp"

namespace chernob::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_hypothesis = 2,
  exit_parse = 3,
  exit_cap = 4,
  exit_disagreement = 5,
};

struct ProblemSpec {
  VarietyInput variety;
  FormCollection collection;
};

/// Reads the line-oriented problem format:
///
///   ring x, y, z;
///   variety: y^2 - x^3;
///   dim 2;
///   normalization (t, s) -> (t^2, t^3, s);
///   collection k=1: (0, x^3, z^2), (z^3, 0, x^2);
///   collection k=1: (y^2, z^3, 0), (0, y^3, z^2);
///
/// '#' starts a comment, ';' ends a statement, `variety:` and `singular:`
/// may repeat. Errors are ParseError carrying the 1-based line number.
ProblemSpec parse_input_file(std::string_view text);

/// Echo of a parsed problem in the input format.
std::string format_problem(const ProblemSpec& spec);

std::string format_report_text(const ChernReport& report);
std::string format_report_json(const ChernReport& report);

/// Runs one command (args exclude the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chernob::cli
