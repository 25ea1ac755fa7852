#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "malg/core.hpp"

namespace malg {

/// One named verdict of a command.
struct Check {
  std::string name;
  Verdict verdict;
  std::string witness_symbol;  // symbol name when the witness names one
};

struct Count {
  std::string name;
  std::uint64_t value = 0;
};

/// A named piece of output: a structure file, a morphism list, a value.
struct Output {
  std::string name;
  std::string text;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<Count> counts;
  std::vector<Output> outputs;
  std::string error;  // usage, parse or cap error
  int exit_code = 0;
  double elapsed_ms = 0;

  /// All checks pass and no error was recorded.
  [[nodiscard]] bool ok() const;
  void check(std::string name, Verdict v, std::string witness_symbol = {});
  void count(std::string name, std::uint64_t value);
  void output(std::string name, std::string text);
};

/// Verdict lines in recording order, then counts and outputs, then the
/// overall verdict and elapsed time.
std::string render_text(const Report& r);
nlohmann::ordered_json render_json(const Report& r);

}  // namespace malg
