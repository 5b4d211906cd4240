#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "algraph/field.hpp"

namespace algraph::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kInfeasible = 3,
  kOracleMismatch = 4,
};

struct RunConfig {
  std::string command;
  std::string input;  // path, or "-" for stdin
  u64 seed = 1;
  u64 prime = PrimeField::kMersenne61;
  int repeats = 1;
  bool oracle_check = false;
  std::string format = "json";  // json | text
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> c;
};

/// Runs one command; the result document goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and calls run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algraph::cli
