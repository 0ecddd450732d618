#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnotpac/cli/json_io.hpp"

namespace cnotpac::cli {

inline constexpr const char* kVersion = "cnotpac 0.1.0";

/// Summary of one command run. Everything except wall_seconds is a function
/// of the inputs and the seed; `digest` covers exactly those fields.
struct RunReport {
  std::string command;
  std::string input_digest;
  std::optional<std::uint64_t> seed;
  std::string outcome;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  double wall_seconds = 0;

  io::json to_json() const;
  std::string digest() const;
};

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 found / consistent, 1 none / inconsistent, 2 usage, input or limit error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnotpac::cli
