#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "invstar/rational.hpp"

namespace invstar::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_verification_failed = 2,
  exit_singular_character = 3,
  exit_window = 4,
  exit_spec = 5,
};

enum class Format { text, json };

struct RunConfig {
  std::string builtin;
  std::string spec_path;
  std::map<std::string, Rational> params;
  std::optional<int> cutoff;
  int hbar_order = 2;
  int degree = 1;
  int max_degree = 4;
  Format format = Format::text;
  std::string output;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// Parses "k=v,k=v" into params; throws SpecError.
void parse_params(const std::string& text, std::map<std::string, Rational>& params);

/// Runs one command line.  Output goes to `out` (or the --output file),
/// notices and errors to `err`.  Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invstar::cli
