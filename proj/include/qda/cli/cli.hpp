#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qda/ratpoly/rational.hpp"

namespace qda::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kBoundary = 2,
  kManifestMismatch = 3,
};

enum class Format { text, json, csv, svg };

/// Options shared by the subcommands after parsing.
struct RunConfig {
  std::string command;
  std::optional<Rational> a, b, c, d;
  std::string sign_pattern;
  int pos = 0;
  int neg = 0;
  std::optional<std::string> out_dir;
  std::optional<Format> format;
  bool svg = false;
};

/// Runs the command line `args` (without the program name). Human-readable
/// results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qda::cli
