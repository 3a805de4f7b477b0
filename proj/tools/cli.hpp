#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "casselman/verify.hpp"

namespace casselman::cli {

enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  std::string command;  // table | verify | scan | reproduce
  std::string type = "A";
  int rank = 2;
  std::string matrix = "m";  // r | rp | m | mp | R | P | Q | c
  std::string format = "json";
  RunOptions run;
  std::string output;  // empty: standard output
  std::string suite = "all";
  std::string conjecture;
  std::string target;
  bool only_pq_one = false;
};

// Parses argv and runs the command. Output goes to cfg.output or `out`;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs an already parsed configuration and writes the document to `out`.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace casselman::cli
