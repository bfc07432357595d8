#pragma once

// Command-line front end. Exit codes: 0 success, 1 a check reported
// failure, 2 invalid input.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace thhmay::cli {

struct RunConfig {
  std::string command;
  std::optional<std::string> algebra;
  std::optional<std::string> module;
  std::string space = "circle";
  int max_internal = 12;
  int max_level = 6;
  int r_max = 4;
  std::string format = "tsv";
  std::uint64_t seed = 1;
  int trials = 50;
  // poincare / vanishing
  std::uint32_t p = 3;
  int n = 2;
  int N = 10;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and calls run().
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thhmay::cli
