#pragma once

#include <iosfwd>
#include <string>

namespace toricdd::cli {

struct RunConfig {
  std::string command;
  int m = 0;
  int n = 0;
  int r = 0;
  /// text, json, csv; facets also accepts words and paths.
  std::string format = "text";
  unsigned long long budget = 10'000'000ULL;
  int max_degree = 6;
  std::string word;
  std::string vertices;
  /// verify only: formulas, complex or groebner (each includes the previous).
  std::string level = "groebner";
  /// hilbert and hpoly: use this poset instead of P_{mnr}.
  std::string poset_file;
};

/// Exit status: 0 success, 1 a verification failed, 2 invalid input or budget.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace toricdd::cli
