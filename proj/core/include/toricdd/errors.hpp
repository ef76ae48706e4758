#pragma once

#include <stdexcept>
#include <string>

namespace toricdd {

/// Thrown when an enumeration would exceed its configured budget or a
/// brute-force oracle is asked to run beyond its size guard.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default cap on enumerated words, linear extensions and facets.
inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

}  // namespace toricdd
