#pragma once

#include "toricdd/bigint.hpp"
#include "toricdd/variables.hpp"

#include <map>
#include <string>
#include <vector>

namespace toricdd {

/// A monomial in the x_{ij}^k, as the variable multiset sorted by
/// RVariable order (greatest variable first).
using Monomial = std::vector<RVariable>;

Monomial make_monomial(std::vector<RVariable> variables);
Monomial to_monomial(const Term& term);

/// Lexicographic order induced by the diagonal variable order.
struct DiagonalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool divides(const Monomial& divisor, const Monomial& multiple);
/// multiple / divisor; requires divides(divisor, multiple).
Monomial quotient(const Monomial& multiple, const Monomial& divisor);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& monomial);

/// Integer polynomial in the x_{ij}^k. Terms are kept in decreasing
/// diagonal order, so the first term is the leading term. No zero
/// coefficients are stored.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, BigInt, DiagonalGreater>;

  SparsePoly() = default;
  static SparsePoly monomial(const Monomial& m, const BigInt& coefficient = 1);
  static SparsePoly from_binomial(const RBinomial& binomial);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Throws std::domain_error on the zero polynomial.
  const Monomial& leading_monomial() const;
  const BigInt& leading_coefficient() const;

  void add_term(const Monomial& m, const BigInt& coefficient);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator-() const;

  SparsePoly scaled(const BigInt& factor, const Monomial& shift) const;

  std::string to_string() const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  TermMap terms_;
};

}  // namespace toricdd
