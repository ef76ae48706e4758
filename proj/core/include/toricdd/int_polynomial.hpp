#pragma once

#include "toricdd/bigint.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace toricdd {

/// Univariate polynomial in t with arbitrary-precision integer coefficients;
/// coefficient s multiplies t^s. The top coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  /// Zero beyond the degree.
  BigInt coefficient(int power) const;
  BigInt evaluate(const BigInt& t) const;

  /// Coefficient sequence reads the same backwards.
  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;

  /// Drops every term of degree > max_degree.
  IntPolynomial truncated(int max_degree) const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;

  /// (1 - t)^exponent.
  static IntPolynomial one_minus_t_power(int exponent);

  /// e.g. `1 + 4t + t^2`
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coefficients_;
};

}  // namespace toricdd
