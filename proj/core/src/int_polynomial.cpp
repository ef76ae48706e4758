#include "toricdd/int_polynomial.hpp"

#include <algorithm>

namespace toricdd {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) {
    coefficients_.emplace_back(c);
  }
  normalize();
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) {
    return 0;
  }
  return coefficients_[static_cast<std::size_t>(power)];
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * t + *it;
  }
  return value;
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coefficients_.begin(), coefficients_.end(), coefficients_.rbegin());
}

bool IntPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) {
    return {};
  }
  std::vector<BigInt> kept(coefficients_.begin(),
                           coefficients_.begin() + std::min<std::size_t>(coefficients_.size(), max_degree + 1));
  return IntPolynomial(std::move(kept));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<BigInt> sum(std::max(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t s = 0; s < sum.size(); ++s) {
    sum[s] = coefficient(static_cast<int>(s)) + other.coefficient(static_cast<int>(s));
  }
  return IntPolynomial(std::move(sum));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<BigInt> diff(std::max(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t s = 0; s < diff.size(); ++s) {
    diff[s] = coefficient(static_cast<int>(s)) - other.coefficient(static_cast<int>(s));
  }
  return IntPolynomial(std::move(diff));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) {
    return {};
  }
  std::vector<BigInt> product(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    for (std::size_t b = 0; b < other.coefficients_.size(); ++b) {
      product[a + b] += coefficients_[a] * other.coefficients_[b];
    }
  }
  return IntPolynomial(std::move(product));
}

IntPolynomial IntPolynomial::one_minus_t_power(int exponent) {
  std::vector<BigInt> coefficients(static_cast<std::size_t>(exponent) + 1);
  for (int s = 0; s <= exponent; ++s) {
    coefficients[s] = binomial(exponent, s) * (s % 2 == 0 ? 1 : -1);
  }
  return IntPolynomial(std::move(coefficients));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t s = 0; s < coefficients_.size(); ++s) {
    const BigInt& c = coefficients_[s];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (s == 0 || magnitude != 1) {
      out += magnitude.str();
    }
    if (s >= 1) {
      out += "t";
    }
    if (s >= 2) {
      out += "^" + std::to_string(s);
    }
  }
  return out;
}

}  // namespace toricdd
