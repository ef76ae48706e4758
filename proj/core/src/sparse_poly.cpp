#include "toricdd/sparse_poly.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace toricdd {

Monomial make_monomial(std::vector<RVariable> variables) {
  std::sort(variables.begin(), variables.end());
  return variables;
}

Monomial to_monomial(const Term& term) { return make_monomial({term[0], term[1]}); }

bool DiagonalGreater::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t s = 0; s < common; ++s) {
    if (a[s] != b[s]) {
      return a[s] < b[s];
    }
  }
  return a.size() > b.size();
}

bool divides(const Monomial& divisor, const Monomial& multiple) {
  return std::includes(multiple.begin(), multiple.end(), divisor.begin(), divisor.end());
}

Monomial quotient(const Monomial& multiple, const Monomial& divisor) {
  Monomial result;
  std::set_difference(multiple.begin(), multiple.end(), divisor.begin(), divisor.end(),
                      std::back_inserter(result));
  return result;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial result;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
  return result;
}

bool coprime(const Monomial& a, const Monomial& b) {
  Monomial common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial result;
  result.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
  return result;
}

std::string to_string(const Monomial& monomial) {
  if (monomial.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& v : monomial) {
    if (!out.empty()) {
      out += '*';
    }
    out += v.to_string();
  }
  return out;
}

SparsePoly SparsePoly::monomial(const Monomial& m, const BigInt& coefficient) {
  SparsePoly p;
  p.add_term(m, coefficient);
  return p;
}

SparsePoly SparsePoly::from_binomial(const RBinomial& binomial) {
  SparsePoly p;
  p.add_term(to_monomial(binomial.plus), 1);
  p.add_term(to_monomial(binomial.minus), -1);
  return p;
}

const Monomial& SparsePoly::leading_monomial() const {
  if (terms_.empty()) {
    throw std::domain_error("leading term of the zero polynomial");
  }
  return terms_.begin()->first;
}

const BigInt& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) {
    throw std::domain_error("leading coefficient of the zero polynomial");
  }
  return terms_.begin()->second;
}

void SparsePoly::add_term(const Monomial& m, const BigInt& coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) {
    add_term(m, c);
  }
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) {
    add_term(m, -c);
  }
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  SparsePoly result = *this;
  result += other;
  return result;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  SparsePoly result = *this;
  result -= other;
  return result;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly result;
  for (const auto& [m, c] : terms_) {
    result.terms_.emplace(m, -c);
  }
  return result;
}

SparsePoly SparsePoly::scaled(const BigInt& factor, const Monomial& shift) const {
  SparsePoly result;
  if (factor == 0) {
    return result;
  }
  for (const auto& [m, c] : terms_) {
    result.terms_.emplace(multiply(m, shift), c * factor);
  }
  return result;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || m.empty()) {
      out += magnitude.str();
      if (!m.empty()) {
        out += '*';
      }
    }
    if (!m.empty()) {
      out += toricdd::to_string(m);
    }
    first = false;
  }
  return out;
}

}  // namespace toricdd
