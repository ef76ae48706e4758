#pragma once

#include "toricdd/shape.hpp"

#include <array>
#include <compare>
#include <string>

namespace toricdd {

/// The ring variable x_{ij}^k: entry (i, j) of the k-th m x n matrix.
///
/// Variables compare by position in the diagonal variable order
/// x_{11}^1 > x_{12}^1 > ... > x_{mn}^1 > x_{11}^2 > ... > x_{mn}^r,
/// i.e. by the tuple (k, i, j). `a < b` means a comes first, so a is the
/// GREATER variable in the diagonal term order.
struct RVariable {
  int i = 1;
  int j = 1;
  int k = 1;

  friend bool operator==(const RVariable&, const RVariable&) = default;
  friend std::strong_ordering operator<=>(const RVariable& a, const RVariable& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }

  bool in_bounds(const Shape& shape) const {
    return i >= 1 && i <= shape.m() && j >= 1 && j <= shape.n() && k >= 1 && k <= shape.r();
  }

  /// `x[i,j,k]`
  std::string to_string() const;
};

/// A squarefree-or-square degree-2 monomial, stored with the greater
/// variable first.
using Term = std::array<RVariable, 2>;

Term make_term(RVariable a, RVariable b);

/// Lex comparison of degree-2 terms in the diagonal order; true when `a`
/// is the greater monomial.
bool diagonal_greater(const Term& a, const Term& b);

std::string to_string(const Term& term);

/// plus - minus, with both terms of degree 2 and distinct.
///
/// Canonical form: `plus` is the leading term in the diagonal lex order and
/// `minus` the smaller one. A sorting relation x_I x_J - x_{I^J} x_{IvJ}
/// therefore has canonical form x_{I^J} x_{IvJ} - x_I x_J.
struct RBinomial {
  Term plus;
  Term minus;

  /// Canonicalizes a - b. Throws std::invalid_argument when a == b.
  static RBinomial from_terms(const Term& a, const Term& b);

  /// +1 if a - b equals the canonical binomial, -1 if it equals its negative.
  static int orientation(const Term& a, const Term& b);

  /// `x[i,j,k]*x[i',j',k'] - x[a,b,c]*x[d,e,f]`
  std::string to_string() const;

  friend bool operator==(const RBinomial&, const RBinomial&) = default;
  friend auto operator<=>(const RBinomial&, const RBinomial&) = default;
};

}  // namespace toricdd
