#pragma once

#include "toricdd/shape.hpp"
#include "toricdd/variables.hpp"

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toricdd {

/// A monomial over an ordered variable alphabet t_0 < t_1 < ..., stored as
/// the weakly increasing list of its variable indices (one entry per unit of
/// exponent). Degree is the list length.
class BlockMonomial {
 public:
  BlockMonomial() = default;
  /// Indices may be given in any order; they are sorted.
  explicit BlockMonomial(std::vector<int> indices);

  std::size_t degree() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }

  BlockMonomial operator*(const BlockMonomial& other) const;

  friend bool operator==(const BlockMonomial&, const BlockMonomial&) = default;
  friend auto operator<=>(const BlockMonomial&, const BlockMonomial&) = default;

 private:
  std::vector<int> indices_;
};

/// Merges u1*u2 into a weakly increasing index sequence and splits it into
/// odd and even positions. Throws std::invalid_argument on unequal degrees.
std::pair<BlockMonomial, BlockMonomial> sort_pair(const BlockMonomial& u1, const BlockMonomial& u2);

/// True when sort_pair fixes the unordered pair {u1, u2}.
bool is_sorted(const BlockMonomial& u1, const BlockMonomial& u2);

/// The alphabet x_1..x_m, y_1..y_n, z_1..z_r in this order, mapped to
/// indices 0..m+n+r-1.
class XyzAlphabet {
 public:
  explicit XyzAlphabet(const Shape& shape) : shape_(shape) {}

  int x(int i) const { return i - 1; }
  int y(int j) const { return shape_.m() + j - 1; }
  int z(int k) const { return shape_.m() + shape_.n() + k - 1; }

  /// x_i y_j z_k; throws std::invalid_argument when out of bounds.
  BlockMonomial xyz(int i, int j, int k) const;

  /// e.g. `x1*x2*y1*y2*z1*z2`
  std::string render(const BlockMonomial& monomial) const;

  const Shape& shape() const { return shape_; }

 private:
  Shape shape_;
};

/// The mnr monomials x_i y_j z_k, lexicographic in (i, j, k).
std::vector<BlockMonomial> a_mnr(const Shape& shape);

/// x_{ij}^k -> x_i y_j z_k, extended multiplicatively.
BlockMonomial phi(const RVariable& variable, const Shape& shape);
BlockMonomial phi_monomial(std::span<const RVariable> monomial, const Shape& shape);

/// True when both terms have the same image under phi.
bool in_kernel(const Term& a, const Term& b, const Shape& shape);
bool in_kernel(const RBinomial& binomial, const Shape& shape);

}  // namespace toricdd
