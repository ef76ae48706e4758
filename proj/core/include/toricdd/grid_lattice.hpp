#pragma once

#include "toricdd/bigint.hpp"
#include "toricdd/shape.hpp"

#include <string>
#include <vector>

namespace toricdd {

/// An element (i, j, k) of the grid {1..m} x {1..n} x {1..r}, ordered
/// componentwise. This is the lattice of order ideals of make_pmnr(m, n, r).
class GridPoint {
 public:
  /// Throws std::invalid_argument when a coordinate is outside the bounds.
  GridPoint(const Shape& bounds, int i, int j, int k);

  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  const Shape& bounds() const { return bounds_; }

  std::string to_string() const;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;

 private:
  Shape bounds_;
  int i_;
  int j_;
  int k_;
};

/// Componentwise min / max. Throw std::invalid_argument on mismatched bounds.
GridPoint meet(const GridPoint& p, const GridPoint& q);
GridPoint join(const GridPoint& p, const GridPoint& q);

bool leq(const GridPoint& p, const GridPoint& q);
bool comparable(const GridPoint& p, const GridPoint& q);

/// All grid points, lexicographic in (i, j, k).
std::vector<GridPoint> grid_points(const Shape& shape);

/// Unordered pairs {p, q} (p == q allowed) with p and q comparable:
/// C(m+1,2) C(n+1,2) C(r+1,2).
BigInt count_comparable_pairs(const Shape& shape);

/// Checks that I -> (|I n A1|+1, |I n A2|+1, |I n A3|+1) is an order
/// isomorphism from the ideals of make_pmnr onto the grid.
/// Throws BudgetExceeded when m*n*r > 10^4.
bool lattice_isomorphic_to_ideals(const Shape& shape);

}  // namespace toricdd
