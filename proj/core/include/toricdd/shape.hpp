#pragma once

#include <compare>
#include <string>

namespace toricdd {

/// The size parameters (m, n, r): r generic m x n matrices.
class Shape {
 public:
  /// Throws std::invalid_argument unless all three are >= 1.
  Shape(int m, int n, int r);

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }

  /// Number of ring variables, m * n * r.
  long long variable_count() const { return 1LL * m_ * n_ * r_; }

  /// m + n + r - 2, the Krull dimension of the quotient ring.
  int dimension() const { return m_ + n_ + r_ - 2; }

  std::string to_string() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  int m_;
  int n_;
  int r_;
};

}  // namespace toricdd
