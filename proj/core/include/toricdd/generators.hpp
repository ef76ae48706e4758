#pragma once

#include "toricdd/shape.hpp"
#include "toricdd/sparse_poly.hpp"
#include "toricdd/variables.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricdd {

/// A 2x2 minor of H = (X_1 ... X_r) (m x nr) or of V = (X_1; ...; X_r) (mr x n).
/// Rows and columns are 1-based indices in the concatenated matrix.
struct Minor2x2 {
  enum class Source { H, V };

  Source source = Source::H;
  int row1 = 0;
  int row2 = 0;
  int col1 = 0;
  int col2 = 0;
  /// a11, a12, a21, a22.
  std::array<RVariable, 4> entries{};

  /// a11 a22 - a12 a21. The diagonal term always leads in the diagonal
  /// order, so this is already canonical.
  RBinomial as_binomial() const;
  SparsePoly as_poly() const;

  /// The block k when all four entries come from X_k.
  std::optional<int> block() const;

  /// e.g. `H[1,2|1,4]`
  std::string label() const;

  friend bool operator==(const Minor2x2&, const Minor2x2&) = default;
};

/// Row pairs outer, column pairs inner, both lexicographic.
std::vector<Minor2x2> minors_H(const Shape& shape);
std::vector<Minor2x2> minors_V(const Shape& shape);

/// minors_H followed by the minors of V whose binomial does not already
/// occur in H (within-block minors appear in both).
std::vector<Minor2x2> distinct_minors(const Shape& shape);

enum class Family { M, N, R, T };
std::string to_string(Family family);

/// The minimal generator families, in canonical binomial form. Sizes:
/// M: m C(r,2) C(n,2), N: n C(r,2) C(m,2), R: r C(m,2) C(n,2),
/// T: 3 C(r,2) C(m,2) C(n,2).
std::vector<RBinomial> family_M(const Shape& shape);
std::vector<RBinomial> family_N(const Shape& shape);
std::vector<RBinomial> family_R(const Shape& shape);
std::vector<RBinomial> family_T(const Shape& shape);
std::vector<RBinomial> family(Family which, const Shape& shape);

/// M, N, R, T concatenated.
std::vector<RBinomial> minimal_generators(const Shape& shape);

/// x_I x_J - x_{I^J} x_{IvJ} for every incomparable pair {I, J} of grid
/// points, with (i, j, k) identified with x_{ij}^k. Sorted, canonical form.
std::vector<RBinomial> sorting_relations(const Shape& shape);

/// Which family a canonical binomial belongs to; nullopt when it is not a
/// sorting relation of the given shape.
std::optional<Family> classify(const RBinomial& binomial, const Shape& shape);

/// A signed sum of minors.
struct MinorCombination {
  std::vector<std::pair<int, Minor2x2>> terms;

  SparsePoly expand() const;
  std::string to_string() const;
};

/// Writes a family element as +-1 minor, or for the third T form as the sum
/// of a minor of V and a minor of H. Throws std::invalid_argument when the
/// binomial is outside M u N u R u T.
MinorCombination decompose_into_minors(const RBinomial& generator, const Shape& shape);

/// Four distinct minors and signs with sum_s signs[s] * minors[s] = 0.
struct MinorDependency {
  std::array<Minor2x2, 4> minors;
  std::array<int, 4> signs{};

  std::string to_string() const;
};

/// Searches the fibers of phi for a vanishing signed sum of four minors,
/// showing that the natural generators are not minimal. The search visits
/// fibers in order of their first minor and minors in distinct_minors order.
std::optional<MinorDependency> natural_generators_not_minimal_witness(const Shape& shape);

}  // namespace toricdd
