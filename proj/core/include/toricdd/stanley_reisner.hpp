#pragma once

#include "toricdd/errors.hpp"
#include "toricdd/int_polynomial.hpp"
#include "toricdd/shape.hpp"
#include "toricdd/variables.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toricdd {

/// A point (row, col) of the m x nr grid; x_{ij}^k sits at (i, (k-1)n + j).
struct Vertex {
  int row = 1;
  int col = 1;

  int block(const Shape& shape) const { return (col - 1) / shape.n() + 1; }
  int column_in_block(const Shape& shape) const { return col - (block(shape) - 1) * shape.n(); }
  bool in_bounds(const Shape& shape) const {
    return row >= 1 && row <= shape.m() && col >= 1 && col <= shape.n() * shape.r();
  }

  /// `(row,col)`
  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

using VertexSet = std::vector<Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

Vertex vertex_of(const RVariable& variable, const Shape& shape);
RVariable variable_of(const Vertex& vertex, const Shape& shape);

/// Sorts and deduplicates.
VertexSet normalize(VertexSet vertices);

/// True when x_P x_Q is a leading diagonal of some 2-minor, i.e. one of
/// (a) same block, one point strictly below-right of the other;
/// (b) blocks k < k' with i < i'; (c) blocks k < k' with j < j'.
bool conflicts(const Vertex& p, const Vertex& q, const Shape& shape);

/// Every conflicting unordered pair, each pair ordered and the list sorted.
std::vector<VertexPair> initial_generators(const Shape& shape);

/// No two vertices conflict. Throws std::invalid_argument on out-of-range vertices.
bool is_face(std::span<const Vertex> vertices, const Shape& shape);

/// A word on {M^(m-1), N^(n-1), R^(r-1)}.
class WordCode {
 public:
  /// Throws std::invalid_argument unless `letters` has exactly the right content.
  WordCode(std::string letters, const Shape& shape);

  const std::string& letters() const { return letters_; }

  friend bool operator==(const WordCode&, const WordCode&) = default;
  friend auto operator<=>(const WordCode&, const WordCode&) = default;

 private:
  std::string letters_;
};

/// A facet as a union of r monotone paths, path k living in block k and
/// running from (g_{k-1}, (k-1)n + h_k) to (g_k, (k-1)n + h_{k-1}) with steps
/// (-1, 0) or (0, +1).
struct Facet {
  VertexSet vertices;             ///< sorted
  std::vector<int> g;             ///< g_0 = m >= ... >= g_r = 1
  std::vector<int> h;             ///< h_0 = n >= ... >= h_r = 1
  std::vector<VertexSet> paths;   ///< r vertex lists in path order

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Checks path structure, endpoint parameters and cardinality m+n+r-2.
bool is_valid_facet(const Facet& facet, const Shape& shape);

Facet word_to_facet(const WordCode& word, const Shape& shape);

/// Throws std::invalid_argument when `facet` is not valid.
WordCode facet_to_word(const Facet& facet, const Shape& shape);

/// Recovers the path decomposition of a facet given as a bare vertex set.
/// Throws std::invalid_argument when the set is not a facet.
Facet facet_from_vertices(VertexSet vertices, const Shape& shape);

/// Extends a face to a facet containing it: split by block, fix the path
/// endpoints from the first point of each nonempty block, fill empty blocks
/// with corner points, and join consecutive points of a block moving up
/// first and then right. The empty face is seeded with (m, 1).
/// Throws std::invalid_argument when `face` is not a face.
Facet extend_to_facet(VertexSet face, const Shape& shape);

/// Facets in lexicographic word order (M < N < R).
class ParametricFacets {
 public:
  /// Throws BudgetExceeded when the number of facets exceeds `budget`.
  explicit ParametricFacets(const Shape& shape, unsigned long long budget = kDefaultBudget);

  std::optional<std::pair<WordCode, Facet>> next();

 private:
  Shape shape_;
  std::string letters_;
  bool done_ = false;
};

std::vector<Facet> facets_parametric(const Shape& shape, unsigned long long budget = kDefaultBudget);

/// Maximal independent sets of the conflict graph (pivoting Bron-Kerbosch),
/// each sorted, list sorted. Throws BudgetExceeded when mnr > 64.
std::vector<VertexSet> facets_bruteforce(const Shape& shape);

/// f-vector of the complex by exhaustive face enumeration, converted to the
/// h-vector. Throws BudgetExceeded when mnr > 12.
std::vector<unsigned long long> complex_f_vector(const Shape& shape);
IntPolynomial complex_h_vector(const Shape& shape);

/// Standard shelling test: for all i < j there is k < j with
/// |F_k n F_j| = |F_j| - 1 and F_i n F_j contained in F_k n F_j.
/// Throws std::invalid_argument unless `ordering` lists every facet exactly once.
bool check_shelling_order(std::span<const VertexSet> ordering, const Shape& shape);

std::string to_string(const VertexSet& vertices);

/// Parses `(r,c),(r,c),...`; whitespace is ignored.
VertexSet parse_vertices(const std::string& text);

}  // namespace toricdd
