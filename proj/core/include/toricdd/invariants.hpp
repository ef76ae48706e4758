#pragma once

#include "toricdd/bigint.hpp"
#include "toricdd/errors.hpp"
#include "toricdd/int_polynomial.hpp"
#include "toricdd/poset.hpp"
#include "toricdd/shape.hpp"

#include <span>
#include <string>

namespace toricdd {

/// Closed-form invariants of R / I_{mn}^r for 2-minors.
struct InvariantReport {
  BigInt mu;  ///< minimal number of generators of the ideal
  int krull_dim = 0;
  BigInt multiplicity;
  int regularity = 0;
  int a_invariant = 0;
  bool gorenstein = false;
  IntPolynomial h_polynomial;  ///< from h_poly_via_series

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// mu = C(mnr+1,2) - C(m+1,2)C(n+1,2)C(r+1,2), dim = m+n+r-2,
/// e = (m+n+r-3)!/((m-1)!(n-1)!(r-1)!), reg = m+n+r-2-max, a = -max.
InvariantReport compute_invariants(const Shape& shape);

/// Gorenstein iff {m, n, r} is a subset of {1, max(m, n, r)}.
bool is_gorenstein(const Shape& shape);

/// Stable JSON object: mu, dim, multiplicity, regularity, a_invariant,
/// gorenstein, h_polynomial (coefficient array). Integers that do not fit
/// in 64 bits are written as decimal strings.
std::string to_json(const InvariantReport& report);

/// HF(d) = C(m-1+d, d) C(n-1+d, d) C(r-1+d, d). Throws std::invalid_argument for d < 0.
BigInt hilbert_function(const Shape& shape, int degree);

/// Number of maps f: P -> {0..d} with p <= q implying f(p) <= f(q), by
/// exhaustive assignment. Throws BudgetExceeded when |P| > 12.
BigInt order_preserving_map_count(const Poset& poset, int degree);

/// sum over the distinct arrangements of {1^a1, 2^a2, ...} of t^des.
/// Throws BudgetExceeded when the multinomial exceeds `budget`.
IntPolynomial descent_polynomial(std::span<const int> multiplicities,
                                 unsigned long long budget = kDefaultBudget);

/// Descents over arrangements of {1^(m-1), 2^(n-1), 3^(r-1)}.
IntPolynomial h_poly_via_words(const Shape& shape, unsigned long long budget = kDefaultBudget);

/// Descents over the linear extensions of make_pmnr(m, n, r).
IntPolynomial h_poly_via_linear_extensions(const Shape& shape, unsigned long long budget = kDefaultBudget);

/// (1-t)^dim * sum_{d <= reg+1} HF(d) t^d, truncated at degree reg+1.
/// Throws std::logic_error if the degree reg+1 coefficient does not vanish.
IntPolynomial h_poly_via_series(const Shape& shape);

/// (1-t)^(a+1) * sum_{d <= D} prod_i C(a_i + d, d) t^d, truncated at degree D.
IntPolynomial macmahon_series(std::span<const int> multiplicities, int max_degree);

/// Compares descent_polynomial with macmahon_series up to degree D.
bool macmahon_check(std::span<const int> multiplicities, int max_degree,
                    unsigned long long budget = kDefaultBudget);

/// compute_invariants and h_poly_via_words agree on all 6 permutations.
bool check_symmetry(const Shape& shape, unsigned long long budget = kDefaultBudget);

}  // namespace toricdd
