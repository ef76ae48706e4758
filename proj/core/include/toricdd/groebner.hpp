#pragma once

#include "toricdd/errors.hpp"
#include "toricdd/shape.hpp"
#include "toricdd/sparse_poly.hpp"
#include "toricdd/stanley_reisner.hpp"

#include <span>
#include <vector>

namespace toricdd {

/// Greatest monomial of `p` under the diagonal order.
/// Throws std::domain_error on the zero polynomial.
Monomial leading_term(const SparsePoly& p);

/// Full multivariate division. Each step rewrites the greatest reducible term
/// with the basis element whose leading term is largest among those dividing
/// it. Throws std::domain_error when a leading coefficient does not divide the
/// coefficient being reduced, or when a basis element is zero.
SparsePoly reduce(const SparsePoly& p, std::span<const SparsePoly> basis);

/// lcm/lt(f) * f - lcm/lt(g) * g, scaled so that the leading terms cancel
/// over the integers.
SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g);

/// Distinct 2-minors of H and V as polynomials.
std::vector<SparsePoly> minor_basis(const Shape& shape);

/// Buchberger's criterion for `basis` as a Groebner basis of the ideal
/// generated by `ideal_generators`: every generator reduces to zero, and
/// every S-pair whose leading terms share a variable reduces to zero.
/// Throws BudgetExceeded when the number of S-pairs exceeds `pair_budget`.
bool verify_groebner(std::span<const SparsePoly> basis, std::span<const SparsePoly> ideal_generators,
                     unsigned long long pair_budget = kDefaultBudget);

/// Runs the check above on minor_basis(shape) against the same minors.
bool verify_groebner(const Shape& shape, unsigned long long pair_budget = kDefaultBudget);

/// Leading monomials of `basis` with duplicates and non-minimal ones removed,
/// in decreasing diagonal order.
std::vector<Monomial> initial_ideal_minimal_generators(std::span<const SparsePoly> basis);

/// Squarefree quadratic monomials as sorted vertex pairs, the list sorted.
/// Throws std::invalid_argument on any other monomial.
std::vector<VertexPair> to_vertex_pairs(std::span<const Monomial> monomials, const Shape& shape);

}  // namespace toricdd
