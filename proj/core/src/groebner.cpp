#include "toricdd/groebner.hpp"

#include "toricdd/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricdd {

Monomial leading_term(const SparsePoly& p) { return p.leading_monomial(); }

SparsePoly reduce(const SparsePoly& p, std::span<const SparsePoly> basis) {
  // Divisors tried largest leading term first.
  std::vector<const SparsePoly*> order;
  for (const auto& g : basis) {
    if (g.is_zero()) {
      throw std::domain_error("reduce: zero polynomial in basis");
    }
    order.push_back(&g);
  }
  std::stable_sort(order.begin(), order.end(), [](const SparsePoly* a, const SparsePoly* b) {
    return DiagonalGreater{}(a->leading_monomial(), b->leading_monomial());
  });

  SparsePoly work = p;
  SparsePoly remainder;
  while (!work.is_zero()) {
    const Monomial lead = work.leading_monomial();
    const BigInt coefficient = work.leading_coefficient();
    const auto divisor = std::find_if(order.begin(), order.end(),
                                      [&](const SparsePoly* g) { return divides(g->leading_monomial(), lead); });
    if (divisor == order.end()) {
      remainder.add_term(lead, coefficient);
      work.add_term(lead, -coefficient);
      continue;
    }
    const SparsePoly& g = **divisor;
    if (coefficient % g.leading_coefficient() != 0) {
      throw std::domain_error("reduce: leading coefficient does not divide " + coefficient.str());
    }
    work -= g.scaled(coefficient / g.leading_coefficient(), quotient(lead, g.leading_monomial()));
  }
  return remainder;
}

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g) {
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  const Monomial l = lcm(lf, lg);
  return f.scaled(g.leading_coefficient(), quotient(l, lf)) - g.scaled(f.leading_coefficient(), quotient(l, lg));
}

std::vector<SparsePoly> minor_basis(const Shape& shape) {
  std::vector<SparsePoly> basis;
  for (const auto& minor : distinct_minors(shape)) {
    basis.push_back(minor.as_poly());
  }
  return basis;
}

bool verify_groebner(std::span<const SparsePoly> basis, std::span<const SparsePoly> ideal_generators,
                     unsigned long long pair_budget) {
  const unsigned long long pairs = basis.size() * (basis.size() - (basis.empty() ? 0 : 1)) / 2;
  if (pairs > pair_budget) {
    throw BudgetExceeded("verify_groebner: " + std::to_string(pairs) + " S-pairs exceed budget " +
                         std::to_string(pair_budget));
  }
  for (const auto& generator : ideal_generators) {
    if (!reduce(generator, basis).is_zero()) {
      return false;
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (coprime(basis[a].leading_monomial(), basis[b].leading_monomial())) {
        continue;
      }
      if (!reduce(s_polynomial(basis[a], basis[b]), basis).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool verify_groebner(const Shape& shape, unsigned long long pair_budget) {
  const auto basis = minor_basis(shape);
  return verify_groebner(basis, basis, pair_budget);
}

std::vector<Monomial> initial_ideal_minimal_generators(std::span<const SparsePoly> basis) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) {
    leads.push_back(g.leading_monomial());
  }
  std::sort(leads.begin(), leads.end(), DiagonalGreater{});
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (const auto& candidate : leads) {
    const bool redundant = std::any_of(leads.begin(), leads.end(), [&](const Monomial& other) {
      return other != candidate && divides(other, candidate);
    });
    if (!redundant) {
      minimal.push_back(candidate);
    }
  }
  return minimal;
}

std::vector<VertexPair> to_vertex_pairs(std::span<const Monomial> monomials, const Shape& shape) {
  std::vector<VertexPair> pairs;
  for (const auto& monomial : monomials) {
    if (monomial.size() != 2 || monomial[0] == monomial[1]) {
      throw std::invalid_argument("to_vertex_pairs: " + to_string(monomial) + " is not a squarefree quadric");
    }
    Vertex a = vertex_of(monomial[0], shape);
    Vertex b = vertex_of(monomial[1], shape);
    if (b < a) {
      std::swap(a, b);
    }
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace toricdd
