#include "toricdd/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <stdexcept>

namespace toricdd {

namespace {

void check_budget(const BigInt& count, unsigned long long budget, const char* what) {
  if (count > budget) {
    throw BudgetExceeded(std::string(what) + ": " + count.str() + " items exceed budget " + std::to_string(budget));
  }
}

nlohmann::ordered_json big_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

}  // namespace

bool is_gorenstein(const Shape& shape) {
  const int top = std::max({shape.m(), shape.n(), shape.r()});
  return std::ranges::all_of(std::array{shape.m(), shape.n(), shape.r()},
                             [top](int v) { return v == 1 || v == top; });
}

InvariantReport compute_invariants(const Shape& shape) {
  const int m = shape.m();
  const int n = shape.n();
  const int r = shape.r();
  const int top = std::max({m, n, r});

  InvariantReport report;
  report.mu = binomial(shape.variable_count() + 1, 2) - binomial(m + 1, 2) * binomial(n + 1, 2) * binomial(r + 1, 2);
  report.krull_dim = m + n + r - 2;
  const std::array<int, 3> parts{m - 1, n - 1, r - 1};
  report.multiplicity = multinomial(parts);
  report.regularity = m + n + r - 2 - top;
  report.a_invariant = -top;
  report.gorenstein = is_gorenstein(shape);
  report.h_polynomial = h_poly_via_series(shape);
  return report;
}

std::string to_json(const InvariantReport& report) {
  nlohmann::ordered_json j;
  j["mu"] = big_to_json(report.mu);
  j["dim"] = report.krull_dim;
  j["multiplicity"] = big_to_json(report.multiplicity);
  j["regularity"] = report.regularity;
  j["a_invariant"] = report.a_invariant;
  j["gorenstein"] = report.gorenstein;
  auto coefficients = nlohmann::ordered_json::array();
  for (const auto& c : report.h_polynomial.coefficients()) {
    coefficients.push_back(big_to_json(c));
  }
  j["h_polynomial"] = std::move(coefficients);
  return j.dump();
}

BigInt hilbert_function(const Shape& shape, int degree) {
  if (degree < 0) {
    throw std::invalid_argument("hilbert_function: negative degree");
  }
  return binomial(shape.m() - 1 + degree, degree) * binomial(shape.n() - 1 + degree, degree) *
         binomial(shape.r() - 1 + degree, degree);
}

BigInt order_preserving_map_count(const Poset& poset, int degree) {
  if (degree < 0) {
    throw std::invalid_argument("order_preserving_map_count: negative degree");
  }
  if (poset.size() > 12) {
    throw BudgetExceeded("order_preserving_map_count: poset has more than 12 elements");
  }
  const std::size_t size = poset.size();
  std::vector<int> value(size, 0);
  BigInt count = 0;

  // Assign values in label order; every element below the current one is
  // already assigned.
  std::function<void(std::size_t)> assign = [&](std::size_t position) {
    if (position == size) {
      ++count;
      return;
    }
    const std::size_t e = poset.element_with_label(static_cast<int>(position) + 1);
    for (int v = 0; v <= degree; ++v) {
      bool ok = true;
      for (std::size_t p = 0; p < size && ok; ++p) {
        if (poset.less(p, e) && value[p] > v) {
          ok = false;
        }
      }
      if (ok) {
        value[e] = v;
        assign(position + 1);
      }
    }
  };
  assign(0);
  return count;
}

IntPolynomial descent_polynomial(std::span<const int> multiplicities, unsigned long long budget) {
  check_budget(multinomial(multiplicities), budget, "descent_polynomial");
  std::vector<int> word;
  for (std::size_t letter = 0; letter < multiplicities.size(); ++letter) {
    word.insert(word.end(), static_cast<std::size_t>(multiplicities[letter]), static_cast<int>(letter) + 1);
  }
  std::vector<BigInt> counts(word.empty() ? 1 : word.size(), 0);
  do {
    std::size_t descents = 0;
    for (std::size_t s = 0; s + 1 < word.size(); ++s) {
      if (word[s] > word[s + 1]) {
        ++descents;
      }
    }
    counts[descents] += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return IntPolynomial(std::move(counts));
}

IntPolynomial h_poly_via_words(const Shape& shape, unsigned long long budget) {
  const std::array<int, 3> parts{shape.m() - 1, shape.n() - 1, shape.r() - 1};
  return descent_polynomial(parts, budget);
}

IntPolynomial h_poly_via_linear_extensions(const Shape& shape, unsigned long long budget) {
  const std::array<int, 3> parts{shape.m() - 1, shape.n() - 1, shape.r() - 1};
  check_budget(multinomial(parts), budget, "h_poly_via_linear_extensions");
  const Poset poset = make_pmnr(shape.m(), shape.n(), shape.r());
  std::vector<BigInt> counts(std::max<std::size_t>(poset.size(), 1), 0);
  LinearExtensionGenerator extensions(poset);
  while (auto extension = extensions.next()) {
    counts[descent_count(*extension, poset)] += 1;
  }
  return IntPolynomial(std::move(counts));
}

IntPolynomial h_poly_via_series(const Shape& shape) {
  const int top = std::max({shape.m(), shape.n(), shape.r()});
  const int regularity = shape.m() + shape.n() + shape.r() - 2 - top;
  const int bound = regularity + 1;
  std::vector<BigInt> series(static_cast<std::size_t>(bound) + 1);
  for (int d = 0; d <= bound; ++d) {
    series[d] = hilbert_function(shape, d);
  }
  const IntPolynomial product =
      (IntPolynomial::one_minus_t_power(shape.dimension()) * IntPolynomial(std::move(series))).truncated(bound);
  if (product.coefficient(bound) != 0) {
    throw std::logic_error("h_poly_via_series: numerator does not terminate at the regularity");
  }
  return product;
}

IntPolynomial macmahon_series(std::span<const int> multiplicities, int max_degree) {
  int total = 0;
  for (int a : multiplicities) {
    if (a < 0) {
      throw std::invalid_argument("macmahon_series: negative multiplicity");
    }
    total += a;
  }
  std::vector<BigInt> series(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    BigInt term = 1;
    for (int a : multiplicities) {
      term *= binomial(a + d, d);
    }
    series[d] = term;
  }
  return (IntPolynomial::one_minus_t_power(total + 1) * IntPolynomial(std::move(series))).truncated(max_degree);
}

bool macmahon_check(std::span<const int> multiplicities, int max_degree, unsigned long long budget) {
  if (max_degree < 0) {
    throw std::invalid_argument("macmahon_check: negative degree bound");
  }
  const IntPolynomial words = descent_polynomial(multiplicities, budget).truncated(max_degree);
  return words == macmahon_series(multiplicities, max_degree);
}

bool check_symmetry(const Shape& shape, unsigned long long budget) {
  std::array<int, 3> dims{shape.m(), shape.n(), shape.r()};
  std::sort(dims.begin(), dims.end());
  const Shape reference_shape(dims[0], dims[1], dims[2]);
  const InvariantReport reference = compute_invariants(reference_shape);
  const IntPolynomial reference_h = h_poly_via_words(reference_shape, budget);
  do {
    const Shape permuted(dims[0], dims[1], dims[2]);
    if (compute_invariants(permuted) != reference || h_poly_via_words(permuted, budget) != reference_h) {
      return false;
    }
  } while (std::next_permutation(dims.begin(), dims.end()));
  return true;
}

}  // namespace toricdd
