#include "toricdd/monomial_sorting.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace toricdd {

BlockMonomial::BlockMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
}

BlockMonomial BlockMonomial::operator*(const BlockMonomial& other) const {
  std::vector<int> merged;
  merged.reserve(indices_.size() + other.indices_.size());
  std::merge(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
             std::back_inserter(merged));
  BlockMonomial result;
  result.indices_ = std::move(merged);
  return result;
}

std::pair<BlockMonomial, BlockMonomial> sort_pair(const BlockMonomial& u1, const BlockMonomial& u2) {
  if (u1.degree() != u2.degree()) {
    throw std::invalid_argument("sort_pair: monomials of different degree");
  }
  const auto product = u1 * u2;
  std::vector<int> odd;
  std::vector<int> even;
  odd.reserve(u1.degree());
  even.reserve(u1.degree());
  for (std::size_t s = 0; s < product.degree(); ++s) {
    (s % 2 == 0 ? odd : even).push_back(product.indices()[s]);
  }
  return {BlockMonomial(std::move(odd)), BlockMonomial(std::move(even))};
}

bool is_sorted(const BlockMonomial& u1, const BlockMonomial& u2) {
  const auto [u3, u4] = sort_pair(u1, u2);
  return (u3 == u1 && u4 == u2) || (u3 == u2 && u4 == u1);
}

BlockMonomial XyzAlphabet::xyz(int i, int j, int k) const {
  if (!RVariable{i, j, k}.in_bounds(shape_)) {
    throw std::invalid_argument("xyz: index outside " + shape_.to_string());
  }
  return BlockMonomial({x(i), y(j), z(k)});
}

std::string XyzAlphabet::render(const BlockMonomial& monomial) const {
  std::string out;
  for (int index : monomial.indices()) {
    if (!out.empty()) {
      out += '*';
    }
    if (index < shape_.m()) {
      out += "x" + std::to_string(index + 1);
    } else if (index < shape_.m() + shape_.n()) {
      out += "y" + std::to_string(index - shape_.m() + 1);
    } else {
      out += "z" + std::to_string(index - shape_.m() - shape_.n() + 1);
    }
  }
  return out.empty() ? "1" : out;
}

std::vector<BlockMonomial> a_mnr(const Shape& shape) {
  const XyzAlphabet alphabet(shape);
  std::vector<BlockMonomial> result;
  result.reserve(static_cast<std::size_t>(shape.variable_count()));
  for (int i = 1; i <= shape.m(); ++i) {
    for (int j = 1; j <= shape.n(); ++j) {
      for (int k = 1; k <= shape.r(); ++k) {
        result.push_back(alphabet.xyz(i, j, k));
      }
    }
  }
  return result;
}

BlockMonomial phi(const RVariable& variable, const Shape& shape) {
  return XyzAlphabet(shape).xyz(variable.i, variable.j, variable.k);
}

BlockMonomial phi_monomial(std::span<const RVariable> monomial, const Shape& shape) {
  BlockMonomial result;
  for (const auto& v : monomial) {
    result = result * phi(v, shape);
  }
  return result;
}

bool in_kernel(const Term& a, const Term& b, const Shape& shape) {
  return phi_monomial(a, shape) == phi_monomial(b, shape);
}

bool in_kernel(const RBinomial& binomial, const Shape& shape) {
  return in_kernel(binomial.plus, binomial.minus, shape);
}

}  // namespace toricdd
