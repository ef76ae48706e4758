#include "toricdd/generators.hpp"

#include "toricdd/bigint.hpp"
#include "toricdd/grid_lattice.hpp"
#include "toricdd/monomial_sorting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toricdd {

namespace {

RVariable h_entry(const Shape& shape, int row, int col) {
  const int k = (col - 1) / shape.n() + 1;
  return RVariable{row, col - (k - 1) * shape.n(), k};
}

RVariable v_entry(const Shape& shape, int row, int col) {
  const int k = (row - 1) / shape.m() + 1;
  return RVariable{row - (k - 1) * shape.m(), col, k};
}

Minor2x2 h_minor(const Shape& shape, int row1, int row2, int col1, int col2) {
  return Minor2x2{Minor2x2::Source::H,
                  row1,
                  row2,
                  col1,
                  col2,
                  {h_entry(shape, row1, col1), h_entry(shape, row1, col2), h_entry(shape, row2, col1),
                   h_entry(shape, row2, col2)}};
}

Minor2x2 v_minor(const Shape& shape, int row1, int row2, int col1, int col2) {
  return Minor2x2{Minor2x2::Source::V,
                  row1,
                  row2,
                  col1,
                  col2,
                  {v_entry(shape, row1, col1), v_entry(shape, row1, col2), v_entry(shape, row2, col1),
                   v_entry(shape, row2, col2)}};
}

RVariable x(int i, int j, int k) { return RVariable{i, j, k}; }

// a1 a2 - b1 b2, returned canonically.
RBinomial relation(RVariable a1, RVariable a2, RVariable b1, RVariable b2) {
  return RBinomial::from_terms(make_term(a1, a2), make_term(b1, b2));
}

}  // namespace

RBinomial Minor2x2::as_binomial() const {
  return RBinomial::from_terms(make_term(entries[0], entries[3]), make_term(entries[1], entries[2]));
}

SparsePoly Minor2x2::as_poly() const {
  SparsePoly p;
  p.add_term(make_monomial({entries[0], entries[3]}), 1);
  p.add_term(make_monomial({entries[1], entries[2]}), -1);
  return p;
}

std::optional<int> Minor2x2::block() const {
  const int k = entries[0].k;
  for (const auto& e : entries) {
    if (e.k != k) {
      return std::nullopt;
    }
  }
  return k;
}

std::string Minor2x2::label() const {
  return std::string(source == Source::H ? "H" : "V") + "[" + std::to_string(row1) + "," + std::to_string(row2) + "|" +
         std::to_string(col1) + "," + std::to_string(col2) + "]";
}

std::vector<Minor2x2> minors_H(const Shape& shape) {
  std::vector<Minor2x2> result;
  const int rows = shape.m();
  const int cols = shape.n() * shape.r();
  for (int r1 = 1; r1 <= rows; ++r1) {
    for (int r2 = r1 + 1; r2 <= rows; ++r2) {
      for (int c1 = 1; c1 <= cols; ++c1) {
        for (int c2 = c1 + 1; c2 <= cols; ++c2) {
          result.push_back(h_minor(shape, r1, r2, c1, c2));
        }
      }
    }
  }
  return result;
}

std::vector<Minor2x2> minors_V(const Shape& shape) {
  std::vector<Minor2x2> result;
  const int rows = shape.m() * shape.r();
  const int cols = shape.n();
  for (int r1 = 1; r1 <= rows; ++r1) {
    for (int r2 = r1 + 1; r2 <= rows; ++r2) {
      for (int c1 = 1; c1 <= cols; ++c1) {
        for (int c2 = c1 + 1; c2 <= cols; ++c2) {
          result.push_back(v_minor(shape, r1, r2, c1, c2));
        }
      }
    }
  }
  return result;
}

std::vector<Minor2x2> distinct_minors(const Shape& shape) {
  std::vector<Minor2x2> result = minors_H(shape);
  std::set<RBinomial> seen;
  for (const auto& minor : result) {
    seen.insert(minor.as_binomial());
  }
  for (const auto& minor : minors_V(shape)) {
    if (seen.insert(minor.as_binomial()).second) {
      result.push_back(minor);
    }
  }
  return result;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::M:
      return "M";
    case Family::N:
      return "N";
    case Family::R:
      return "R";
    case Family::T:
      return "T";
  }
  return "?";
}

std::vector<RBinomial> family_M(const Shape& shape) {
  std::vector<RBinomial> result;
  for (int i = 1; i <= shape.m(); ++i) {
    for (int j1 = 1; j1 <= shape.n(); ++j1) {
      for (int j2 = j1 + 1; j2 <= shape.n(); ++j2) {
        for (int k1 = 1; k1 <= shape.r(); ++k1) {
          for (int k2 = k1 + 1; k2 <= shape.r(); ++k2) {
            result.push_back(relation(x(i, j2, k1), x(i, j1, k2), x(i, j1, k1), x(i, j2, k2)));
          }
        }
      }
    }
  }
  return result;
}

std::vector<RBinomial> family_N(const Shape& shape) {
  std::vector<RBinomial> result;
  for (int i1 = 1; i1 <= shape.m(); ++i1) {
    for (int i2 = i1 + 1; i2 <= shape.m(); ++i2) {
      for (int j = 1; j <= shape.n(); ++j) {
        for (int k1 = 1; k1 <= shape.r(); ++k1) {
          for (int k2 = k1 + 1; k2 <= shape.r(); ++k2) {
            result.push_back(relation(x(i2, j, k1), x(i1, j, k2), x(i1, j, k1), x(i2, j, k2)));
          }
        }
      }
    }
  }
  return result;
}

std::vector<RBinomial> family_R(const Shape& shape) {
  std::vector<RBinomial> result;
  for (int i1 = 1; i1 <= shape.m(); ++i1) {
    for (int i2 = i1 + 1; i2 <= shape.m(); ++i2) {
      for (int j1 = 1; j1 <= shape.n(); ++j1) {
        for (int j2 = j1 + 1; j2 <= shape.n(); ++j2) {
          for (int k = 1; k <= shape.r(); ++k) {
            result.push_back(relation(x(i1, j2, k), x(i2, j1, k), x(i1, j1, k), x(i2, j2, k)));
          }
        }
      }
    }
  }
  return result;
}

std::vector<RBinomial> family_T(const Shape& shape) {
  std::vector<RBinomial> result;
  for (int i1 = 1; i1 <= shape.m(); ++i1) {
    for (int i2 = i1 + 1; i2 <= shape.m(); ++i2) {
      for (int j1 = 1; j1 <= shape.n(); ++j1) {
        for (int j2 = j1 + 1; j2 <= shape.n(); ++j2) {
          for (int k1 = 1; k1 <= shape.r(); ++k1) {
            for (int k2 = k1 + 1; k2 <= shape.r(); ++k2) {
              const RVariable low = x(i1, j1, k1);
              const RVariable high = x(i2, j2, k2);
              result.push_back(relation(x(i1, j2, k1), x(i2, j1, k2), low, high));
              result.push_back(relation(x(i2, j1, k1), x(i1, j2, k2), low, high));
              result.push_back(relation(x(i2, j2, k1), x(i1, j1, k2), low, high));
            }
          }
        }
      }
    }
  }
  return result;
}

std::vector<RBinomial> family(Family which, const Shape& shape) {
  switch (which) {
    case Family::M:
      return family_M(shape);
    case Family::N:
      return family_N(shape);
    case Family::R:
      return family_R(shape);
    case Family::T:
      return family_T(shape);
  }
  return {};
}

std::vector<RBinomial> minimal_generators(const Shape& shape) {
  std::vector<RBinomial> result;
  for (Family f : {Family::M, Family::N, Family::R, Family::T}) {
    auto part = family(f, shape);
    result.insert(result.end(), part.begin(), part.end());
  }
  return result;
}

std::vector<RBinomial> sorting_relations(const Shape& shape) {
  const auto points = grid_points(shape);
  std::vector<RBinomial> result;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const GridPoint& p = points[a];
      const GridPoint& q = points[b];
      if (comparable(p, q)) {
        continue;
      }
      const GridPoint lo = meet(p, q);
      const GridPoint hi = join(p, q);
      result.push_back(relation(x(p.i(), p.j(), p.k()), x(q.i(), q.j(), q.k()), x(lo.i(), lo.j(), lo.k()),
                                x(hi.i(), hi.j(), hi.k())));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Family> classify(const RBinomial& binomial, const Shape& shape) {
  for (const Term* term : {&binomial.plus, &binomial.minus}) {
    for (const auto& v : *term) {
      if (!v.in_bounds(shape)) {
        return std::nullopt;
      }
    }
  }
  const RVariable& a = binomial.minus[0];
  const RVariable& b = binomial.minus[1];
  const GridPoint p(shape, a.i, a.j, a.k);
  const GridPoint q(shape, b.i, b.j, b.k);
  if (comparable(p, q)) {
    return std::nullopt;
  }
  const GridPoint lo = meet(p, q);
  const GridPoint hi = join(p, q);
  if (binomial.plus != make_term(x(lo.i(), lo.j(), lo.k()), x(hi.i(), hi.j(), hi.k()))) {
    return std::nullopt;
  }
  if (a.i == b.i) {
    return Family::M;
  }
  if (a.j == b.j) {
    return Family::N;
  }
  if (a.k == b.k) {
    return Family::R;
  }
  return Family::T;
}

SparsePoly MinorCombination::expand() const {
  SparsePoly sum;
  for (const auto& [sign, minor] : terms) {
    if (sign > 0) {
      sum += minor.as_poly();
    } else {
      sum -= minor.as_poly();
    }
  }
  return sum;
}

std::string MinorCombination::to_string() const {
  std::string out;
  for (const auto& [sign, minor] : terms) {
    if (out.empty()) {
      out += sign > 0 ? "" : "-";
    } else {
      out += sign > 0 ? " + " : " - ";
    }
    out += minor.label();
  }
  return out;
}

MinorCombination decompose_into_minors(const RBinomial& generator, const Shape& shape) {
  const auto kind = classify(generator, shape);
  if (!kind) {
    throw std::invalid_argument("decompose_into_minors: " + generator.to_string() + " is not in M u N u R u T");
  }
  const RVariable& lo = generator.plus[0];
  const RVariable& hi = generator.plus[1];
  const int m = shape.m();
  const int n = shape.n();
  const int i1 = lo.i;
  const int i2 = hi.i;
  const int j1 = lo.j;
  const int j2 = hi.j;
  const int k1 = lo.k;
  const int k2 = hi.k;

  MinorCombination result;
  switch (*kind) {
    case Family::M:
      result.terms.emplace_back(1, v_minor(shape, (k1 - 1) * m + i1, (k2 - 1) * m + i1, j1, j2));
      break;
    case Family::N:
      result.terms.emplace_back(1, h_minor(shape, i1, i2, (k1 - 1) * n + j1, (k2 - 1) * n + j1));
      break;
    case Family::R:
      result.terms.emplace_back(1, h_minor(shape, i1, i2, (k1 - 1) * n + j1, (k1 - 1) * n + j2));
      break;
    case Family::T: {
      const Term unsorted = generator.minus;
      const Minor2x2 vertical = v_minor(shape, (k1 - 1) * m + i1, (k2 - 1) * m + i2, j1, j2);
      if (unsorted == make_term(x(i1, j2, k1), x(i2, j1, k2))) {
        result.terms.emplace_back(1, vertical);
      } else if (unsorted == make_term(x(i2, j1, k1), x(i1, j2, k2))) {
        result.terms.emplace_back(1, h_minor(shape, i1, i2, (k1 - 1) * n + j1, (k2 - 1) * n + j2));
      } else {
        result.terms.emplace_back(1, vertical);
        result.terms.emplace_back(1, h_minor(shape, i1, i2, (k1 - 1) * n + j2, (k2 - 1) * n + j1));
      }
      break;
    }
  }
  if (result.expand() != SparsePoly::from_binomial(generator)) {
    throw std::logic_error("decompose_into_minors: expansion mismatch for " + generator.to_string());
  }
  return result;
}

std::string MinorDependency::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < 4; ++s) {
    if (s == 0) {
      out += signs[s] > 0 ? "" : "-";
    } else {
      out += signs[s] > 0 ? " + " : " - ";
    }
    out += minors[s].label();
  }
  return out + " = 0";
}

std::optional<MinorDependency> natural_generators_not_minimal_witness(const Shape& shape) {
  const auto minors = distinct_minors(shape);
  std::map<BlockMonomial, std::vector<std::size_t>> fibers;
  std::vector<BlockMonomial> fiber_order;
  for (std::size_t s = 0; s < minors.size(); ++s) {
    const Term diagonal = minors[s].as_binomial().plus;
    auto image = phi_monomial(diagonal, shape);
    auto [it, inserted] = fibers.try_emplace(image);
    if (inserted) {
      fiber_order.push_back(image);
    }
    it->second.push_back(s);
  }

  for (const auto& key : fiber_order) {
    const auto& fiber = fibers.at(key);
    const std::size_t size = fiber.size();
    if (size < 4) {
      continue;
    }
    std::vector<SparsePoly> polys;
    polys.reserve(size);
    for (std::size_t idx : fiber) {
      polys.push_back(minors[idx].as_poly());
    }
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        for (std::size_t c = b + 1; c < size; ++c) {
          for (std::size_t d = c + 1; d < size; ++d) {
            for (int mask = 0; mask < 8; ++mask) {
              const std::array<int, 4> signs{1, (mask & 4) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 1) ? -1 : 1};
              SparsePoly sum = polys[a];
              const std::array<std::size_t, 3> rest{b, c, d};
              for (std::size_t t = 0; t < 3; ++t) {
                if (signs[t + 1] > 0) {
                  sum += polys[rest[t]];
                } else {
                  sum -= polys[rest[t]];
                }
              }
              if (sum.is_zero()) {
                return MinorDependency{
                    {minors[fiber[a]], minors[fiber[b]], minors[fiber[c]], minors[fiber[d]]}, signs};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace toricdd
