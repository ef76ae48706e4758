#include "toricdd/grid_lattice.hpp"

#include "toricdd/errors.hpp"
#include "toricdd/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace toricdd {

GridPoint::GridPoint(const Shape& bounds, int i, int j, int k) : bounds_(bounds), i_(i), j_(j), k_(k) {
  if (i < 1 || i > bounds.m() || j < 1 || j > bounds.n() || k < 1 || k > bounds.r()) {
    throw std::invalid_argument("grid point " + to_string() + " outside " + bounds.to_string());
  }
}

std::string GridPoint::to_string() const {
  return "(" + std::to_string(i_) + "," + std::to_string(j_) + "," + std::to_string(k_) + ")";
}

namespace {

void require_same_bounds(const GridPoint& p, const GridPoint& q) {
  if (p.bounds() != q.bounds()) {
    throw std::invalid_argument("grid points from different lattices");
  }
}

}  // namespace

GridPoint meet(const GridPoint& p, const GridPoint& q) {
  require_same_bounds(p, q);
  return GridPoint(p.bounds(), std::min(p.i(), q.i()), std::min(p.j(), q.j()), std::min(p.k(), q.k()));
}

GridPoint join(const GridPoint& p, const GridPoint& q) {
  require_same_bounds(p, q);
  return GridPoint(p.bounds(), std::max(p.i(), q.i()), std::max(p.j(), q.j()), std::max(p.k(), q.k()));
}

bool leq(const GridPoint& p, const GridPoint& q) {
  require_same_bounds(p, q);
  return p.i() <= q.i() && p.j() <= q.j() && p.k() <= q.k();
}

bool comparable(const GridPoint& p, const GridPoint& q) { return leq(p, q) || leq(q, p); }

std::vector<GridPoint> grid_points(const Shape& shape) {
  std::vector<GridPoint> points;
  points.reserve(static_cast<std::size_t>(shape.variable_count()));
  for (int i = 1; i <= shape.m(); ++i) {
    for (int j = 1; j <= shape.n(); ++j) {
      for (int k = 1; k <= shape.r(); ++k) {
        points.emplace_back(shape, i, j, k);
      }
    }
  }
  return points;
}

BigInt count_comparable_pairs(const Shape& shape) {
  return binomial(shape.m() + 1, 2) * binomial(shape.n() + 1, 2) * binomial(shape.r() + 1, 2);
}

bool lattice_isomorphic_to_ideals(const Shape& shape) {
  if (shape.variable_count() > 10'000) {
    throw BudgetExceeded("lattice_isomorphic_to_ideals: more than 10^4 ideals");
  }
  const int m = shape.m();
  const int n = shape.n();
  const Poset poset = make_pmnr(shape.m(), shape.n(), shape.r());
  const auto ideals = order_ideals(poset);

  // Chain membership follows the labeling of make_pmnr: A1, then A2, then A3.
  const auto image = [&](const OrderIdeal& ideal) {
    int a1 = 0;
    int a2 = 0;
    int a3 = 0;
    for (std::size_t e : ideal.elements()) {
      const int l = poset.label(e);
      if (l <= m - 1) {
        ++a1;
      } else if (l <= m + n - 2) {
        ++a2;
      } else {
        ++a3;
      }
    }
    return GridPoint(shape, a1 + 1, a2 + 1, a3 + 1);
  };

  std::vector<GridPoint> images;
  images.reserve(ideals.size());
  std::set<std::tuple<int, int, int>> distinct;
  for (const auto& ideal : ideals) {
    images.push_back(image(ideal));
    distinct.emplace(images.back().i(), images.back().j(), images.back().k());
  }
  if (distinct.size() != ideals.size() || static_cast<long long>(distinct.size()) != shape.variable_count()) {
    return false;
  }
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      if (ideals[a].is_subset_of(ideals[b]) != leq(images[a], images[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace toricdd
