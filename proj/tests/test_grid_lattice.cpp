#include "oracles.hpp"

#include "toricdd/grid_lattice.hpp"

#include <doctest.h>

using namespace toricdd;

TEST_SUITE("grid_lattice") {
  TEST_CASE("meet and join are componentwise") {
    const Shape s(2, 2, 3);
    const GridPoint p(s, 2, 1, 3);
    const GridPoint q(s, 1, 2, 3);
    CHECK(meet(p, q) == GridPoint(s, 1, 1, 3));
    CHECK(join(p, q) == GridPoint(s, 2, 2, 3));
    CHECK(meet(p, p) == p);
    CHECK(join(p, p) == p);
  }

  TEST_CASE("bounds are enforced") {
    const Shape s(2, 2, 2);
    CHECK_THROWS_AS(GridPoint(s, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GridPoint(s, 1, 0, 1), std::invalid_argument);
    const GridPoint p(s, 1, 1, 1);
    const GridPoint q(Shape(3, 3, 3), 1, 1, 1);
    CHECK_THROWS_AS(meet(p, q), std::invalid_argument);
    CHECK_THROWS_AS(join(p, q), std::invalid_argument);
    CHECK_THROWS_AS(comparable(p, q), std::invalid_argument);
  }

  TEST_CASE("comparability") {
    const Shape s(2, 2, 3);
    CHECK(comparable(GridPoint(s, 1, 1, 1), GridPoint(s, 2, 2, 2)));
    CHECK_FALSE(comparable(GridPoint(s, 2, 1, 1), GridPoint(s, 1, 2, 1)));
    CHECK(comparable(GridPoint(s, 2, 1, 2), GridPoint(s, 2, 1, 3)));
  }

  TEST_CASE("lattice laws hold exhaustively") {
    for (const Shape s : {Shape(2, 2, 2), Shape(3, 3, 3), Shape(1, 3, 2)}) {
      const auto pts = grid_points(s);
      CHECK(pts.size() == static_cast<std::size_t>(s.variable_count()));
      for (const auto& p : pts) {
        for (const auto& q : pts) {
          CHECK(meet(p, join(p, q)) == p);
          CHECK(join(p, meet(p, q)) == p);
          CHECK(leq(meet(p, q), p));
          CHECK(leq(p, join(p, q)));
          CHECK(comparable(p, q) == (meet(p, q) == p || meet(p, q) == q));
          if (s == Shape(2, 2, 2) || s == Shape(1, 3, 2)) {
            for (const auto& t : pts) {
              CHECK(meet(p, join(q, t)) == join(meet(p, q), meet(p, t)));
              CHECK(join(p, meet(q, t)) == meet(join(p, q), join(p, t)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("distributivity on the 3x3x3 grid") {
    const auto pts = grid_points(Shape(3, 3, 3));
    std::size_t failures = 0;
    for (const auto& p : pts) {
      for (const auto& q : pts) {
        for (const auto& t : pts) {
          failures += meet(p, join(q, t)) == join(meet(p, q), meet(p, t)) ? 0 : 1;
        }
      }
    }
    CHECK(failures == 0);
  }

  TEST_CASE("comparable pair counts") {
    CHECK(count_comparable_pairs(Shape(2, 2, 2)) == 27);
    CHECK(count_comparable_pairs(Shape(1, 1, 1)) == 1);
    CHECK(count_comparable_pairs(Shape(3, 2, 4)) == 180);
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
          const Shape s(m, n, r);
          CHECK(count_comparable_pairs(s) == oracle::comparable_pairs(s));
        }
      }
    }
  }

  TEST_CASE("maximal chains of the grid count words") {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
          const std::array<int, 3> parts{m - 1, n - 1, r - 1};
          CHECK(oracle::maximal_grid_chains(Shape(m, n, r)) == multinomial(parts));
        }
      }
    }
  }

  TEST_CASE("ideals of P_mnr are isomorphic to the grid") {
    CHECK(lattice_isomorphic_to_ideals(Shape(2, 2, 2)));
    CHECK(lattice_isomorphic_to_ideals(Shape(3, 2, 4)));
    CHECK(lattice_isomorphic_to_ideals(Shape(1, 1, 1)));
    CHECK(lattice_isomorphic_to_ideals(Shape(4, 1, 3)));
    CHECK_THROWS_AS(lattice_isomorphic_to_ideals(Shape(30, 30, 30)), BudgetExceeded);
  }
}
