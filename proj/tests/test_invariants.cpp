#include "oracles.hpp"

#include "toricdd/generators.hpp"
#include "toricdd/int_polynomial.hpp"
#include "toricdd/invariants.hpp"

#include <doctest.h>

using namespace toricdd;

namespace {

IntPolynomial from_counts(const std::vector<long long>& counts) {
  std::vector<BigInt> c(counts.begin(), counts.end());
  return IntPolynomial(c);
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("report values") {
    const auto a = compute_invariants(Shape(2, 2, 2));
    CHECK(a.mu == 9);
    CHECK(a.krull_dim == 4);
    CHECK(a.multiplicity == 6);
    CHECK(a.regularity == 2);
    CHECK(a.a_invariant == -2);
    CHECK(a.gorenstein);
    CHECK(a.h_polynomial == IntPolynomial{1, 4, 1});

    const auto b = compute_invariants(Shape(3, 2, 4));
    CHECK(b.mu == 120);
    CHECK(b.krull_dim == 7);
    CHECK(b.multiplicity == 60);
    CHECK(b.regularity == 3);
    CHECK(b.a_invariant == -4);
    CHECK_FALSE(b.gorenstein);

    for (int r = 1; r <= 5; ++r) {
      const auto c = compute_invariants(Shape(1, 1, r));
      CHECK(c.mu == 0);
      CHECK(c.krull_dim == r);
      CHECK(c.multiplicity == 1);
      CHECK(c.regularity == 0);
      CHECK(c.a_invariant == -r);
      CHECK(c.gorenstein);
    }
  }

  TEST_CASE("JSON report is stable") {
    CHECK(to_json(compute_invariants(Shape(2, 2, 2))) ==
          R"({"mu":9,"dim":4,"multiplicity":6,"regularity":2,"a_invariant":-2,"gorenstein":true,"h_polynomial":[1,4,1]})");
    CHECK(to_json(compute_invariants(Shape(40, 40, 40))).find("\"multiplicity\":\"") != std::string::npos);
  }

  TEST_CASE("report identities and oracles") {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
          const Shape s(m, n, r);
          CAPTURE(s.to_string());
          const auto rep = compute_invariants(s);
          CHECK(rep.regularity == rep.krull_dim + rep.a_invariant);
          CHECK(rep.multiplicity == rep.h_polynomial.evaluate(1));
          CHECK(rep.regularity == rep.h_polynomial.degree());
          CHECK(rep.mu == oracle::incomparable_pairs(s));
          CHECK(rep.multiplicity == oracle::maximal_grid_chains(s));
          CHECK(rep.gorenstein == rep.h_polynomial.is_palindromic());
          CHECK(rep.gorenstein == is_pure(make_pmnr(m, n, r)));
          CHECK(rep.gorenstein == is_gorenstein(s));
          CHECK(rep.h_polynomial.has_nonnegative_coefficients());
        }
      }
    }
  }

  TEST_CASE("Hilbert function") {
    CHECK(hilbert_function(Shape(3, 2, 4), 0) == 1);
    CHECK(hilbert_function(Shape(3, 2, 4), 1) == 24);
    CHECK(hilbert_function(Shape(2, 2, 2), 2) == 27);
    CHECK_THROWS_AS(hilbert_function(Shape(2, 2, 2), -1), std::invalid_argument);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
          const Shape s(m, n, r);
          const Poset p = make_pmnr(m, n, r);
          for (int d = 0; d <= 4; ++d) {
            CHECK(hilbert_function(s, d) == order_preserving_map_count(p, d));
            CHECK(hilbert_function(s, d) == oracle::multichains(s, d));
          }
        }
      }
    }
  }

  TEST_CASE("order-preserving maps") {
    CHECK(order_preserving_map_count(make_pmnr(1, 1, 1), 3) == 1);
    CHECK(order_preserving_map_count(make_pmnr(2, 2, 2), 1) == 8);
    CHECK(order_preserving_map_count(make_pmnr(3, 2, 4), 2) == 180);
    CHECK(order_preserving_map_count(make_pmnr(3, 2, 4), 2) == hilbert_function(Shape(3, 2, 4), 2));
    CHECK_THROWS_AS(order_preserving_map_count(make_pmnr(6, 6, 4), 1), BudgetExceeded);
  }

  TEST_CASE("h-polynomial by three methods") {
    CHECK(h_poly_via_words(Shape(2, 2, 2)) == IntPolynomial{1, 4, 1});
    CHECK(h_poly_via_words(Shape(2, 2, 3)) == IntPolynomial{1, 7, 4});
    CHECK(h_poly_via_words(Shape(1, 1, 6)) == IntPolynomial{1});
    CHECK(h_poly_via_linear_extensions(Shape(2, 2, 2)) == IntPolynomial{1, 4, 1});
    CHECK(h_poly_via_linear_extensions(Shape(3, 2, 4)).evaluate(1) == 60);
    CHECK(h_poly_via_linear_extensions(Shape(1, 1, 1)) == IntPolynomial{1});
    CHECK(h_poly_via_series(Shape(2, 2, 2)) == IntPolynomial{1, 4, 1});
    CHECK(h_poly_via_series(Shape(2, 2, 3)) == IntPolynomial{1, 7, 4});
    CHECK(h_poly_via_series(Shape(1, 1, 5)) == IntPolynomial{1});
    CHECK(h_poly_via_series(Shape(2, 2, 2)).to_string() == "1 + 4t + t^2");
    CHECK_THROWS_AS(h_poly_via_words(Shape(8, 8, 8), 1000), BudgetExceeded);
    CHECK_THROWS_AS(h_poly_via_linear_extensions(Shape(8, 8, 8), 1000), BudgetExceeded);

    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
          const Shape s(m, n, r);
          const auto series = h_poly_via_series(s);
          CHECK(series == h_poly_via_words(s));
          CHECK(series == h_poly_via_linear_extensions(s));
          CHECK(series == from_counts(oracle::descent_counts({m - 1, n - 1, r - 1})));
        }
      }
    }
  }

  TEST_CASE("descent polynomial of multisets") {
    const std::vector<int> eulerian{1, 1, 1, 1};
    CHECK(descent_polynomial(eulerian) == IntPolynomial{1, 11, 11, 1});
    const std::vector<int> single{0, 0, 4};
    CHECK(descent_polynomial(single) == IntPolynomial{1});
    const std::vector<int> empty;
    CHECK(descent_polynomial(empty) == IntPolynomial{1});
  }

  TEST_CASE("MacMahon identity") {
    const std::vector<int> a{1, 1, 1};
    CHECK(macmahon_check(a, 5));
    const std::vector<int> b{0, 0, 4};
    CHECK(macmahon_check(b, 5));
    const std::vector<int> c{2, 1, 3};
    CHECK(macmahon_check(c, 6));
    CHECK(macmahon_series(a, 5) == IntPolynomial{1, 4, 1});
    const std::vector<int> big{5, 5, 5};
    CHECK_THROWS_AS(macmahon_check(big, 3, 100), BudgetExceeded);
  }

  TEST_CASE("symmetry") {
    CHECK(check_symmetry(Shape(2, 3, 4)));
    CHECK(check_symmetry(Shape(2, 2, 2)));
    CHECK(check_symmetry(Shape(1, 2, 5)));
  }

  TEST_CASE("IntPolynomial arithmetic") {
    const IntPolynomial p{1, 2};
    const IntPolynomial q{0, 0, 3};
    CHECK(p * q == IntPolynomial{0, 0, 3, 6});
    CHECK(p - p == IntPolynomial{});
    CHECK((p - p).degree() == -1);
    CHECK(p + q == IntPolynomial{1, 2, 3});
    CHECK(IntPolynomial::one_minus_t_power(2) == IntPolynomial{1, -2, 1});
    CHECK(IntPolynomial{1, 2, 3}.truncated(1) == p);
    CHECK(IntPolynomial{1, 0, 0}.degree() == 0);
    CHECK(IntPolynomial{1, -1}.to_string() == "1 - t");
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK_FALSE(IntPolynomial{1, -1}.has_nonnegative_coefficients());
  }
}
