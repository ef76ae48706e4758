#include "oracles.hpp"

#include "toricdd/bigint.hpp"
#include "toricdd/poset.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace toricdd;

namespace {

std::vector<LinearExtension> all_extensions(const Poset& p) {
  std::vector<LinearExtension> out;
  LinearExtensionGenerator gen(p);
  while (auto e = gen.next()) {
    out.push_back(*e);
  }
  return out;
}

LinearExtension by_labels(const Poset& p, std::initializer_list<int> labels) {
  LinearExtension e;
  for (int label : labels) {
    e.sequence.push_back(p.element_with_label(label));
  }
  return e;
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("make_pmnr builds three labeled chains") {
    CHECK(make_pmnr(1, 1, 1).size() == 0);

    const Poset p = make_pmnr(3, 2, 4);
    REQUIRE(p.size() == 6);
    const auto e = [&](int label) { return p.element_with_label(label); };
    CHECK(p.less(e(1), e(2)));
    CHECK(p.less(e(4), e(5)));
    CHECK(p.less(e(5), e(6)));
    CHECK(p.less(e(4), e(6)));
    CHECK_FALSE(p.comparable(e(3), e(1)));
    CHECK_FALSE(p.comparable(e(3), e(4)));
    CHECK_FALSE(p.comparable(e(2), e(4)));

    const Poset q = make_pmnr(2, 2, 2);
    REQUIRE(q.size() == 3);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        CHECK(q.comparable(a, b) == (a == b));
      }
    }
    CHECK_THROWS_AS(make_pmnr(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_pmnr(2, -1, 2), std::invalid_argument);
  }

  TEST_CASE("constructor validates order and labels") {
    const std::vector<Poset::Relation> cycle{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Poset(3, cycle), std::invalid_argument);
    const std::vector<Poset::Relation> out_of_range{{0, 5}};
    CHECK_THROWS_AS(Poset(3, out_of_range), std::invalid_argument);
    const std::vector<Poset::Relation> chain{{0, 1}};
    CHECK_THROWS_AS(Poset(2, chain, {2, 1}), std::invalid_argument);  // not natural
    CHECK_THROWS_AS(Poset(2, chain, {1, 1}), std::invalid_argument);
    CHECK_NOTHROW(Poset(2, chain, {1, 2}));
  }

  TEST_CASE("transitive closure and cover relations") {
    const std::vector<Poset::Relation> rel{{0, 1}, {1, 2}, {0, 2}, {3, 2}};
    const Poset p(4, rel, {1, 2, 4, 3});
    CHECK(p.leq(0, 2));
    CHECK(p.covers(0, 1));
    CHECK_FALSE(p.covers(0, 2));
    CHECK(p.cover_relations() == std::vector<Poset::Relation>{{0, 1}, {1, 2}, {3, 2}});
  }

  TEST_CASE("order ideals") {
    const Poset empty = make_pmnr(1, 1, 1);
    const auto only = order_ideals(empty);
    REQUIRE(only.size() == 1);
    CHECK(only[0].cardinality() == 0);

    CHECK(order_ideals(make_pmnr(2, 2, 2)).size() == 8);
    CHECK(order_ideals(make_pmnr(3, 2, 4)).size() == 24);

    const Poset p = make_pmnr(3, 2, 4);
    const auto ideals = order_ideals(p);
    for (const auto& a : ideals) {
      CHECK(is_order_ideal(p, a.mask()));
      for (const auto& b : ideals) {
        CHECK(is_order_ideal(p, a.unite(b).mask()));
        CHECK(is_order_ideal(p, a.intersect(b).mask()));
        CHECK(a.intersect(b).is_subset_of(a.unite(b)));
      }
    }
    std::vector<bool> not_closed(6, false);
    not_closed[p.element_with_label(2)] = true;
    CHECK_FALSE(is_order_ideal(p, not_closed));
  }

  TEST_CASE("order ideal counts equal mnr") {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
          CHECK(order_ideals(make_pmnr(m, n, r)).size() == static_cast<std::size_t>(m * n * r));
        }
      }
    }
  }

  TEST_CASE("width rank purity") {
    const Poset p = make_pmnr(3, 2, 4);
    CHECK(width(p) == 3);
    CHECK(rank(p) == 2);
    CHECK_FALSE(is_pure(p));

    const Poset q = make_pmnr(2, 2, 2);
    CHECK(width(q) == 3);
    CHECK(rank(q) == 0);
    CHECK(is_pure(q));

    const Poset c = make_pmnr(1, 1, 5);
    CHECK(width(c) == 1);
    CHECK(rank(c) == 3);
    CHECK(is_pure(c));

    const Poset e = make_pmnr(1, 1, 1);
    CHECK(width(e) == 0);
    CHECK(rank(e) == -1);
    CHECK(is_pure(e));
  }

  TEST_CASE("linear extensions") {
    const auto none = all_extensions(make_pmnr(1, 1, 1));
    REQUIRE(none.size() == 1);
    CHECK(none[0].sequence.empty());

    CHECK(all_extensions(make_pmnr(2, 2, 2)).size() == 6);
    CHECK(all_extensions(make_pmnr(3, 2, 4)).size() == 60);

    const Poset p = make_pmnr(3, 2, 4);
    const auto ext = all_extensions(p);
    for (std::size_t s = 0; s + 1 < ext.size(); ++s) {
      CHECK(ext[s].label_sequence(p) < ext[s + 1].label_sequence(p));
    }
    for (const auto& e : ext) {
      CHECK(is_linear_extension(p, e.sequence));
    }
  }

  TEST_CASE("linear extension counts equal the multinomial") {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
          const std::array<int, 3> parts{m - 1, n - 1, r - 1};
          CHECK(BigInt(all_extensions(make_pmnr(m, n, r)).size()) == multinomial(parts));
        }
      }
    }
  }

  TEST_CASE("descent counts") {
    const Poset p = make_pmnr(3, 2, 4);
    CHECK(descent_count(by_labels(p, {1, 2, 3, 4, 5, 6}), p) == 0);
    CHECK(descent_count(by_labels(p, {1, 3, 4, 2, 5, 6}), p) == 1);

    const Poset q = make_pmnr(2, 2, 2);
    CHECK(descent_count(by_labels(q, {3, 2, 1}), q) == 2);

    CHECK_THROWS_AS(descent_count(by_labels(p, {2, 1, 3, 4, 5, 6}), p), std::invalid_argument);
    for (const auto& e : all_extensions(p)) {
      CHECK(descent_count(e, p) < p.size());
    }
  }

  TEST_CASE("serialization round trip") {
    const Poset p = make_pmnr(3, 2, 4);
    std::stringstream buffer;
    write_poset(buffer, p);
    const Poset q = read_poset(buffer);
    REQUIRE(q.size() == p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        CHECK(q.leq(q.element_with_label(p.label(a)), q.element_with_label(p.label(b))) == p.leq(a, b));
      }
    }

    std::istringstream commented("# three chain\nn=3\n\n1 < 2\n2 < 3\n");
    const Poset chain = read_poset(commented);
    CHECK(rank(chain) == 2);

    std::istringstream bad_header("3\n1 < 2\n");
    CHECK_THROWS_AS(read_poset(bad_header), std::invalid_argument);
    std::istringstream bad_line("n=2\n1 > 2\n");
    CHECK_THROWS_AS(read_poset(bad_line), std::invalid_argument);
    std::istringstream bad_label("n=2\n1 < 3\n");
    CHECK_THROWS_AS(read_poset(bad_label), std::invalid_argument);
  }

  TEST_CASE("random posets agree with brute force") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t size = 1 + static_cast<std::size_t>(trial % 8);
      const double density = 0.1 + 0.1 * (trial % 6);
      const Poset p = oracle::random_poset(rng, size, density);
      CAPTURE(trial);
      CHECK(width(p) == oracle::width(p));
      CHECK(rank(p) == oracle::rank(p));
      CHECK(is_pure(p) == oracle::is_pure(p));
      CHECK(order_ideals(p).size() == oracle::order_ideal_count(p));
      const auto expected = oracle::linear_extensions(p);
      const auto got = all_extensions(p);
      CHECK(got.size() == expected.size());
      for (const auto& e : got) {
        CHECK(is_linear_extension(p, e.sequence));
      }
    }
  }
}
