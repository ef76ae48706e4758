#pragma once

// Brute-force reference implementations. Each one is deliberately naive and
// shares no code path with the library routine it checks.

#include "toricdd/bigint.hpp"
#include "toricdd/generators.hpp"
#include "toricdd/poset.hpp"
#include "toricdd/shape.hpp"
#include "toricdd/stanley_reisner.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using toricdd::BigInt;
using toricdd::Poset;
using toricdd::Shape;
using toricdd::Vertex;
using toricdd::VertexSet;

inline std::vector<std::size_t> members(std::uint32_t mask, std::size_t size) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < size; ++e) {
    if (mask & (1u << e)) {
      out.push_back(e);
    }
  }
  return out;
}

inline bool is_chain(const Poset& p, std::uint32_t mask) {
  const auto set = members(mask, p.size());
  for (auto a : set) {
    for (auto b : set) {
      if (!p.comparable(a, b)) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_antichain(const Poset& p, std::uint32_t mask) {
  const auto set = members(mask, p.size());
  for (auto a : set) {
    for (auto b : set) {
      if (a != b && p.comparable(a, b)) {
        return false;
      }
    }
  }
  return true;
}

inline std::size_t width(const Poset& p) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
    if (is_antichain(p, mask)) {
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
  }
  return best;
}

/// Sizes of the maximal chains (chains not contained in a larger chain).
inline std::set<int> maximal_chain_sizes(const Poset& p) {
  std::set<int> sizes;
  const std::uint32_t full = 1u << p.size();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!is_chain(p, mask)) {
      continue;
    }
    bool maximal = true;
    for (std::size_t e = 0; e < p.size() && maximal; ++e) {
      if (!(mask & (1u << e)) && is_chain(p, mask | (1u << e))) {
        maximal = false;
      }
    }
    if (maximal) {
      sizes.insert(__builtin_popcount(mask));
    }
  }
  return sizes;
}

inline int rank(const Poset& p) { return *maximal_chain_sizes(p).rbegin() - 1; }
inline bool is_pure(const Poset& p) { return maximal_chain_sizes(p).size() == 1; }

inline std::size_t order_ideal_count(const Poset& p) {
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
    bool closed = true;
    for (std::size_t q = 0; q < p.size() && closed; ++q) {
      for (std::size_t s = 0; s < p.size() && closed; ++s) {
        if ((mask & (1u << q)) && p.leq(s, q) && !(mask & (1u << s))) {
          closed = false;
        }
      }
    }
    count += closed ? 1 : 0;
  }
  return count;
}

/// All permutations of the elements that respect the order.
inline std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t s = 0; s < perm.size() && ok; ++s) {
      for (std::size_t t = s + 1; t < perm.size() && ok; ++t) {
        ok = !p.less(perm[t], perm[s]);
      }
    }
    if (ok) {
      out.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Random poset on `size` elements: relations drawn between label ranks,
/// then elements shuffled so indices and labels differ.
inline Poset random_poset(std::mt19937& rng, std::size_t size, double density) {
  std::vector<std::size_t> index_of_rank(size);
  std::iota(index_of_rank.begin(), index_of_rank.end(), 0);
  std::shuffle(index_of_rank.begin(), index_of_rank.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<Poset::Relation> relations;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (coin(rng)) {
        relations.emplace_back(index_of_rank[a], index_of_rank[b]);
      }
    }
  }
  std::vector<int> labels(size);
  for (std::size_t rank = 0; rank < size; ++rank) {
    labels[index_of_rank[rank]] = static_cast<int>(rank + 1);
  }
  return Poset(size, relations, labels);
}

using Point = std::array<int, 3>;

inline std::vector<Point> grid(const Shape& s) {
  std::vector<Point> out;
  for (int i = 1; i <= s.m(); ++i) {
    for (int j = 1; j <= s.n(); ++j) {
      for (int k = 1; k <= s.r(); ++k) {
        out.push_back({i, j, k});
      }
    }
  }
  return out;
}

inline bool point_leq(const Point& a, const Point& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

/// Unordered pairs {p, q}, p == q allowed, with p, q comparable.
inline long long comparable_pairs(const Shape& s) {
  const auto g = grid(s);
  long long count = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a; b < g.size(); ++b) {
      count += (point_leq(g[a], g[b]) || point_leq(g[b], g[a])) ? 1 : 0;
    }
  }
  return count;
}

inline long long incomparable_pairs(const Shape& s) {
  const long long v = s.variable_count();
  return v * (v + 1) / 2 - comparable_pairs(s);
}

/// Saturated chains bottom to top of the grid, by dynamic programming.
inline BigInt maximal_grid_chains(const Shape& s) {
  std::map<Point, BigInt> ways;
  for (const auto& p : grid(s)) {
    if (p == Point{1, 1, 1}) {
      ways[p] = 1;
      continue;
    }
    BigInt total = 0;
    for (int axis = 0; axis < 3; ++axis) {
      Point q = p;
      --q[axis];
      if (q[axis] >= 1) {
        total += ways[q];
      }
    }
    ways[p] = total;
  }
  return ways[{s.m(), s.n(), s.r()}];
}

/// Multichains p_1 <= ... <= p_d of grid points: the degree-d monomials of
/// the Hibi ring counted through standard monomials.
inline BigInt multichains(const Shape& s, int d) {
  const auto g = grid(s);
  std::vector<BigInt> ending(g.size(), 1);
  if (d == 0) {
    return 1;
  }
  for (int step = 1; step < d; ++step) {
    std::vector<BigInt> next(g.size(), 0);
    for (std::size_t b = 0; b < g.size(); ++b) {
      for (std::size_t a = 0; a < g.size(); ++a) {
        if (point_leq(g[a], g[b])) {
          next[b] += ending[a];
        }
      }
    }
    ending = std::move(next);
  }
  return std::accumulate(ending.begin(), ending.end(), BigInt(0));
}

/// Descent polynomial over distinct arrangements of a multiset, by
/// memoized recursion on the next letter (no permutation generator involved).
inline std::vector<long long> descent_counts(std::vector<int> counts) {
  // state: remaining counts, previous letter -> distribution of descents
  std::map<std::pair<std::vector<int>, int>, std::vector<long long>> memo;
  const int total = std::accumulate(counts.begin(), counts.end(), 0);
  std::function<std::vector<long long>(std::vector<int>&, int)> go = [&](std::vector<int>& left, int previous) {
    const auto key = std::make_pair(left, previous);
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    std::vector<long long> dist(static_cast<std::size_t>(total) + 1, 0);
    if (std::accumulate(left.begin(), left.end(), 0) == 0) {
      dist[0] = 1;
    }
    for (std::size_t letter = 0; letter < left.size(); ++letter) {
      if (left[letter] == 0) {
        continue;
      }
      --left[letter];
      const auto sub = go(left, static_cast<int>(letter));
      ++left[letter];
      const int shift = (previous > static_cast<int>(letter)) ? 1 : 0;
      for (std::size_t s = 0; s + static_cast<std::size_t>(shift) < dist.size(); ++s) {
        dist[s + static_cast<std::size_t>(shift)] += sub[s];
      }
    }
    memo[key] = dist;
    return dist;
  };
  auto dist = go(counts, -1);
  while (dist.size() > 1 && dist.back() == 0) {
    dist.pop_back();
  }
  return dist;
}

/// Every vertex of the m x nr grid.
inline VertexSet vertices(const Shape& s) {
  VertexSet out;
  for (int row = 1; row <= s.m(); ++row) {
    for (int col = 1; col <= s.n() * s.r(); ++col) {
      out.push_back(Vertex{row, col});
    }
  }
  return out;
}

/// Conflict test written directly from the matrix picture: the two points,
/// as entries of H and V, form the main diagonal of some 2-minor.
inline bool on_a_diagonal(const Vertex& p, const Vertex& q, const Shape& s) {
  const int n = s.n();
  const int m = s.m();
  const auto h_pos = [&](const Vertex& v) { return std::make_pair(v.row, v.col); };
  const auto v_pos = [&](const Vertex& v) {
    const int k = (v.col - 1) / n + 1;
    return std::make_pair((k - 1) * m + v.row, v.col - (k - 1) * n);
  };
  const auto diagonal = [](std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && a.second < b.second) || (b.first < a.first && b.second < a.second);
  };
  return diagonal(h_pos(p), h_pos(q)) || diagonal(v_pos(p), v_pos(q));
}

/// Facets by filtering every vertex subset (mnr <= 16).
inline std::vector<VertexSet> facets_by_subsets(const Shape& s) {
  const auto all = vertices(s);
  const std::uint32_t full = 1u << all.size();
  std::vector<char> independent(full, 0);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < all.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < all.size() && ok; ++b) {
        if ((mask >> a & 1u) && (mask >> b & 1u) && on_a_diagonal(all[a], all[b], s)) {
          ok = false;
        }
      }
    }
    independent[mask] = ok;
  }
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!independent[mask]) {
      continue;
    }
    bool maximal = true;
    for (std::size_t e = 0; e < all.size() && maximal; ++e) {
      if (!(mask >> e & 1u) && independent[mask | (1u << e)]) {
        maximal = false;
      }
    }
    if (maximal) {
      VertexSet facet;
      for (std::size_t e = 0; e < all.size(); ++e) {
        if (mask >> e & 1u) {
          facet.push_back(all[e]);
        }
      }
      out.push_back(facet);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank over the rationals of the coefficient matrix of the given minors
/// (rows) against the monomials they involve (columns).
inline std::size_t minor_rank(const std::vector<toricdd::Minor2x2>& minors) {
  using Rational = boost::multiprecision::cpp_rational;
  std::map<toricdd::Monomial, std::size_t, toricdd::DiagonalGreater> column;
  std::vector<toricdd::SparsePoly> polys;
  for (const auto& minor : minors) {
    polys.push_back(minor.as_poly());
    for (const auto& [mono, coefficient] : polys.back().terms()) {
      column.try_emplace(mono, column.size());
    }
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& poly : polys) {
    std::vector<Rational> row(column.size(), 0);
    for (const auto& [mono, coefficient] : poly.terms()) {
      row[column[mono]] = Rational(coefficient);
    }
    rows.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < column.size() && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        const Rational factor = rows[r][c] / rows[rank][c];
        for (std::size_t k = 0; k < column.size(); ++k) {
          rows[r][k] -= factor * rows[rank][k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
