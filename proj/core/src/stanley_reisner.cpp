#include "toricdd/stanley_reisner.hpp"

#include "toricdd/bigint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace toricdd {

std::string Vertex::to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

Vertex vertex_of(const RVariable& variable, const Shape& shape) {
  return Vertex{variable.i, (variable.k - 1) * shape.n() + variable.j};
}

RVariable variable_of(const Vertex& vertex, const Shape& shape) {
  return RVariable{vertex.row, vertex.column_in_block(shape), vertex.block(shape)};
}

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

namespace {

// First point written before second in one of the leading-diagonal patterns.
bool diagonal_in_order(const RVariable& a, const RVariable& b) {
  if (a.k == b.k) {
    return b.i > a.i && b.j > a.j;
  }
  return a.k < b.k && (a.i < b.i || a.j < b.j);
}

void require_in_bounds(std::span<const Vertex> vertices, const Shape& shape) {
  for (const auto& v : vertices) {
    if (!v.in_bounds(shape)) {
      throw std::invalid_argument("vertex " + v.to_string() + " outside the grid of " + shape.to_string());
    }
  }
}

bool is_step(const Vertex& from, const Vertex& to) {
  return (to.row == from.row - 1 && to.col == from.col) || (to.row == from.row && to.col == from.col + 1);
}

// Up first (row decreasing), then right, excluding `from`, including `to`.
void append_connection(VertexSet& path, const Vertex& from, const Vertex& to) {
  for (int row = from.row - 1; row >= to.row; --row) {
    path.push_back(Vertex{row, from.col});
  }
  for (int col = from.col + 1; col <= to.col; ++col) {
    path.push_back(Vertex{to.row, col});
  }
}

}  // namespace

bool conflicts(const Vertex& p, const Vertex& q, const Shape& shape) {
  const RVariable a = variable_of(p, shape);
  const RVariable b = variable_of(q, shape);
  return diagonal_in_order(a, b) || diagonal_in_order(b, a);
}

std::vector<VertexPair> initial_generators(const Shape& shape) {
  std::vector<Vertex> all;
  for (int row = 1; row <= shape.m(); ++row) {
    for (int col = 1; col <= shape.n() * shape.r(); ++col) {
      all.push_back(Vertex{row, col});
    }
  }
  std::vector<VertexPair> result;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (conflicts(all[a], all[b], shape)) {
        result.emplace_back(all[a], all[b]);
      }
    }
  }
  return result;
}

bool is_face(std::span<const Vertex> vertices, const Shape& shape) {
  require_in_bounds(vertices, shape);
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (conflicts(vertices[a], vertices[b], shape)) {
        return false;
      }
    }
  }
  return true;
}

WordCode::WordCode(std::string letters, const Shape& shape) : letters_(std::move(letters)) {
  const auto count = [&](char c) { return static_cast<int>(std::count(letters_.begin(), letters_.end(), c)); };
  const bool valid = count('M') == shape.m() - 1 && count('N') == shape.n() - 1 && count('R') == shape.r() - 1 &&
                     static_cast<int>(letters_.size()) == shape.m() + shape.n() + shape.r() - 3;
  if (!valid) {
    throw std::invalid_argument("word `" + letters_ + "` is not an arrangement of M^" + std::to_string(shape.m() - 1) +
                                " N^" + std::to_string(shape.n() - 1) + " R^" + std::to_string(shape.r() - 1));
  }
}

bool is_valid_facet(const Facet& facet, const Shape& shape) {
  const int m = shape.m();
  const int n = shape.n();
  const int r = shape.r();
  const auto& g = facet.g;
  const auto& h = facet.h;
  if (g.size() != static_cast<std::size_t>(r + 1) || h.size() != static_cast<std::size_t>(r + 1) ||
      facet.paths.size() != static_cast<std::size_t>(r)) {
    return false;
  }
  if (g.front() != m || h.front() != n || g.back() != 1 || h.back() != 1) {
    return false;
  }
  for (int k = 0; k < r; ++k) {
    if (g[k] < g[k + 1] || h[k] < h[k + 1]) {
      return false;
    }
  }
  VertexSet all;
  for (int k = 1; k <= r; ++k) {
    const VertexSet& path = facet.paths[k - 1];
    if (path.empty()) {
      return false;
    }
    const Vertex start{g[k - 1], (k - 1) * n + h[k]};
    const Vertex end{g[k], (k - 1) * n + h[k - 1]};
    if (path.front() != start || path.back() != end) {
      return false;
    }
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      if (!is_step(path[s], path[s + 1])) {
        return false;
      }
    }
    all.insert(all.end(), path.begin(), path.end());
  }
  all = normalize(std::move(all));
  return all == facet.vertices && static_cast<int>(all.size()) == shape.dimension();
}

Facet word_to_facet(const WordCode& word, const Shape& shape) {
  const int r = shape.r();
  const int n = shape.n();
  const std::string& letters = word.letters();

  // g_k / h_k: one plus the number of M / N letters after the k-th R.
  Facet facet;
  facet.g.assign(static_cast<std::size_t>(r + 1), 1);
  facet.h.assign(static_cast<std::size_t>(r + 1), 1);
  facet.g[0] = shape.m();
  facet.h[0] = shape.n();
  std::vector<std::string> subwords(1);
  int seen_r = 0;
  for (std::size_t s = 0; s < letters.size(); ++s) {
    if (letters[s] != 'R') {
      subwords.back() += letters[s];
      continue;
    }
    ++seen_r;
    subwords.emplace_back();
    const std::string tail = letters.substr(s + 1);
    facet.g[seen_r] = 1 + static_cast<int>(std::count(tail.begin(), tail.end(), 'M'));
    facet.h[seen_r] = 1 + static_cast<int>(std::count(tail.begin(), tail.end(), 'N'));
  }

  for (int k = 1; k <= r; ++k) {
    VertexSet path{Vertex{facet.g[k - 1], (k - 1) * n + facet.h[k]}};
    for (char c : subwords[k - 1]) {
      Vertex next = path.back();
      if (c == 'M') {
        --next.row;
      } else {
        ++next.col;
      }
      path.push_back(next);
    }
    facet.vertices.insert(facet.vertices.end(), path.begin(), path.end());
    facet.paths.push_back(std::move(path));
  }
  facet.vertices = normalize(std::move(facet.vertices));
  return facet;
}

WordCode facet_to_word(const Facet& facet, const Shape& shape) {
  if (!is_valid_facet(facet, shape)) {
    throw std::invalid_argument("facet_to_word: not a valid facet of " + shape.to_string());
  }
  std::string letters;
  for (std::size_t k = 0; k < facet.paths.size(); ++k) {
    if (k > 0) {
      letters += 'R';
    }
    const VertexSet& path = facet.paths[k];
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      letters += path[s + 1].row < path[s].row ? 'M' : 'N';
    }
  }
  return WordCode(std::move(letters), shape);
}

Facet facet_from_vertices(VertexSet vertices, const Shape& shape) {
  vertices = normalize(std::move(vertices));
  require_in_bounds(vertices, shape);
  const int r = shape.r();
  const int n = shape.n();

  Facet facet;
  facet.vertices = vertices;
  facet.paths.assign(static_cast<std::size_t>(r), {});
  for (const auto& v : vertices) {
    facet.paths[v.block(shape) - 1].push_back(v);
  }
  std::vector<std::optional<int>> g(static_cast<std::size_t>(r + 1));
  std::vector<std::optional<int>> h(static_cast<std::size_t>(r + 1));
  const auto assign = [](std::optional<int>& slot, int value) {
    if (slot && *slot != value) {
      throw std::invalid_argument("facet_from_vertices: inconsistent path endpoints");
    }
    slot = value;
  };
  for (int k = 1; k <= r; ++k) {
    VertexSet& path = facet.paths[k - 1];
    if (path.empty()) {
      throw std::invalid_argument("facet_from_vertices: block " + std::to_string(k) + " is empty");
    }
    std::sort(path.begin(), path.end(), [](const Vertex& a, const Vertex& b) {
      return a.row != b.row ? a.row > b.row : a.col < b.col;
    });
    const int offset = (k - 1) * n;
    assign(g[k - 1], path.front().row);
    assign(h[k], path.front().col - offset);
    assign(g[k], path.back().row);
    assign(h[k - 1], path.back().col - offset);
  }
  for (int k = 0; k <= r; ++k) {
    facet.g.push_back(*g[k]);
    facet.h.push_back(*h[k]);
  }
  if (!is_valid_facet(facet, shape)) {
    throw std::invalid_argument("facet_from_vertices: " + to_string(vertices) + " is not a facet of " +
                                shape.to_string());
  }
  return facet;
}

Facet extend_to_facet(VertexSet face, const Shape& shape) {
  face = normalize(std::move(face));
  if (!is_face(face, shape)) {
    throw std::invalid_argument("extend_to_facet: " + to_string(face) + " is not a face");
  }
  const int m = shape.m();
  const int n = shape.n();
  const int r = shape.r();
  if (face.empty()) {
    face.push_back(Vertex{m, 1});
  }

  std::vector<VertexSet> blocks(static_cast<std::size_t>(r));
  for (const auto& v : face) {
    blocks[v.block(shape) - 1].push_back(v);
  }
  std::vector<int> nonempty;
  for (int k = 1; k <= r; ++k) {
    auto& block = blocks[k - 1];
    std::sort(block.begin(), block.end(), [](const Vertex& a, const Vertex& b) {
      return a.row != b.row ? a.row > b.row : a.col < b.col;
    });
    if (!block.empty()) {
      nonempty.push_back(k);
    }
  }
  // First point of block k: largest row, smallest column; in-block column.
  const auto first_row = [&](int k) { return blocks[k - 1].front().row; };
  const auto first_col = [&](int k) { return blocks[k - 1].front().col - (k - 1) * n; };
  const auto previous_nonempty = [&](int k) -> std::optional<int> {
    std::optional<int> found;
    for (int c : nonempty) {
      if (c < k) {
        found = c;
      }
    }
    return found;
  };
  const auto next_nonempty = [&](int k) -> std::optional<int> {
    for (int d : nonempty) {
      if (d > k) {
        return d;
      }
    }
    return std::nullopt;
  };
  const int first_block = nonempty.front();
  const int last_block = nonempty.back();

  Facet facet;
  for (int k = 1; k <= r; ++k) {
    const int offset = (k - 1) * n;
    const auto prev = previous_nonempty(k);
    const auto next = next_nonempty(k);
    VertexSet path;
    if (blocks[k - 1].empty()) {
      if (k < first_block) {
        path.push_back(Vertex{m, offset + n});
      } else if (k > last_block) {
        path.push_back(Vertex{1, offset + 1});
      } else {
        path.push_back(Vertex{first_row(*next), offset + first_col(*prev)});
      }
    } else {
      const Vertex start{prev ? first_row(k) : m, offset + (next ? first_col(k) : 1)};
      const Vertex end{next ? first_row(*next) : 1, offset + (prev ? first_col(*prev) : n)};
      path.push_back(start);
      Vertex cursor = start;
      for (const auto& waypoint : blocks[k - 1]) {
        append_connection(path, cursor, waypoint);
        cursor = waypoint;
      }
      append_connection(path, cursor, end);
    }
    facet.paths.push_back(std::move(path));
  }

  facet.g.assign(static_cast<std::size_t>(r + 1), 0);
  facet.h.assign(static_cast<std::size_t>(r + 1), 0);
  for (int k = 1; k <= r; ++k) {
    const VertexSet& path = facet.paths[k - 1];
    const int offset = (k - 1) * n;
    facet.g[k - 1] = path.front().row;
    facet.h[k] = path.front().col - offset;
    facet.g[k] = path.back().row;
    facet.h[k - 1] = path.back().col - offset;
    facet.vertices.insert(facet.vertices.end(), path.begin(), path.end());
  }
  facet.vertices = normalize(std::move(facet.vertices));
  if (!is_valid_facet(facet, shape) ||
      !std::includes(facet.vertices.begin(), facet.vertices.end(), face.begin(), face.end())) {
    throw std::logic_error("extend_to_facet: construction produced an invalid facet");
  }
  return facet;
}

ParametricFacets::ParametricFacets(const Shape& shape, unsigned long long budget) : shape_(shape) {
  const std::array<int, 3> parts{shape.m() - 1, shape.n() - 1, shape.r() - 1};
  const BigInt count = multinomial(parts);
  if (count > budget) {
    throw BudgetExceeded("facets: " + count.str() + " facets exceed budget " + std::to_string(budget));
  }
  letters_ = std::string(static_cast<std::size_t>(parts[0]), 'M') + std::string(static_cast<std::size_t>(parts[1]), 'N') +
             std::string(static_cast<std::size_t>(parts[2]), 'R');
}

std::optional<std::pair<WordCode, Facet>> ParametricFacets::next() {
  if (done_) {
    return std::nullopt;
  }
  WordCode word(letters_, shape_);
  Facet facet = word_to_facet(word, shape_);
  done_ = !std::next_permutation(letters_.begin(), letters_.end());
  return std::make_pair(std::move(word), std::move(facet));
}

std::vector<Facet> facets_parametric(const Shape& shape, unsigned long long budget) {
  std::vector<Facet> result;
  ParametricFacets facets(shape, budget);
  while (auto item = facets.next()) {
    result.push_back(std::move(item->second));
  }
  return result;
}

namespace {

std::vector<Vertex> all_vertices(const Shape& shape) {
  std::vector<Vertex> all;
  for (int row = 1; row <= shape.m(); ++row) {
    for (int col = 1; col <= shape.n() * shape.r(); ++col) {
      all.push_back(Vertex{row, col});
    }
  }
  return all;
}

std::vector<std::uint64_t> conflict_masks(const std::vector<Vertex>& all, const Shape& shape) {
  std::vector<std::uint64_t> masks(all.size(), 0);
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (a != b && conflicts(all[a], all[b], shape)) {
        masks[a] |= std::uint64_t{1} << b;
      }
    }
  }
  return masks;
}

}  // namespace

std::vector<VertexSet> facets_bruteforce(const Shape& shape) {
  if (shape.variable_count() > 64) {
    throw BudgetExceeded("facets_bruteforce: more than 64 vertices");
  }
  const auto all = all_vertices(shape);
  const auto conflict = conflict_masks(all, shape);
  const std::size_t count = all.size();
  const std::uint64_t everything = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  // Maximal independent sets = maximal cliques of the complement graph.
  std::vector<std::uint64_t> compatible(count);
  for (std::size_t v = 0; v < count; ++v) {
    compatible[v] = everything & ~conflict[v] & ~(std::uint64_t{1} << v);
  }

  std::vector<VertexSet> result;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand = [&](std::uint64_t chosen,
                                                                                std::uint64_t candidates,
                                                                                std::uint64_t excluded) {
    if (candidates == 0 && excluded == 0) {
      VertexSet facet;
      for (std::uint64_t bits = chosen; bits != 0; bits &= bits - 1) {
        facet.push_back(all[static_cast<std::size_t>(std::countr_zero(bits))]);
      }
      result.push_back(std::move(facet));
      return;
    }
    std::size_t pivot = 0;
    int best = -1;
    for (std::uint64_t bits = candidates | excluded; bits != 0; bits &= bits - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(bits));
      const int degree = std::popcount(candidates & compatible[u]);
      if (degree > best) {
        best = degree;
        pivot = u;
      }
    }
    for (std::uint64_t bits = candidates & ~compatible[pivot]; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(bits));
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(chosen | bit, candidates & compatible[v], excluded & compatible[v]);
      candidates &= ~bit;
      excluded |= bit;
    }
  };
  expand(0, everything, 0);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<unsigned long long> complex_f_vector(const Shape& shape) {
  if (shape.variable_count() > 12) {
    throw BudgetExceeded("complex_f_vector: more than 12 vertices");
  }
  const auto all = all_vertices(shape);
  const auto conflict = conflict_masks(all, shape);
  std::vector<unsigned long long> f(all.size() + 1, 0);

  // f[s] counts faces with s vertices (f[0] is the empty face).
  std::function<void(std::size_t, std::size_t, std::uint64_t)> grow = [&](std::size_t from, std::size_t size,
                                                                          std::uint64_t forbidden) {
    ++f[size];
    for (std::size_t v = from; v < all.size(); ++v) {
      if (!(forbidden & (std::uint64_t{1} << v))) {
        grow(v + 1, size + 1, forbidden | conflict[v]);
      }
    }
  };
  grow(0, 0, 0);
  while (f.size() > 1 && f.back() == 0) {
    f.pop_back();
  }
  return f;
}

IntPolynomial complex_h_vector(const Shape& shape) {
  const auto f = complex_f_vector(shape);
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
      const BigInt term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
      sum += ((k - i) % 2 == 0) ? term : BigInt(-term);
    }
    h[k] = sum;
  }
  return IntPolynomial(std::move(h));
}

bool check_shelling_order(std::span<const VertexSet> ordering, const Shape& shape) {
  std::vector<VertexSet> given;
  given.reserve(ordering.size());
  for (const auto& facet : ordering) {
    given.push_back(normalize(facet));
  }
  std::vector<VertexSet> expected;
  for (auto& facet : facets_parametric(shape)) {
    expected.push_back(std::move(facet.vertices));
  }
  std::vector<VertexSet> sorted_given = given;
  std::sort(sorted_given.begin(), sorted_given.end());
  std::sort(expected.begin(), expected.end());
  if (sorted_given != expected) {
    throw std::invalid_argument("check_shelling_order: ordering is not a permutation of all facets");
  }

  const auto intersect = [](const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  for (std::size_t j = 1; j < given.size(); ++j) {
    std::vector<VertexSet> ridges;
    for (std::size_t k = 0; k < j; ++k) {
      auto common = intersect(given[k], given[j]);
      if (common.size() + 1 == given[j].size()) {
        ridges.push_back(std::move(common));
      }
    }
    for (std::size_t i = 0; i < j; ++i) {
      const auto common = intersect(given[i], given[j]);
      const bool covered = std::any_of(ridges.begin(), ridges.end(), [&](const VertexSet& ridge) {
        return std::includes(ridge.begin(), ridge.end(), common.begin(), common.end());
      });
      if (!covered) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(const VertexSet& vertices) {
  std::string out;
  for (const auto& v : vertices) {
    if (!out.empty()) {
      out += ',';
    }
    out += v.to_string();
  }
  return out;
}

VertexSet parse_vertices(const std::string& text) {
  VertexSet result;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse vertex list `" + text + "`: " + why);
  };
  const auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  };
  const auto number = [&] {
    skip_space();
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (begin == pos || pos - begin > 9) {
      fail("expected a positive integer");
    }
    return std::stoi(text.substr(begin, pos - begin));
  };
  skip_space();
  while (pos < text.size()) {
    expect('(');
    const int row = number();
    expect(',');
    const int col = number();
    expect(')');
    result.push_back(Vertex{row, col});
    skip_space();
    if (pos < text.size()) {
      expect(',');
      skip_space();
      if (pos >= text.size()) {
        fail("trailing comma");
      }
    }
  }
  return result;
}

}  // namespace toricdd
