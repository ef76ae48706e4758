#include "toricdd/poset.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace toricdd {

Poset::Poset(std::size_t size, std::span<const Relation> relations, std::vector<int> labels)
    : size_(size), leq_(size * size, 0), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(size_);
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (labels_.size() != size_) {
    throw std::invalid_argument("poset: label vector has wrong length");
  }
  by_label_.assign(size_, size_);
  for (std::size_t e = 0; e < size_; ++e) {
    const int l = labels_[e];
    if (l < 1 || static_cast<std::size_t>(l) > size_ || by_label_[l - 1] != size_) {
      throw std::invalid_argument("poset: labels must be a permutation of 1..n");
    }
    by_label_[l - 1] = e;
  }

  for (std::size_t e = 0; e < size_; ++e) {
    leq_[e * size_ + e] = 1;
  }
  for (const auto& [a, b] : relations) {
    if (a >= size_ || b >= size_) {
      throw std::invalid_argument("poset: relation index out of range");
    }
    if (a == b) {
      throw std::invalid_argument("poset: strict relation a < a");
    }
    leq_[a * size_ + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < size_; ++k) {
    for (std::size_t i = 0; i < size_; ++i) {
      if (!leq_[i * size_ + k]) {
        continue;
      }
      for (std::size_t j = 0; j < size_; ++j) {
        if (leq_[k * size_ + j]) {
          leq_[i * size_ + j] = 1;
        }
      }
    }
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = a + 1; b < size_; ++b) {
      if (leq(a, b) && leq(b, a)) {
        throw std::invalid_argument("poset: relations contain a cycle");
      }
    }
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (less(a, b) && labels_[a] > labels_[b]) {
        throw std::invalid_argument("poset: labeling is not natural");
      }
    }
  }
}

bool Poset::covers(std::size_t lower, std::size_t upper) const {
  if (!less(lower, upper)) {
    return false;
  }
  for (std::size_t c = 0; c < size_; ++c) {
    if (less(lower, c) && less(c, upper)) {
      return false;
    }
  }
  return true;
}

std::vector<Poset::Relation> Poset::cover_relations() const {
  std::vector<Relation> result;
  for (std::size_t la = 0; la < size_; ++la) {
    for (std::size_t lb = 0; lb < size_; ++lb) {
      const std::size_t a = by_label_[la];
      const std::size_t b = by_label_[lb];
      if (covers(a, b)) {
        result.emplace_back(a, b);
      }
    }
  }
  return result;
}

Poset make_pmnr(int m, int n, int r) {
  if (m < 1 || n < 1 || r < 1) {
    throw std::invalid_argument("make_pmnr: m, n, r must be positive");
  }
  const std::size_t total = static_cast<std::size_t>(m + n + r - 3);
  std::vector<Poset::Relation> relations;
  std::size_t offset = 0;
  for (int chain : {m - 1, n - 1, r - 1}) {
    for (int s = 0; s + 1 < chain; ++s) {
      relations.emplace_back(offset + s, offset + s + 1);
    }
    offset += static_cast<std::size_t>(chain);
  }
  return Poset(total, relations);
}

std::size_t OrderIdeal::cardinality() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

bool OrderIdeal::is_subset_of(const OrderIdeal& other) const {
  for (std::size_t e = 0; e < members_.size(); ++e) {
    if (members_[e] && !other.members_[e]) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> OrderIdeal::elements() const {
  std::vector<std::size_t> result;
  for (std::size_t e = 0; e < members_.size(); ++e) {
    if (members_[e]) {
      result.push_back(e);
    }
  }
  return result;
}

OrderIdeal OrderIdeal::unite(const OrderIdeal& other) const {
  std::vector<bool> mask(members_.size());
  for (std::size_t e = 0; e < mask.size(); ++e) {
    mask[e] = members_[e] || other.members_[e];
  }
  return OrderIdeal(std::move(mask));
}

OrderIdeal OrderIdeal::intersect(const OrderIdeal& other) const {
  std::vector<bool> mask(members_.size());
  for (std::size_t e = 0; e < mask.size(); ++e) {
    mask[e] = members_[e] && other.members_[e];
  }
  return OrderIdeal(std::move(mask));
}

bool is_order_ideal(const Poset& poset, const std::vector<bool>& members) {
  if (members.size() != poset.size()) {
    return false;
  }
  for (std::size_t q = 0; q < poset.size(); ++q) {
    if (!members[q]) {
      continue;
    }
    for (std::size_t p = 0; p < poset.size(); ++p) {
      if (poset.leq(p, q) && !members[p]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<OrderIdeal> order_ideals(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<OrderIdeal> result;
  std::vector<bool> mask(n, false);

  // Decide elements in label order; everything below an element has a
  // smaller label and is therefore already decided.
  std::function<void(std::size_t)> visit = [&](std::size_t position) {
    if (position == n) {
      result.emplace_back(mask);
      return;
    }
    const std::size_t e = poset.element_with_label(static_cast<int>(position) + 1);
    visit(position + 1);
    for (std::size_t p = 0; p < n; ++p) {
      if (poset.less(p, e) && !mask[p]) {
        return;
      }
    }
    mask[e] = true;
    visit(position + 1);
    mask[e] = false;
  };
  visit(0);
  return result;
}

std::size_t width(const Poset& poset) {
  // Dilworth: width = n - maximum matching in the bipartite graph p -> q for p < q.
  const std::size_t n = poset.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(n, kFree);
  std::vector<bool> seen;

  std::function<bool(std::size_t)> augment = [&](std::size_t left) {
    for (std::size_t right = 0; right < n; ++right) {
      if (!poset.less(left, right) || seen[right]) {
        continue;
      }
      seen[right] = true;
      if (match_right[right] == kFree || augment(match_right[right])) {
        match_right[right] = left;
        return true;
      }
    }
    return false;
  };

  std::size_t matching = 0;
  for (std::size_t left = 0; left < n; ++left) {
    seen.assign(n, false);
    if (augment(left)) {
      ++matching;
    }
  }
  return n - matching;
}

int rank(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<int> longest(n, 1);
  int best = 0;
  for (int l = 1; l <= static_cast<int>(n); ++l) {
    const std::size_t e = poset.element_with_label(l);
    for (std::size_t p = 0; p < n; ++p) {
      if (poset.less(p, e)) {
        longest[e] = std::max(longest[e], longest[p] + 1);
      }
    }
    best = std::max(best, longest[e]);
  }
  return best - 1;
}

bool is_pure(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n == 0) {
    return true;
  }
  // Saturated chains from each element up to a maximal element, walking
  // cover relations in reverse label order.
  std::vector<int> shortest(n, 1);
  std::vector<int> longest(n, 1);
  for (int l = static_cast<int>(n); l >= 1; --l) {
    const std::size_t e = poset.element_with_label(l);
    bool has_cover = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!poset.covers(e, q)) {
        continue;
      }
      if (!has_cover) {
        shortest[e] = shortest[q] + 1;
        longest[e] = longest[q] + 1;
        has_cover = true;
      } else {
        shortest[e] = std::min(shortest[e], shortest[q] + 1);
        longest[e] = std::max(longest[e], longest[q] + 1);
      }
    }
  }
  std::optional<int> common;
  for (std::size_t e = 0; e < n; ++e) {
    bool minimal = true;
    for (std::size_t p = 0; p < n; ++p) {
      if (poset.less(p, e)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) {
      continue;
    }
    if (shortest[e] != longest[e] || (common && *common != longest[e])) {
      return false;
    }
    common = longest[e];
  }
  return true;
}

std::vector<int> LinearExtension::label_sequence(const Poset& poset) const {
  std::vector<int> result;
  result.reserve(sequence.size());
  for (std::size_t e : sequence) {
    result.push_back(poset.label(e));
  }
  return result;
}

bool is_linear_extension(const Poset& poset, std::span<const std::size_t> sequence) {
  if (sequence.size() != poset.size()) {
    return false;
  }
  std::vector<bool> seen(poset.size(), false);
  for (std::size_t e : sequence) {
    if (e >= poset.size() || seen[e]) {
      return false;
    }
    seen[e] = true;
  }
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    for (std::size_t t = s + 1; t < sequence.size(); ++t) {
      if (poset.less(sequence[t], sequence[s])) {
        return false;
      }
    }
  }
  return true;
}

LinearExtensionGenerator::LinearExtensionGenerator(const Poset& poset)
    : poset_(&poset), placed_(poset.size(), false) {
  sequence_.reserve(poset.size());
}

bool LinearExtensionGenerator::available(std::size_t element) const {
  if (placed_[element]) {
    return false;
  }
  for (std::size_t p = 0; p < poset_->size(); ++p) {
    if (poset_->less(p, element) && !placed_[p]) {
      return false;
    }
  }
  return true;
}

void LinearExtensionGenerator::fill() {
  const int n = static_cast<int>(poset_->size());
  while (sequence_.size() < poset_->size()) {
    for (int l = 1; l <= n; ++l) {
      const std::size_t e = poset_->element_with_label(l);
      if (available(e)) {
        placed_[e] = true;
        sequence_.push_back(e);
        break;
      }
    }
  }
}

bool LinearExtensionGenerator::advance() {
  const int n = static_cast<int>(poset_->size());
  while (!sequence_.empty()) {
    const std::size_t last = sequence_.back();
    sequence_.pop_back();
    placed_[last] = false;
    for (int l = poset_->label(last) + 1; l <= n; ++l) {
      const std::size_t e = poset_->element_with_label(l);
      if (available(e)) {
        placed_[e] = true;
        sequence_.push_back(e);
        fill();
        return true;
      }
    }
  }
  return false;
}

std::optional<LinearExtension> LinearExtensionGenerator::next() {
  if (done_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
    fill();
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return LinearExtension{sequence_};
}

std::size_t descent_count(const LinearExtension& extension, const Poset& poset) {
  if (!is_linear_extension(poset, extension.sequence)) {
    throw std::invalid_argument("descent_count: not a linear extension of the poset");
  }
  std::size_t descents = 0;
  for (std::size_t s = 0; s + 1 < extension.sequence.size(); ++s) {
    if (poset.label(extension.sequence[s]) > poset.label(extension.sequence[s + 1])) {
      ++descents;
    }
  }
  return descents;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Poset read_poset(std::istream& in) {
  std::string line;
  std::optional<std::size_t> size;
  std::vector<Poset::Relation> relations;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto fail = [&](const std::string& why) {
      throw std::invalid_argument("poset file line " + std::to_string(line_no) + ": " + why);
    };
    if (!size) {
      if (line.rfind("n=", 0) != 0) {
        fail("expected `n=<count>`");
      }
      std::istringstream value(line.substr(2));
      long long count = -1;
      if (!(value >> count) || count < 0 || !(value >> std::ws).eof()) {
        fail("bad element count");
      }
      size = static_cast<std::size_t>(count);
      continue;
    }
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    char op = 0;
    if (!(fields >> a >> op >> b) || op != '<' || !(fields >> std::ws).eof()) {
      fail("expected `a < b`");
    }
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > *size || static_cast<std::size_t>(b) > *size) {
      fail("label out of range");
    }
    relations.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  if (!size) {
    throw std::invalid_argument("poset file: missing `n=<count>` header");
  }
  return Poset(*size, relations);
}

void write_poset(std::ostream& out, const Poset& poset) {
  out << "n=" << poset.size() << '\n';
  for (const auto& [a, b] : poset.cover_relations()) {
    out << poset.label(a) << " < " << poset.label(b) << '\n';
  }
}

}  // namespace toricdd
