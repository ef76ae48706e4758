#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace toricdd {

/// A finite poset stored as a dense reflexive-transitive relation matrix.
///
/// Elements are indexed 0..size()-1. Each element also carries a 1-based
/// natural label: p < q implies label(p) < label(q). Labels drive display,
/// descent counting and the iteration order of linear extensions.
class Poset {
 public:
  using Relation = std::pair<std::size_t, std::size_t>;

  Poset() = default;

  /// Builds the poset generated by `relations` (each pair (a, b) meaning
  /// a < b). The transitive closure is taken. When `labels` is empty the
  /// identity labeling 1..size is used.
  ///
  /// Throws std::invalid_argument on out-of-range indices, cycles, a label
  /// vector that is not a permutation of 1..size, or a non-natural labeling.
  Poset(std::size_t size, std::span<const Relation> relations, std::vector<int> labels = {});

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  int label(std::size_t element) const { return labels_[element]; }
  const std::vector<int>& labels() const { return labels_; }

  /// Element carrying the given natural label.
  std::size_t element_with_label(int label) const { return by_label_.at(static_cast<std::size_t>(label - 1)); }

  /// Cover relations (a, b) with a < b and nothing strictly between, sorted
  /// by the labels of (a, b).
  std::vector<Relation> cover_relations() const;

  bool covers(std::size_t lower, std::size_t upper) const;

 private:
  std::size_t size_ = 0;
  std::vector<char> leq_;
  std::vector<int> labels_;
  std::vector<std::size_t> by_label_;
};

/// Three disjoint chains of sizes m-1, n-1 and r-1, labeled chain by chain.
Poset make_pmnr(int m, int n, int r);

/// A downward-closed subset, as a membership mask over poset elements.
class OrderIdeal {
 public:
  explicit OrderIdeal(std::vector<bool> members) : members_(std::move(members)) {}

  bool contains(std::size_t element) const { return members_[element]; }
  std::size_t cardinality() const;
  bool is_subset_of(const OrderIdeal& other) const;
  std::vector<std::size_t> elements() const;
  const std::vector<bool>& mask() const { return members_; }

  OrderIdeal unite(const OrderIdeal& other) const;
  OrderIdeal intersect(const OrderIdeal& other) const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::vector<bool> members_;
};

bool is_order_ideal(const Poset& poset, const std::vector<bool>& members);

/// All order ideals. Ordered by the membership vector read in label order,
/// with "absent" before "present" at the first differing label.
std::vector<OrderIdeal> order_ideals(const Poset& poset);

/// Size of a largest antichain (Dilworth: minimum chain cover).
std::size_t width(const Poset& poset);

/// Length of a longest chain (cardinality minus one); -1 for the empty poset.
int rank(const Poset& poset);

/// True when every maximal chain has the same length. The empty poset is pure.
bool is_pure(const Poset& poset);

/// Elements in the order they receive the values 1, 2, ..., |P|.
struct LinearExtension {
  std::vector<std::size_t> sequence;

  std::vector<int> label_sequence(const Poset& poset) const;
  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

bool is_linear_extension(const Poset& poset, std::span<const std::size_t> sequence);

/// Yields each linear extension once, lexicographically by label sequence.
/// Single consumer; the poset must outlive the generator.
class LinearExtensionGenerator {
 public:
  explicit LinearExtensionGenerator(const Poset& poset);

  std::optional<LinearExtension> next();

 private:
  bool available(std::size_t element) const;
  void fill();
  bool advance();

  const Poset* poset_;
  std::vector<std::size_t> sequence_;
  std::vector<bool> placed_;
  bool started_ = false;
  bool done_ = false;
};

/// Positions i where the element placed at i has a larger label than the
/// element placed at i + 1. Throws std::invalid_argument when `extension`
/// is not a linear extension of `poset`.
std::size_t descent_count(const LinearExtension& extension, const Poset& poset);

/// Line format: `n=<count>` followed by one `a < b` line per cover relation,
/// in natural labels. Blank lines and lines starting with '#' are skipped.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& poset);

}  // namespace toricdd
