#ifndef GAIFMAN_GAIFMAN_BUILDER_HPP
#define GAIFMAN_GAIFMAN_BUILDER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaifman/core_model.hpp"

namespace gaifman {

/// Transactions over a universe; each transaction is a sorted list of
/// distinct item ids.
struct Dataset {
  Universe universe;
  std::vector<std::vector<ItemId>> transactions;
};

/// A rectangular table with a header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct RelationalOptions {
  /// Keep empty cells as the value "column=" instead of dropping them.
  bool keep_empty_cells = false;
};

/// Each row becomes one transaction of "column=value" items.
Dataset ingest_relational(const Table& table, RelationalOptions options = {});

/// Each nonempty token list becomes one transaction; repeated tokens collapse.
Dataset ingest_transactional(const std::vector<std::vector<std::string>>& lines);

/// Number of transactions containing each item.
std::vector<std::uint64_t> item_occurrences(const Dataset& d);

struct ItemFilter {
  enum class Mode { min_count, top_n };
  Mode mode = Mode::min_count;
  std::uint64_t value = 1;

  static ItemFilter min_count(std::uint64_t m) { return {Mode::min_count, m}; }
  static ItemFilter top_n(std::uint64_t k) { return {Mode::top_n, k}; }
};

struct FilterResult {
  Dataset dataset;
  std::optional<std::string> warning;
};

/// Restricts the universe to frequent items. top_n keeps every item tied
/// with the k-th largest count; k beyond the universe is clamped with a
/// warning. Transactions left empty are dropped.
FilterResult filter_items(const Dataset& d, ItemFilter filter);

/// Symmetric pairwise co-occurrence counts c(x,y).
class CooccurrenceCounts {
 public:
  CooccurrenceCounts() = default;
  CooccurrenceCounts(Universe universe, std::uint64_t transactions);

  std::size_t size() const { return n_; }
  const Universe& universe() const { return universe_; }
  std::uint64_t transactions() const { return transactions_; }

  std::uint64_t count(ItemId x, ItemId y) const { return counts_[x * n_ + y]; }
  void set(ItemId x, ItemId y, std::uint64_t c) {
    counts_[x * n_ + y] = c;
    counts_[y * n_ + x] = c;
  }
  void add(ItemId x, ItemId y, std::uint64_t c = 1) {
    counts_[x * n_ + y] += c;
    counts_[y * n_ + x] += c;
  }

  friend bool operator==(const CooccurrenceCounts&, const CooccurrenceCounts&) = default;

 private:
  Universe universe_;
  std::size_t n_ = 0;
  std::uint64_t transactions_ = 0;
  std::vector<std::uint64_t> counts_;
};

CooccurrenceCounts count_cooccurrences(const Dataset& d);

/// class 1 iff the pair co-occurs at least once.
TwoStructure build_standard(const CooccurrenceCounts& c);
/// class 1 iff c(x,y) >= t; t >= 1.
TwoStructure build_thresholded(const CooccurrenceCounts& c, std::uint64_t t);
/// class ceil(c(x,y) / interval); interval >= 1.
TwoStructure build_linear(const CooccurrenceCounts& c, std::uint64_t interval);
/// class ceil(log2(c(x,y) + 1)), i.e. the bit length of c(x,y).
TwoStructure build_exponential(const CooccurrenceCounts& c);

/// Counts strictly below t become zero; t >= 1.
CooccurrenceCounts apply_lower_threshold(const CooccurrenceCounts& c, std::uint64_t t);

/// ceil(c / interval) in integer arithmetic.
ClassId linear_bucket(std::uint64_t c, std::uint64_t interval);
/// ceil(log2(c + 1)) in integer arithmetic.
ClassId exponential_bucket(std::uint64_t c);

}  // namespace gaifman

#endif  // GAIFMAN_GAIFMAN_BUILDER_HPP
