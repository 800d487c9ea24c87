#include "gaifman/gaifman_builder.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "gaifman/error.hpp"

namespace gaifman {

Dataset ingest_relational(const Table& table, RelationalOptions options) {
  if (table.header.empty() || table.rows.empty())
    throw InputError("relational input needs a header and at least one row");
  std::unordered_set<std::string> names;
  for (const auto& h : table.header)
    if (!names.insert(h).second) throw InputError("duplicate column name '" + h + "'");

  Dataset d;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size())
      throw InputError("row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " cells, expected " +
                       std::to_string(table.header.size()));
    std::vector<ItemId> t;
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (row[col].empty() && !options.keep_empty_cells) continue;
      t.push_back(d.universe.intern(table.header[col] + "=" + row[col]));
    }
    std::sort(t.begin(), t.end());
    d.transactions.push_back(std::move(t));
  }
  return d;
}

Dataset ingest_transactional(const std::vector<std::vector<std::string>>& lines) {
  Dataset d;
  for (const auto& line : lines) {
    std::vector<ItemId> t;
    for (const auto& tok : line)
      if (!tok.empty()) t.push_back(d.universe.intern(tok));
    if (t.empty()) continue;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    d.transactions.push_back(std::move(t));
  }
  return d;
}

std::vector<std::uint64_t> item_occurrences(const Dataset& d) {
  std::vector<std::uint64_t> occ(d.universe.size(), 0);
  for (const auto& t : d.transactions)
    for (auto x : t) ++occ[x];
  return occ;
}

FilterResult filter_items(const Dataset& d, ItemFilter filter) {
  auto occ = item_occurrences(d);
  FilterResult result;
  std::uint64_t cutoff = 0;
  if (filter.mode == ItemFilter::Mode::min_count) {
    if (filter.value < 1) throw InputError("min_count must be at least 1");
    cutoff = filter.value;
  } else {
    if (filter.value < 1) throw InputError("top_n must be at least 1");
    auto k = filter.value;
    if (k > occ.size()) {
      result.warning = "top_n " + std::to_string(k) + " exceeds universe size " +
                       std::to_string(occ.size()) + "; keeping all items";
      k = occ.size();
    }
    if (k == 0) {
      cutoff = 1;
    } else {
      auto sorted = occ;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      cutoff = std::max<std::uint64_t>(sorted[k - 1], 1);
    }
  }

  std::vector<std::optional<ItemId>> remap(occ.size());
  for (ItemId x = 0; x < occ.size(); ++x)
    if (occ[x] >= cutoff) remap[x] = result.dataset.universe.add(d.universe.label(x));

  for (const auto& t : d.transactions) {
    std::vector<ItemId> projected;
    for (auto x : t)
      if (remap[x]) projected.push_back(*remap[x]);
    if (!projected.empty()) result.dataset.transactions.push_back(std::move(projected));
  }
  return result;
}

// ------------------------------------------------------ CooccurrenceCounts

CooccurrenceCounts::CooccurrenceCounts(Universe universe, std::uint64_t transactions)
    : universe_(std::move(universe)),
      n_(universe_.size()),
      transactions_(transactions),
      counts_(n_ * n_, 0) {}

CooccurrenceCounts count_cooccurrences(const Dataset& d) {
  CooccurrenceCounts c(d.universe, d.transactions.size());
  for (const auto& t : d.transactions)
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) c.add(t[i], t[j]);
  return c;
}

namespace {

template <typename Bucket>
TwoStructure build_with(const CooccurrenceCounts& c, Bucket bucket) {
  TwoStructure::Builder b(c.universe());
  for (ItemId x = 0; x < c.size(); ++x)
    for (ItemId y = x + 1; y < c.size(); ++y) b.set(x, y, bucket(c.count(x, y)));
  return std::move(b).build();
}

}  // namespace

ClassId linear_bucket(std::uint64_t c, std::uint64_t interval) {
  return static_cast<ClassId>(c / interval + (c % interval != 0));
}

ClassId exponential_bucket(std::uint64_t c) {
  // bit_width(c) == ceil(log2(c + 1)) for every c >= 0
  return static_cast<ClassId>(std::bit_width(c));
}

TwoStructure build_standard(const CooccurrenceCounts& c) {
  return build_with(c, [](std::uint64_t v) -> ClassId { return v >= 1 ? 1 : 0; });
}

TwoStructure build_thresholded(const CooccurrenceCounts& c, std::uint64_t t) {
  if (t == 0) throw InputError("threshold must be at least 1");
  return build_with(c, [t](std::uint64_t v) -> ClassId { return v >= t ? 1 : 0; });
}

TwoStructure build_linear(const CooccurrenceCounts& c, std::uint64_t interval) {
  if (interval == 0) throw InputError("interval size must be at least 1");
  return build_with(c, [interval](std::uint64_t v) { return linear_bucket(v, interval); });
}

TwoStructure build_exponential(const CooccurrenceCounts& c) {
  return build_with(c, exponential_bucket);
}

CooccurrenceCounts apply_lower_threshold(const CooccurrenceCounts& c, std::uint64_t t) {
  if (t == 0) throw InputError("lower threshold must be at least 1");
  CooccurrenceCounts out = c;
  for (ItemId x = 0; x < c.size(); ++x)
    for (ItemId y = x + 1; y < c.size(); ++y)
      if (c.count(x, y) < t) out.set(x, y, 0);
  return out;
}

}  // namespace gaifman
