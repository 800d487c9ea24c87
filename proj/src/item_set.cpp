#include "gaifman/item_set.hpp"

#include <bit>

namespace gaifman {

ItemSet::ItemSet(std::size_t capacity)
    : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

ItemSet::ItemSet(std::size_t capacity, std::initializer_list<ItemId> items)
    : ItemSet(capacity) {
  for (ItemId x : items) insert(x);
}

ItemSet ItemSet::full(std::size_t capacity) {
  ItemSet s(capacity);
  for (ItemId x = 0; x < capacity; ++x) s.insert(x);
  return s;
}

ItemSet ItemSet::from_mask(std::size_t capacity, std::uint64_t mask) {
  ItemSet s(capacity);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

std::size_t ItemSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool ItemSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool ItemSet::is_subset_of(const ItemSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ItemSet::intersects(const ItemSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool ItemSet::overlaps(const ItemSet& other) const {
  return intersects(other) && !is_subset_of(other) && !other.is_subset_of(*this);
}

ItemSet& ItemSet::operator|=(const ItemSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ItemSet& ItemSet::operator&=(const ItemSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ItemSet& ItemSet::operator-=(const ItemSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<ItemId> ItemSet::items() const {
  std::vector<ItemId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(static_cast<ItemId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

ItemId ItemSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<ItemId>(i * 64 + std::countr_zero(words_[i]));
  return static_cast<ItemId>(capacity_);
}

std::uint64_t ItemSet::to_mask() const { return words_.empty() ? 0 : words_[0]; }

bool operator<(const ItemSet& a, const ItemSet& b) {
  auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.items() < b.items();
}

}  // namespace gaifman
