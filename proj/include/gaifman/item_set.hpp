#ifndef GAIFMAN_ITEM_SET_HPP
#define GAIFMAN_ITEM_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gaifman {

using ItemId = std::uint32_t;

// Fixed-capacity bitset over item ids [0, capacity).
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(std::size_t capacity);
  ItemSet(std::size_t capacity, std::initializer_list<ItemId> items);

  static ItemSet full(std::size_t capacity);
  static ItemSet from_mask(std::size_t capacity, std::uint64_t mask);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(ItemId x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(ItemId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(ItemId x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  bool is_subset_of(const ItemSet& other) const;
  bool intersects(const ItemSet& other) const;
  /// Neither disjoint nor nested.
  bool overlaps(const ItemSet& other) const;

  ItemSet& operator|=(const ItemSet& other);
  ItemSet& operator&=(const ItemSet& other);
  ItemSet& operator-=(const ItemSet& other);
  friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
  friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
  friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }

  std::vector<ItemId> items() const;
  /// Smallest member; capacity() when empty.
  ItemId first() const;
  /// Low 64 bits as a mask; only meaningful for capacity <= 64.
  std::uint64_t to_mask() const;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  /// Orders by size, then by sorted member list.
  friend bool operator<(const ItemSet& a, const ItemSet& b);

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gaifman

#endif  // GAIFMAN_ITEM_SET_HPP
