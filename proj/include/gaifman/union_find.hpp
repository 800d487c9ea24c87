#ifndef GAIFMAN_UNION_FIND_HPP
#define GAIFMAN_UNION_FIND_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gaifman {

/// Disjoint sets with union by rank and path halving. Counts operations
/// and element visits so complexity bounds can be asserted in tests.
class UnionFind {
 public:
  using Element = std::uint32_t;

  struct Counters {
    std::uint64_t make_sets = 0;
    std::uint64_t unions = 0;
    std::uint64_t finds = 0;
    std::uint64_t visits = 0;
  };

  UnionFind() = default;
  explicit UnionFind(std::size_t n);

  Element make_set();
  Element find(Element e);
  /// Links the sets of a and b; returns the surviving root.
  Element unite(Element a, Element b);

  std::size_t size() const { return parent_.size(); }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

 private:
  std::vector<Element> parent_;
  std::vector<std::uint8_t> rank_;
  Counters counters_;
};

}  // namespace gaifman

#endif  // GAIFMAN_UNION_FIND_HPP
