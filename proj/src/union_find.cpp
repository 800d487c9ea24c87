#include "gaifman/union_find.hpp"

#include <numeric>

namespace gaifman {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), Element{0});
  counters_.make_sets = n;
}

UnionFind::Element UnionFind::make_set() {
  auto e = static_cast<Element>(parent_.size());
  parent_.push_back(e);
  rank_.push_back(0);
  ++counters_.make_sets;
  return e;
}

UnionFind::Element UnionFind::find(Element e) {
  ++counters_.finds;
  ++counters_.visits;
  while (parent_[e] != e) {
    parent_[e] = parent_[parent_[e]];
    e = parent_[e];
    ++counters_.visits;
  }
  return e;
}

UnionFind::Element UnionFind::unite(Element a, Element b) {
  ++counters_.unions;
  a = find(a);
  b = find(b);
  if (a == b) return a;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return a;
}

}  // namespace gaifman
