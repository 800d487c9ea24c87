#include "gaifman/core_model.hpp"

#include <algorithm>
#include <set>

#include "gaifman/error.hpp"

namespace gaifman {

// ---------------------------------------------------------------- Universe

Universe Universe::numbered(std::size_t n) {
  Universe u;
  for (std::size_t i = 0; i < n; ++i) u.add(std::to_string(i));
  return u;
}

Universe Universe::from_labels(const std::vector<std::string>& labels) {
  Universe u;
  for (const auto& l : labels) u.add(l);
  return u;
}

ItemId Universe::intern(std::string_view label) {
  if (auto id = find(label)) return *id;
  return add(label);
}

ItemId Universe::add(std::string_view label) {
  std::string key(label);
  if (index_.count(key)) throw InputError("duplicate item label '" + key + "'");
  auto id = static_cast<ItemId>(items_.size());
  index_.emplace(key, id);
  items_.push_back(Item{id, std::move(key)});
  return id;
}

std::optional<ItemId> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Universe& a, const Universe& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.items_[i].label != b.items_[i].label) return false;
  return true;
}

// ------------------------------------------------------------ TwoStructure

TwoStructure::Builder::Builder(Universe universe)
    : universe_(std::move(universe)),
      n_(universe_.size()),
      classes_(n_ * n_, kAbsent) {}

TwoStructure::Builder& TwoStructure::Builder::set(ItemId x, ItemId y, ClassId c) {
  if (x >= n_ || y >= n_)
    throw InputError("vertex out of range: " + std::to_string(std::max(x, y)));
  if (x == y) throw InputError("self-pair on vertex " + std::to_string(x));
  classes_[x * n_ + y] = c;
  classes_[y * n_ + x] = c;
  return *this;
}

TwoStructure TwoStructure::Builder::build() && {
  return TwoStructure(std::move(universe_), std::move(classes_));
}

TwoStructure::TwoStructure(Universe universe, std::vector<ClassId> classes)
    : universe_(std::move(universe)),
      n_(universe_.size()),
      classes_(std::move(classes)) {
  std::set<ClassId> seen;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y) seen.insert(classes_[x * n_ + y]);
  present_.assign(seen.begin(), seen.end());
}

ItemSet TwoStructure::neighbourhood(ItemId x, ClassId c) const {
  ItemSet out(n_);
  for (ItemId y = 0; y < n_; ++y)
    if (y != x && edge_class(x, y) == c) out.insert(y);
  return out;
}

bool operator==(const TwoStructure& a, const TwoStructure& b) {
  return a.universe_ == b.universe_ && a.classes_ == b.classes_;
}

TwoStructure from_edge_list(std::size_t n,
                            const std::vector<std::pair<ItemId, ItemId>>& edges) {
  return from_edge_list(Universe::numbered(n), edges);
}

TwoStructure from_edge_list(Universe universe,
                            const std::vector<std::pair<ItemId, ItemId>>& edges) {
  TwoStructure::Builder b(std::move(universe));
  for (auto [x, y] : edges) b.set(x, y, 1);
  return std::move(b).build();
}

TwoStructure complement(const TwoStructure& s) {
  if (s.max_class() > 1)
    throw UnsupportedError("complement is only defined for two-class structures");
  TwoStructure::Builder b(s.universe());
  for (ItemId x = 0; x < s.size(); ++x)
    for (ItemId y = x + 1; y < s.size(); ++y) b.set(x, y, 1 - s.edge_class(x, y));
  return std::move(b).build();
}

// ------------------------------------------------------------ EdgeRegistry

EdgeRegistry::EdgeRegistry(const TwoStructure& s)
    : n_(s.size()),
      next_clan_(static_cast<NodeId>(s.size())),
      sets_(s.size() * s.size()),
      class_of_root_(s.size() * s.size(), kAbsent) {
  std::unordered_map<ClassId, UnionFind::Element> anchor;
  for (NodeId a = 0; a < n_; ++a) {
    for (NodeId b = 0; b < n_; ++b) {
      if (a == b) continue;
      auto e = static_cast<UnionFind::Element>(a * n_ + b);
      auto c = s.edge_class(a, b);
      auto [it, fresh] = anchor.emplace(c, e);
      if (!fresh) sets_.unite(it->second, e);
    }
  }
  for (auto [c, e] : anchor) class_of_root_[sets_.find(e)] = c;
  sets_.reset_counters();
}

std::optional<EdgeRegistry::ClassRep> EdgeRegistry::find(NodeId a, NodeId b) {
  if (a < n_ && b < n_) return sets_.find(static_cast<UnionFind::Element>(a * n_ + b));
  auto it = clan_edges_.find(key(a, b));
  if (it == clan_edges_.end()) return std::nullopt;
  return sets_.find(it->second);
}

void EdgeRegistry::add_edge(NodeId a, NodeId b, ClassRep with) {
  auto c = class_of_root_[sets_.find(with)];
  for (auto k : {key(a, b), key(b, a)}) {
    auto e = sets_.make_set();
    class_of_root_.push_back(kAbsent);
    clan_edges_[k] = e;
    class_of_root_[sets_.unite(with, e)] = c;
  }
}

std::optional<EdgeRegistry::ClassRep> registry_edge_class(
    EdgeRegistry& reg, EdgeRegistry::NodeId a, EdgeRegistry::NodeId b) {
  return reg.find(a, b);
}

}  // namespace gaifman
