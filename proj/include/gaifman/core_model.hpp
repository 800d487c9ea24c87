#ifndef GAIFMAN_CORE_MODEL_HPP
#define GAIFMAN_CORE_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gaifman/item_set.hpp"
#include "gaifman/union_find.hpp"

namespace gaifman {

/// Equivalence class of an edge. Class 0 always means "absent".
using ClassId = std::uint32_t;
inline constexpr ClassId kAbsent = 0;

struct Item {
  ItemId id;
  std::string label;
};

/// Items with dense ids 0..n-1 and unique labels.
class Universe {
 public:
  Universe() = default;
  /// Items labelled "0", "1", ... "n-1".
  static Universe numbered(std::size_t n);
  static Universe from_labels(const std::vector<std::string>& labels);

  /// Returns the id of `label`, adding it when new.
  ItemId intern(std::string_view label);
  /// Adds a new item; throws InputError on a duplicate label.
  ItemId add(std::string_view label);

  std::optional<ItemId> find(std::string_view label) const;
  const std::string& label(ItemId id) const { return items_[id].label; }
  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  std::vector<Item> items_;
  std::unordered_map<std::string, ItemId> index_;
};

/// A symmetric 2-structure: a complete loop-free graph over a universe
/// whose unordered pairs each carry an edge class. Immutable once built.
class TwoStructure {
 public:
  class Builder {
   public:
    explicit Builder(Universe universe);
    /// Sets class(x,y) = class(y,x) = c. Throws InputError on x == y or
    /// out-of-range ids.
    Builder& set(ItemId x, ItemId y, ClassId c);
    ClassId get(ItemId x, ItemId y) const { return classes_[x * n_ + y]; }
    std::size_t size() const { return n_; }
    TwoStructure build() &&;

   private:
    Universe universe_;
    std::size_t n_;
    std::vector<ClassId> classes_;
  };

  TwoStructure() = default;

  std::size_t size() const { return n_; }
  const Universe& universe() const { return universe_; }
  const std::string& label(ItemId x) const { return universe_.label(x); }

  /// Class of the unordered pair {x, y}; x != y.
  ClassId edge_class(ItemId x, ItemId y) const { return classes_[x * n_ + y]; }

  /// Sorted distinct classes that occur on at least one pair.
  const std::vector<ClassId>& classes_present() const { return present_; }
  /// Largest class id occurring, 0 for structures with fewer than 2 items.
  ClassId max_class() const { return present_.empty() ? 0 : present_.back(); }

  /// Items y != x with class(x, y) == c.
  ItemSet neighbourhood(ItemId x, ClassId c) const;

  friend bool operator==(const TwoStructure& a, const TwoStructure& b);

 private:
  TwoStructure(Universe universe, std::vector<ClassId> classes);

  Universe universe_;
  std::size_t n_ = 0;
  std::vector<ClassId> classes_;  // n*n, symmetric; diagonal unused
  std::vector<ClassId> present_;
};

/// Two-class structure: listed pairs get class 1, all others class 0.
TwoStructure from_edge_list(std::size_t n,
                            const std::vector<std::pair<ItemId, ItemId>>& edges);
TwoStructure from_edge_list(Universe universe,
                            const std::vector<std::pair<ItemId, ItemId>>& edges);

/// Swaps classes 0 and 1. Throws UnsupportedError when another class occurs.
TwoStructure complement(const TwoStructure& s);

/// Union-find over directed endpoint pairs. Endpoints are vertex ids
/// [0, n) or clan ids >= n. Base vertex pairs are created up front and
/// grouped by their class in the structure; clan edges are registered
/// later, always in both orientations.
class EdgeRegistry {
 public:
  using NodeId = std::uint32_t;
  /// Canonical representative of an edge's equivalence class.
  using ClassRep = UnionFind::Element;

  EdgeRegistry() = default;
  explicit EdgeRegistry(const TwoStructure& s);

  std::size_t vertex_count() const { return n_; }
  /// Allocates a fresh clan endpoint id.
  NodeId new_clan_id() { return next_clan_++; }
  bool is_vertex(NodeId id) const { return id < n_; }

  /// Representative for the edge a-b, or nullopt when it was never
  /// established. a != b.
  std::optional<ClassRep> find(NodeId a, NodeId b);

  /// Creates (a,b) and (b,a) and unions both into the class of `with`.
  void add_edge(NodeId a, NodeId b, ClassRep with);

  /// The 2-structure class id carried by a representative.
  ClassId class_of(ClassRep rep) const { return class_of_root_[rep]; }

  const UnionFind::Counters& counters() const { return sets_.counters(); }
  void reset_counters() { sets_.reset_counters(); }

 private:
  static std::uint64_t key(NodeId a, NodeId b) {
    return (std::uint64_t{a} << 32) | b;
  }

  std::size_t n_ = 0;
  NodeId next_clan_ = 0;
  UnionFind sets_;
  std::vector<ClassId> class_of_root_;
  std::unordered_map<std::uint64_t, UnionFind::Element> clan_edges_;
};

/// Representative of the class of edge a-b, or nullopt for "undefined".
std::optional<EdgeRegistry::ClassRep> registry_edge_class(
    EdgeRegistry& reg, EdgeRegistry::NodeId a, EdgeRegistry::NodeId b);

}  // namespace gaifman

#endif  // GAIFMAN_CORE_MODEL_HPP
