#ifndef GAIFMAN_IMPLICATIONS_HPP
#define GAIFMAN_IMPLICATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gaifman/clan_tree.hpp"
#include "gaifman/core_model.hpp"

namespace gaifman {

/// Default size limit for closed-set enumeration.
inline constexpr std::size_t kLatticeGuard = 16;

/// xy => consequent, with x < y.
struct Implication {
  ItemId x = 0;
  ItemId y = 0;
  ItemSet consequent{0};
};

/// At most one implication per unordered pair, over a fixed universe.
class ImplicationSet {
 public:
  using Pair = std::pair<ItemId, ItemId>;

  ImplicationSet() = default;
  explicit ImplicationSet(Universe universe) : universe_(std::move(universe)) {}

  /// Adds xy => z. Throws InputError for x == y, an empty consequent, a
  /// consequent touching the antecedent, or a conflicting duplicate.
  void add(ItemId x, ItemId y, const ItemSet& consequent);

  const Universe& universe() const { return universe_; }
  Universe& universe() { return universe_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// Consequent for {x,y}, or nullopt when no implication exists.
  std::optional<ItemSet> find(ItemId x, ItemId y) const;

  /// Implications ordered by antecedent pair.
  std::vector<Implication> list() const;

  /// Number of classes of the structure the set was generated from, when known.
  std::optional<std::size_t> source_classes;

  /// Compares universes and implications; ignores source_classes.
  friend bool operator==(const ImplicationSet& a, const ImplicationSet& b);

 private:
  Universe universe_;
  std::map<Pair, std::vector<ItemId>> rules_;
};

/// Vertices other than x and y that see x and y through different classes.
ItemSet distinguishing_set(const TwoStructure& s, ItemId x, ItemId y);

/// xy => D(x,y) for every pair with a nonempty distinguishing set.
ImplicationSet generate_implications(const TwoStructure& s);

/// Least superset of x closed under every implication.
ItemSet closure(const ImplicationSet& b, const ItemSet& x);

enum class ClanType { complete, primitive };

const char* to_string(ClanType t);

/// All closed sets with their immediate-subset relation and strong flags.
struct ClosureLattice {
  std::size_t universe_size = 0;
  std::optional<std::size_t> source_classes;
  /// Closed sets in lectic order; the empty set comes first.
  std::vector<ItemSet> closed;
  /// hasse[i]: indices of the maximal closed proper subsets of closed[i].
  std::vector<std::vector<std::size_t>> hasse;
  /// strong[i]: closed[i] overlaps no other closed set.
  std::vector<bool> strong;

  std::optional<std::size_t> index_of(const ItemSet& s) const;
};

/// NextClosure enumeration. Throws GuardError when the universe exceeds `guard`.
ClosureLattice enumerate_closed_sets(const ImplicationSet& b,
                                     std::size_t guard = kLatticeGuard);

/// Nonempty closed sets that overlap no other closed set.
std::vector<ItemSet> strong_closed_sets(const ClosureLattice& l);

/// Immediate subset count above which a node whose immediate subsets are all
/// strong is primitive: 3 for sources with at most two classes, else 2.
std::size_t primitive_child_bound(std::optional<std::size_t> source_classes);

/// Complete or primitive, read off the Hasse children of a strong closed
/// set. Throws InputError when `c` is not a strong closed set of size >= 2.
ClanType infer_clan_type(const ClosureLattice& l, const ItemSet& c);

/// Tree of strong closed sets ordered by inclusion, each internal node typed
/// with infer_clan_type. Colours are left unset.
ClanTree lattice_to_tree(const ClosureLattice& l);

}  // namespace gaifman

#endif  // GAIFMAN_IMPLICATIONS_HPP
