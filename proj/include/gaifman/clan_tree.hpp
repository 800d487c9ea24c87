#ifndef GAIFMAN_CLAN_TREE_HPP
#define GAIFMAN_CLAN_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gaifman/core_model.hpp"

namespace gaifman {

enum class NodeKind { leaf, complete, primitive, others };

const char* to_string(NodeKind kind);

/// Value snapshot of a strong-clan decomposition tree. This is the
/// exchange type between the incremental engine, the brute-force oracle,
/// the lattice skeleton builder, and the renderers.
struct ClanTree {
  NodeKind kind = NodeKind::leaf;
  /// Class of the quotient edges for complete nodes; nullopt when unknown
  /// (lattice skeletons) or not applicable.
  std::optional<ClassId> color;
  /// Item for leaves.
  ItemId item = 0;
  /// Number of collapsed leaves for an "Others" node.
  std::size_t others_count = 0;
  std::vector<ClanTree> children;

  static ClanTree leaf(ItemId x) { return ClanTree{NodeKind::leaf, std::nullopt, x, 0, {}}; }

  bool is_internal() const {
    return kind == NodeKind::complete || kind == NodeKind::primitive;
  }
  /// Items below this node, sorted.
  std::vector<ItemId> items() const;
  ItemSet item_set(std::size_t capacity) const;
  /// Smallest item below this node (ordering key for canonical forms).
  ItemId min_item() const;
  /// Vertex sets of all internal nodes, in preorder.
  std::vector<ItemSet> internal_sets(std::size_t capacity) const;
  std::size_t node_count() const;

  friend bool operator==(const ClanTree&, const ClanTree&) = default;
};

struct CanonicalOptions {
  /// Emit complete-node colours, renumbered by first appearance.
  bool colors = true;
  /// Use item labels from this universe instead of numeric ids.
  const Universe* labels = nullptr;
};

/// Text form where children are ordered by their smallest item and colours
/// are renumbered in order of first appearance, so equal trees (and a
/// two-class tree and its complement's tree) give equal strings.
std::string canonical_form(const ClanTree& tree, CanonicalOptions options = {});

/// Within every complete node of class 0 that has at least `min_leaves`
/// leaf children, replaces those leaves by one synthetic Others node.
/// Requires min_leaves >= 2.
ClanTree group_others(const ClanTree& tree, std::size_t min_leaves);

/// Quotient class between two disjoint clans, read from representatives.
ClassId quotient_class(const TwoStructure& s, const ClanTree& a, const ClanTree& b);

/// True when the quotient of `node` contains an induced P4 on two classes,
/// i.e. four children w-x-y-z joined by class c along the path and by
/// another class elsewhere.
bool quotient_has_induced_p4(const TwoStructure& s, const ClanTree& node);

/// Checks every node against the structure directly: children partition the
/// node, complete nodes have uniform quotient colour, primitive nodes have
/// no nontrivial union of children that forms a clan. Returns a description
/// of the first violation.
std::optional<std::string> validate_tree(const TwoStructure& s, const ClanTree& tree);

}  // namespace gaifman

#endif  // GAIFMAN_CLAN_TREE_HPP
