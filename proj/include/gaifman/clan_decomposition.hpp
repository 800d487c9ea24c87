#ifndef GAIFMAN_CLAN_DECOMPOSITION_HPP
#define GAIFMAN_CLAN_DECOMPOSITION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gaifman/clan_tree.hpp"
#include "gaifman/core_model.hpp"

namespace gaifman {

/// Which branch of the insertion procedure handled a vertex at one level.
enum class InsertCase {
  initial_empty,          // first vertex of the tree
  initial_single,         // second vertex next to a lone leaf
  join_complete,          // 1(a)
  carve_subclan,          // 1(b)
  superior_of_complete,   // 1(c)
  complete_to_primitive,  // 1(d)
  recurse_into_like,      // 2(a)
  superior_of_primitive,  // 2(b)
  join_primitive,         // 2(c)
};

/// Short tag such as "1a" or "init".
const char* case_tag(InsertCase c);

/// How a new vertex sees the children of a clan.
struct VisibilityPartition {
  using NodeId = EdgeRegistry::NodeId;
  /// Seen with the clan's own colour (complete clans only).
  std::vector<NodeId> color_visible;
  /// Seen uniformly with some other class; paired with the class rep.
  std::vector<std::pair<NodeId, EdgeRegistry::ClassRep>> other_visible;
  /// Seen through more than one class.
  std::vector<NodeId> nonvisible;
};

/// Incrementally maintained strong-clan decomposition of a 2-structure.
///
/// Node ids double as registry endpoints: leaves are the item ids
/// [0, n), clans get fresh ids from the registry. A clan id is bound to
/// one vertex set for its whole life; whenever a clan gains or loses
/// members a new node replaces it and the old id is retired, so registry
/// edges never go stale.
class DecompositionTree {
 public:
  using NodeId = EdgeRegistry::NodeId;

  struct Node {
    NodeKind kind = NodeKind::leaf;
    ClassId color = kAbsent;  // complete nodes only
    std::vector<NodeId> children;
    ItemId min_item = 0;
    std::uint32_t size = 1;
    bool retired = false;
  };

  struct Stats {
    std::uint64_t packs = 0;
    std::uint64_t pack_finds = 0;
    std::uint64_t visibility_finds = 0;
    std::uint64_t splits = 0;
  };

  explicit DecompositionTree(const TwoStructure& s);

  /// Adds one vertex at the root.
  void insert(ItemId x);

  /// Adds x below `clan` and returns the node that replaces `clan`.
  NodeId insert_vertex(NodeId clan, ItemId x);

  VisibilityPartition classify_visibility(ItemId x, NodeId clan);

  /// Maximal strong clans below `clan` that x sees uniformly. Throws
  /// LogicError when x already sees `clan` uniformly.
  std::vector<NodeId> split(NodeId clan, ItemId x);

  /// Registers an edge from every outside vertex that sees all children
  /// of `clan` through one class. Returns the number of finds performed.
  std::uint64_t pack(NodeId clan);

  std::optional<NodeId> root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  bool contains(ItemId x) const { return inserted_[x]; }
  std::size_t inserted_count() const { return inserted_count_; }

  const TwoStructure& structure() const { return *structure_; }
  EdgeRegistry& registry() { return registry_; }
  const std::vector<InsertCase>& case_log() const { return case_log_; }
  const Stats& stats() const { return stats_; }

  /// Value copy of the current tree; a single leaf when one item is inserted.
  ClanTree snapshot() const;
  ClanTree snapshot(NodeId id) const;

  /// Builds a complete or primitive node over existing nodes and packs it.
  /// `grown_from` names a packed clan C and vertex x when the new node's
  /// vertex set is exactly C plus x, which lets packing skip the children.
  NodeId make_node(NodeKind kind, ClassId color, std::vector<NodeId> children,
                   std::optional<std::pair<NodeId, ItemId>> grown_from = std::nullopt);

 private:
  ItemId representative(NodeId id) const { return nodes_[id].min_item; }
  void retire(NodeId id);
  void mark_members(NodeId clan);
  std::uint64_t pack_grown(NodeId clan, NodeId old, ItemId x);
  bool is_like(ItemId x, NodeId candidate, const std::vector<NodeId>& siblings);

  const TwoStructure* structure_;
  EdgeRegistry registry_;
  std::vector<Node> nodes_;
  std::vector<bool> inserted_;
  std::size_t inserted_count_ = 0;
  std::optional<NodeId> root_;
  std::vector<InsertCase> case_log_;
  Stats stats_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

/// Inserts every vertex in `order` (default: universe order).
DecompositionTree decompose(const TwoStructure& s,
                            const std::optional<std::vector<ItemId>>& order = std::nullopt);

/// Uniformly shuffled permutation of 0..n-1, reproducible from the seed.
std::vector<ItemId> shuffled_order(std::size_t n, std::uint64_t seed);

}  // namespace gaifman

#endif  // GAIFMAN_CLAN_DECOMPOSITION_HPP
