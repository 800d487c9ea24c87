#include "gaifman/clan_decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gaifman/error.hpp"

namespace gaifman {

const char* case_tag(InsertCase c) {
  switch (c) {
    case InsertCase::initial_empty: return "init0";
    case InsertCase::initial_single: return "init1";
    case InsertCase::join_complete: return "1a";
    case InsertCase::carve_subclan: return "1b";
    case InsertCase::superior_of_complete: return "1c";
    case InsertCase::complete_to_primitive: return "1d";
    case InsertCase::recurse_into_like: return "2a";
    case InsertCase::superior_of_primitive: return "2b";
    case InsertCase::join_primitive: return "2c";
  }
  return "?";
}

DecompositionTree::DecompositionTree(const TwoStructure& s)
    : structure_(&s),
      registry_(s),
      nodes_(s.size()),
      inserted_(s.size(), false),
      mark_(s.size(), 0) {
  for (ItemId x = 0; x < s.size(); ++x) nodes_[x].min_item = x;
}

void DecompositionTree::retire(NodeId id) {
  if (registry_.is_vertex(id)) return;
  nodes_[id].retired = true;
  nodes_[id].children.clear();
  nodes_[id].children.shrink_to_fit();
}

DecompositionTree::NodeId DecompositionTree::make_node(
    NodeKind kind, ClassId color, std::vector<NodeId> children,
    std::optional<std::pair<NodeId, ItemId>> grown_from) {
  if (children.size() < 2) throw LogicError("clan node needs at least two children");
  NodeId id = registry_.new_clan_id();
  if (id != nodes_.size()) throw LogicError("clan id space out of sync");
  Node n;
  n.kind = kind;
  n.color = kind == NodeKind::complete ? color : kAbsent;
  n.size = 0;
  n.min_item = static_cast<ItemId>(-1);
  for (auto c : children) {
    n.size += nodes_[c].size;
    n.min_item = std::min(n.min_item, nodes_[c].min_item);
  }
  n.children = std::move(children);
  nodes_.push_back(std::move(n));
  if (grown_from) {
    pack_grown(id, grown_from->first, grown_from->second);
  } else {
    pack(id);
  }
  return id;
}

void DecompositionTree::mark_members(NodeId clan) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  std::vector<NodeId> stack{clan};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    if (registry_.is_vertex(id)) {
      mark_[id] = epoch_;
    } else {
      for (auto c : nodes_[id].children) stack.push_back(c);
    }
  }
}

std::uint64_t DecompositionTree::pack(NodeId clan) {
  const auto& cq = nodes_[clan].children;
  if (cq.empty()) return 0;
  ++stats_.packs;
  mark_members(clan);

  std::uint64_t finds = 0;
  const auto n = static_cast<NodeId>(structure_->size());
  for (NodeId v = 0; v < n; ++v) {
    if (mark_[v] == epoch_) continue;
    ++finds;
    auto initial = registry_.find(v, cq[0]);
    if (!initial) continue;
    bool same = true;
    for (std::size_t j = 1; same && j < cq.size(); ++j) {
      ++finds;
      auto r = registry_.find(v, cq[j]);
      same = r && *r == *initial;
    }
    if (same) registry_.add_edge(v, clan, *initial);
  }
  stats_.pack_finds += finds;
  return finds;
}

std::uint64_t DecompositionTree::pack_grown(NodeId clan, NodeId old, ItemId x) {
  ++stats_.packs;
  mark_members(clan);
  std::uint64_t finds = 0;
  const auto n = static_cast<NodeId>(structure_->size());
  for (NodeId v = 0; v < n; ++v) {
    if (mark_[v] == epoch_) continue;
    ++finds;
    auto seen = registry_.find(v, old);
    if (!seen) continue;
    ++finds;
    if (*registry_.find(v, x) == *seen) registry_.add_edge(v, clan, *seen);
  }
  stats_.pack_finds += finds;
  return finds;
}

VisibilityPartition DecompositionTree::classify_visibility(ItemId x, NodeId clan) {
  VisibilityPartition part;
  const auto& node = nodes_[clan];
  for (auto child : node.children) {
    ++stats_.visibility_finds;
    auto r = registry_.find(x, child);
    if (!r) {
      part.nonvisible.push_back(child);
    } else if (node.kind == NodeKind::complete && registry_.class_of(*r) == node.color) {
      part.color_visible.push_back(child);
    } else {
      part.other_visible.emplace_back(child, *r);
    }
  }
  return part;
}

std::vector<DecompositionTree::NodeId> DecompositionTree::split(NodeId clan, ItemId x) {
  if (registry_.find(x, clan))
    throw LogicError("split called on a clan the vertex already sees uniformly");
  ++stats_.splits;
  const Node node = nodes_[clan];
  std::vector<NodeId> result;

  if (node.kind == NodeKind::primitive) {
    for (auto child : node.children) {
      if (registry_.find(x, child)) {
        result.push_back(child);
      } else {
        auto parts = split(child, x);
        result.insert(result.end(), parts.begin(), parts.end());
      }
    }
  } else {
    // group visible children by the class they are seen with, in first-seen order
    std::vector<std::pair<EdgeRegistry::ClassRep, std::vector<NodeId>>> groups;
    for (auto child : node.children) {
      if (auto r = registry_.find(x, child)) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == *r; });
        if (it == groups.end()) {
          groups.push_back({*r, {child}});
        } else {
          it->second.push_back(child);
        }
      } else {
        auto parts = split(child, x);
        result.insert(result.end(), parts.begin(), parts.end());
      }
    }
    for (auto& [rep, members] : groups) {
      if (members.size() > 1) {
        result.push_back(make_node(NodeKind::complete, node.color, std::move(members)));
      } else {
        result.push_back(members.front());
      }
    }
  }
  retire(clan);
  return result;
}

bool DecompositionTree::is_like(ItemId x, NodeId candidate,
                                const std::vector<NodeId>& siblings) {
  auto rep = representative(candidate);
  for (auto other : siblings) {
    if (other == candidate) continue;
    ++stats_.visibility_finds;
    auto seen = registry_.find(x, other);
    if (!seen || *seen != *registry_.find(rep, representative(other))) return false;
  }
  return true;
}

DecompositionTree::NodeId DecompositionTree::insert_vertex(NodeId clan, ItemId x) {
  const auto leaf_x = static_cast<NodeId>(x);

  if (registry_.is_vertex(clan)) {
    case_log_.push_back(InsertCase::initial_single);
    return make_node(NodeKind::complete, structure_->edge_class(clan, x), {clan, leaf_x},
                     std::pair{clan, x});
  }

  const Node node = nodes_[clan];
  auto part = classify_visibility(x, clan);
  const bool all_visible = part.nonvisible.empty();
  const bool one_color =
      all_visible && part.color_visible.empty() &&
      std::all_of(part.other_visible.begin(), part.other_visible.end(),
                  [&](const auto& v) { return v.second == part.other_visible.front().second; });

  if (node.kind == NodeKind::complete) {
    if (part.color_visible.size() == node.children.size()) {
      // 1(a): x joins the complete quotient
      case_log_.push_back(InsertCase::join_complete);
      auto children = node.children;
      children.push_back(leaf_x);
      retire(clan);
      return make_node(NodeKind::complete, node.color, std::move(children), std::pair{clan, x});
    }
    if (!part.color_visible.empty()) {
      // 1(b): children not seen with the clan colour move into a sibling
      // subclan that absorbs x
      case_log_.push_back(InsertCase::carve_subclan);
      std::vector<NodeId> rest;
      for (auto c : node.children)
        if (std::find(part.color_visible.begin(), part.color_visible.end(), c) ==
            part.color_visible.end())
          rest.push_back(c);
      NodeId sub;
      if (rest.size() == 1) {
        sub = insert_vertex(rest.front(), x);
      } else {
        auto aux = make_node(NodeKind::complete, node.color, std::move(rest));
        sub = insert_vertex(aux, x);
      }
      auto children = part.color_visible;
      children.push_back(sub);
      retire(clan);
      return make_node(NodeKind::complete, node.color, std::move(children), std::pair{clan, x});
    }
    if (one_color) {
      // 1(c): superior complete clan {clan, x}
      case_log_.push_back(InsertCase::superior_of_complete);
      auto color = registry_.class_of(part.other_visible.front().second);
      return make_node(NodeKind::complete, color, {clan, leaf_x}, std::pair{clan, x});
    }
    // 1(d): the clan becomes primitive
    case_log_.push_back(InsertCase::complete_to_primitive);
    std::vector<NodeId> children{leaf_x};
    std::vector<std::pair<EdgeRegistry::ClassRep, std::vector<NodeId>>> groups;
    for (const auto& [child, rep] : part.other_visible) {
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == rep; });
      if (it == groups.end()) {
        groups.push_back({rep, {child}});
      } else {
        it->second.push_back(child);
      }
    }
    for (auto& [rep, members] : groups) {
      if (members.size() > 1) {
        children.push_back(make_node(NodeKind::complete, node.color, std::move(members)));
      } else {
        children.push_back(members.front());
      }
    }
    for (auto m : part.nonvisible) {
      auto parts = split(m, x);
      children.insert(children.end(), parts.begin(), parts.end());
    }
    retire(clan);
    return make_node(NodeKind::primitive, kAbsent, std::move(children), std::pair{clan, x});
  }

  // primitive clan
  std::optional<NodeId> like;
  if (part.nonvisible.size() <= 1) {
    if (part.nonvisible.size() == 1) {
      if (is_like(x, part.nonvisible.front(), node.children)) like = part.nonvisible.front();
    } else {
      for (auto c : node.children) {
        if (is_like(x, c, node.children)) {
          like = c;
          break;
        }
      }
    }
  }
  if (like) {
    // 2(a): x is like exactly one child; recurse into it
    case_log_.push_back(InsertCase::recurse_into_like);
    auto sub = insert_vertex(*like, x);
    auto children = node.children;
    std::replace(children.begin(), children.end(), *like, sub);
    retire(clan);
    return make_node(NodeKind::primitive, kAbsent, std::move(children), std::pair{clan, x});
  }
  if (one_color) {
    // 2(b): superior complete clan {clan, x}
    case_log_.push_back(InsertCase::superior_of_primitive);
    auto color = registry_.class_of(part.other_visible.front().second);
    return make_node(NodeKind::complete, color, {clan, leaf_x}, std::pair{clan, x});
  }
  // 2(c): x joins the primitive quotient; nonvisible children split
  case_log_.push_back(InsertCase::join_primitive);
  std::vector<NodeId> children;
  for (auto c : node.children)
    if (std::find(part.nonvisible.begin(), part.nonvisible.end(), c) == part.nonvisible.end())
      children.push_back(c);
  children.push_back(leaf_x);
  for (auto m : part.nonvisible) {
    auto parts = split(m, x);
    children.insert(children.end(), parts.begin(), parts.end());
  }
  retire(clan);
  return make_node(NodeKind::primitive, kAbsent, std::move(children), std::pair{clan, x});
}

void DecompositionTree::insert(ItemId x) {
  if (x >= structure_->size()) throw InputError("vertex out of range: " + std::to_string(x));
  if (inserted_[x]) throw InputError("vertex inserted twice: " + std::to_string(x));
  inserted_[x] = true;
  ++inserted_count_;
  if (!root_) {
    case_log_.push_back(InsertCase::initial_empty);
    root_ = static_cast<NodeId>(x);
    return;
  }
  root_ = insert_vertex(*root_, x);
}

ClanTree DecompositionTree::snapshot() const {
  if (!root_) throw LogicError("snapshot of an empty decomposition");
  return snapshot(*root_);
}

ClanTree DecompositionTree::snapshot(NodeId id) const {
  const auto& n = nodes_[id];
  if (id < structure_->size()) return ClanTree::leaf(static_cast<ItemId>(id));
  ClanTree t;
  t.kind = n.kind;
  if (n.kind == NodeKind::complete) t.color = n.color;
  for (auto c : n.children) t.children.push_back(snapshot(c));
  return t;
}

DecompositionTree decompose(const TwoStructure& s,
                            const std::optional<std::vector<ItemId>>& order) {
  DecompositionTree tree(s);
  if (order) {
    if (order->size() != s.size()) throw InputError("insertion order must list every vertex");
    for (auto x : *order) tree.insert(x);
  } else {
    for (ItemId x = 0; x < s.size(); ++x) tree.insert(x);
  }
  return tree;
}

std::vector<ItemId> shuffled_order(std::size_t n, std::uint64_t seed) {
  std::vector<ItemId> order(n);
  std::iota(order.begin(), order.end(), ItemId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace gaifman
