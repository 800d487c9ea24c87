#include "gaifman/clan_tree.hpp"

#include <algorithm>
#include <map>

#include "gaifman/error.hpp"

namespace gaifman {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::complete: return "complete";
    case NodeKind::primitive: return "primitive";
    case NodeKind::others: return "others";
  }
  return "?";
}

namespace {

void collect_items(const ClanTree& t, std::vector<ItemId>& out) {
  if (t.kind == NodeKind::leaf) {
    out.push_back(t.item);
    return;
  }
  for (const auto& c : t.children) collect_items(c, out);
}

void collect_sets(const ClanTree& t, std::size_t capacity, std::vector<ItemSet>& out) {
  if (!t.is_internal()) return;
  out.push_back(t.item_set(capacity));
  for (const auto& c : t.children) collect_sets(c, capacity, out);
}

ItemId representative(const ClanTree& t) {
  const ClanTree* cur = &t;
  while (cur->kind != NodeKind::leaf) {
    if (cur->children.empty()) throw LogicError("internal node without children");
    cur = &cur->children.front();
  }
  return cur->item;
}

struct CanonicalWriter {
  CanonicalOptions options;
  std::map<ClassId, std::size_t> renumbered;
  std::string out;

  void write(const ClanTree& t) {
    switch (t.kind) {
      case NodeKind::leaf:
        out += options.labels ? options.labels->label(t.item) : std::to_string(t.item);
        return;
      case NodeKind::others:
        out += "Others(" + std::to_string(t.others_count) + ")";
        return;
      case NodeKind::complete:
        out += "C";
        if (options.colors && t.color) {
          auto [it, fresh] = renumbered.emplace(*t.color, renumbered.size());
          out += std::to_string(it->second);
        }
        break;
      case NodeKind::primitive:
        out += "P";
        break;
    }
    std::vector<const ClanTree*> kids;
    for (const auto& c : t.children) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(), [](const ClanTree* a, const ClanTree* b) {
      return a->min_item() < b->min_item();
    });
    out += "{";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ",";
      write(*kids[i]);
    }
    out += "}";
  }
};

}  // namespace

std::vector<ItemId> ClanTree::items() const {
  std::vector<ItemId> out;
  collect_items(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

ItemSet ClanTree::item_set(std::size_t capacity) const {
  ItemSet s(capacity);
  for (auto x : items()) s.insert(x);
  return s;
}

ItemId ClanTree::min_item() const {
  if (kind == NodeKind::leaf) return item;
  ItemId best = static_cast<ItemId>(-1);
  for (const auto& c : children) best = std::min(best, c.min_item());
  return best;
}

std::vector<ItemSet> ClanTree::internal_sets(std::size_t capacity) const {
  std::vector<ItemSet> out;
  collect_sets(*this, capacity, out);
  return out;
}

std::size_t ClanTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

std::string canonical_form(const ClanTree& tree, CanonicalOptions options) {
  CanonicalWriter w{options, {}, {}};
  w.write(tree);
  return w.out;
}

ClanTree group_others(const ClanTree& tree, std::size_t min_leaves) {
  if (min_leaves < 2) throw InputError("others grouping needs a minimum of at least 2");
  ClanTree out = tree;
  out.children.clear();
  for (const auto& c : tree.children) out.children.push_back(group_others(c, min_leaves));
  if (out.kind != NodeKind::complete || out.color != kAbsent) return out;

  std::size_t leaves = 0;
  for (const auto& c : out.children) leaves += c.kind == NodeKind::leaf;
  if (leaves < min_leaves) return out;

  std::vector<ClanTree> kept;
  for (auto& c : out.children)
    if (c.kind != NodeKind::leaf) kept.push_back(std::move(c));
  kept.push_back(ClanTree{NodeKind::others, std::nullopt, 0, leaves, {}});
  out.children = std::move(kept);
  return out;
}

ClassId quotient_class(const TwoStructure& s, const ClanTree& a, const ClanTree& b) {
  return s.edge_class(representative(a), representative(b));
}

bool quotient_has_induced_p4(const TwoStructure& s, const ClanTree& node) {
  const auto& ch = node.children;
  const std::size_t k = ch.size();
  if (k < 4) return false;
  std::vector<ItemId> rep(k);
  for (std::size_t i = 0; i < k; ++i) rep[i] = representative(ch[i]);
  auto cls = [&](std::size_t i, std::size_t j) { return s.edge_class(rep[i], rep[j]); };
  // path w-x-y-z in class c, the three non-path pairs share one other class
  for (std::size_t w = 0; w < k; ++w)
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        for (std::size_t z = 0; z < k; ++z) {
          if (w == x || w == y || w == z || x == y || x == z || y == z) continue;
          auto c = cls(w, x);
          if (cls(x, y) != c || cls(y, z) != c) continue;
          auto d = cls(w, y);
          if (d == c || cls(x, z) != d || cls(w, z) != d) continue;
          return true;
        }
  return false;
}

namespace {

std::optional<std::string> validate_node(const TwoStructure& s, const ClanTree& t) {
  if (t.kind == NodeKind::leaf) {
    if (!t.children.empty()) return "leaf with children";
    return std::nullopt;
  }
  if (t.kind == NodeKind::others) return std::nullopt;
  const auto& ch = t.children;
  if (ch.size() < 2) return "internal node with fewer than 2 children";

  auto members = t.item_set(s.size());
  auto member_list = members.items();
  for (ItemId z = 0; z < s.size(); ++z) {
    if (members.contains(z)) continue;
    for (auto y : member_list)
      if (s.edge_class(z, y) != s.edge_class(z, member_list.front()))
        return "node is not a clan";
  }

  // children partition the node
  std::vector<ItemId> all;
  for (const auto& c : ch) {
    auto it = c.items();
    all.insert(all.end(), it.begin(), it.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    return "children overlap";

  const std::size_t k = ch.size();
  std::vector<std::vector<ClassId>> q(k, std::vector<ClassId>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) q[i][j] = quotient_class(s, ch[i], ch[j]);

  if (t.kind == NodeKind::complete) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (!t.color || q[i][j] != *t.color) return "complete node with mixed quotient classes";
  } else {
    if (k < 3) return "primitive node with fewer than 3 children";
    // smallest quotient clan containing each pair must be the whole quotient
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        std::vector<bool> in(k, false);
        in[a] = in[b] = true;
        bool grown = true;
        while (grown) {
          grown = false;
          for (std::size_t z = 0; z < k; ++z) {
            if (in[z]) continue;
            std::optional<ClassId> seen;
            for (std::size_t m = 0; m < k && !in[z]; ++m) {
              if (!in[m]) continue;
              if (!seen) seen = q[z][m];
              else if (*seen != q[z][m]) in[z] = grown = true;
            }
          }
        }
        if (std::find(in.begin(), in.end(), false) != in.end())
          return "primitive node has a nontrivial quotient clan";
      }
  }
  for (const auto& c : ch)
    if (auto err = validate_node(s, c)) return err;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_tree(const TwoStructure& s, const ClanTree& tree) {
  auto items = tree.items();
  if (items.size() != s.size()) return "tree does not cover the universe";
  return validate_node(s, tree);
}

}  // namespace gaifman
