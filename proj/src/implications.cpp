#include "gaifman/implications.hpp"

#include <algorithm>
#include <bit>

#include "gaifman/error.hpp"

namespace gaifman {

void ImplicationSet::add(ItemId x, ItemId y, const ItemSet& consequent) {
  if (x == y) throw InputError("implication antecedent must be two distinct items");
  if (x >= universe_.size() || y >= universe_.size())
    throw InputError("implication antecedent outside the universe");
  if (x > y) std::swap(x, y);
  auto items = consequent.items();
  if (items.empty()) throw InputError("implication with an empty consequent");
  for (auto z : items) {
    if (z == x || z == y) throw InputError("implication consequent contains its antecedent");
    if (z >= universe_.size()) throw InputError("implication consequent outside the universe");
  }
  auto [it, fresh] = rules_.emplace(Pair{x, y}, items);
  if (!fresh && it->second != items)
    throw InputError("conflicting implications for " + universe_.label(x) + " " +
                     universe_.label(y));
}

std::optional<ItemSet> ImplicationSet::find(ItemId x, ItemId y) const {
  if (x > y) std::swap(x, y);
  auto it = rules_.find(Pair{x, y});
  if (it == rules_.end()) return std::nullopt;
  ItemSet out(universe_.size());
  for (auto z : it->second) out.insert(z);
  return out;
}

std::vector<Implication> ImplicationSet::list() const {
  std::vector<Implication> out;
  out.reserve(rules_.size());
  for (const auto& [pair, items] : rules_) {
    ItemSet z(universe_.size());
    for (auto v : items) z.insert(v);
    out.push_back(Implication{pair.first, pair.second, std::move(z)});
  }
  return out;
}

bool operator==(const ImplicationSet& a, const ImplicationSet& b) {
  return a.universe_ == b.universe_ && a.rules_ == b.rules_;
}

ItemSet distinguishing_set(const TwoStructure& s, ItemId x, ItemId y) {
  if (x == y) throw InputError("distinguishing set needs two distinct items");
  if (x >= s.size() || y >= s.size()) throw InputError("item outside the universe");
  ItemSet out(s.size());
  for (ItemId z = 0; z < s.size(); ++z)
    if (z != x && z != y && s.edge_class(x, z) != s.edge_class(y, z)) out.insert(z);
  return out;
}

ImplicationSet generate_implications(const TwoStructure& s) {
  ImplicationSet b(s.universe());
  for (ItemId x = 0; x < s.size(); ++x)
    for (ItemId y = x + 1; y < s.size(); ++y) {
      auto d = distinguishing_set(s, x, y);
      if (!d.empty()) b.add(x, y, d);
    }
  b.source_classes = s.classes_present().size();
  return b;
}

ItemSet closure(const ImplicationSet& b, const ItemSet& x) {
  const auto rules = b.list();
  ItemSet cur(b.universe().size());
  for (auto v : x.items()) {
    if (v >= b.universe().size()) throw InputError("closure argument outside the universe");
    cur.insert(v);
  }
  std::vector<bool> fired(rules.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (fired[i] || !cur.contains(rules[i].x) || !cur.contains(rules[i].y)) continue;
      fired[i] = true;
      if (!rules[i].consequent.is_subset_of(cur)) {
        cur |= rules[i].consequent;
        changed = true;
      }
    }
  }
  return cur;
}

const char* to_string(ClanType t) {
  return t == ClanType::complete ? "complete" : "primitive";
}

std::optional<std::size_t> ClosureLattice::index_of(const ItemSet& s) const {
  for (std::size_t i = 0; i < closed.size(); ++i)
    if (closed[i] == s) return i;
  return std::nullopt;
}

namespace {

struct MaskRule {
  std::uint32_t antecedent;
  std::uint32_t consequent;
};

std::uint32_t mask_closure(const std::vector<MaskRule>& rules, std::uint32_t x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules)
      if ((x & r.antecedent) == r.antecedent && (r.consequent & ~x)) {
        x |= r.consequent;
        changed = true;
      }
  }
  return x;
}

}  // namespace

ClosureLattice enumerate_closed_sets(const ImplicationSet& b, std::size_t guard) {
  const std::size_t n = b.universe().size();
  if (n > guard || n > 31)
    throw GuardError("closed-set enumeration refused: " + std::to_string(n) +
                     " items exceeds the guard of " + std::to_string(guard));
  std::vector<MaskRule> rules;
  for (const auto& imp : b.list())
    rules.push_back({(std::uint32_t{1} << imp.x) | (std::uint32_t{1} << imp.y),
                     static_cast<std::uint32_t>(imp.consequent.to_mask())});

  // lectic order: item 0 is the most significant position
  auto bit = [n](std::size_t i) { return std::uint32_t{1} << i; };
  std::vector<std::uint32_t> masks;
  std::uint32_t a = mask_closure(rules, 0);
  masks.push_back(a);
  const std::uint32_t full = n == 0 ? 0 : (bit(n - 1) << 1) - 1;
  while (a != full) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a & bit(i)) continue;
      const std::uint32_t below = bit(i) - 1;
      const std::uint32_t next = mask_closure(rules, (a & below) | bit(i));
      if ((next & below) == (a & below)) {
        a = next;
        masks.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  ClosureLattice l;
  l.universe_size = n;
  l.source_classes = b.source_classes;
  const std::size_t m = masks.size();
  for (auto mk : masks) l.closed.push_back(ItemSet::from_mask(n, mk));

  std::vector<std::size_t> by_size(m);
  for (std::size_t i = 0; i < m; ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t x, std::size_t y) {
    return std::popcount(masks[x]) > std::popcount(masks[y]);
  });
  l.hasse.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    // proper closed subsets, largest first; keep those not below a kept one
    std::vector<std::uint32_t> kept;
    for (auto j : by_size) {
      if (masks[j] == masks[i] || (masks[j] & ~masks[i])) continue;
      bool covered = false;
      for (auto k : kept)
        if ((masks[j] & ~k) == 0) {
          covered = true;
          break;
        }
      if (covered) continue;
      kept.push_back(masks[j]);
      l.hasse[i].push_back(j);
    }
    std::sort(l.hasse[i].begin(), l.hasse[i].end());
  }

  l.strong.assign(m, true);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto x = masks[i], y = masks[j];
      if ((x & y) && (x & ~y) && (y & ~x)) l.strong[i] = l.strong[j] = false;
    }
  return l;
}

std::vector<ItemSet> strong_closed_sets(const ClosureLattice& l) {
  std::vector<ItemSet> out;
  for (std::size_t i = 0; i < l.closed.size(); ++i)
    if (l.strong[i] && !l.closed[i].empty()) out.push_back(l.closed[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t primitive_child_bound(std::optional<std::size_t> source_classes) {
  return source_classes && *source_classes <= 2 ? 3 : 2;
}

ClanType infer_clan_type(const ClosureLattice& l, const ItemSet& c) {
  auto idx = l.index_of(c);
  if (!idx || !l.strong[*idx] || c.size() < 2)
    throw InputError("type inference needs a strong closed set with at least two items");
  const auto& kids = l.hasse[*idx];
  const bool all_strong =
      std::all_of(kids.begin(), kids.end(), [&](std::size_t k) { return l.strong[k]; });
  return all_strong && kids.size() > primitive_child_bound(l.source_classes)
             ? ClanType::primitive
             : ClanType::complete;
}

namespace {

ClanTree skeleton(const ClosureLattice& l, const ItemSet& node,
                  const std::vector<ItemSet>& strong) {
  if (node.size() == 1) return ClanTree::leaf(node.first());
  ClanTree t;
  for (const auto& m : strong) {
    if (m == node || !m.is_subset_of(node)) continue;
    bool maximal = true;
    for (const auto& o : strong)
      if (o != node && o != m && o.is_subset_of(node) && m.is_subset_of(o)) {
        maximal = false;
        break;
      }
    if (maximal) t.children.push_back(skeleton(l, m, strong));
  }
  t.kind = infer_clan_type(l, node) == ClanType::primitive ? NodeKind::primitive
                                                           : NodeKind::complete;
  return t;
}

}  // namespace

ClanTree lattice_to_tree(const ClosureLattice& l) {
  if (l.universe_size == 0) throw InputError("empty universe has no tree");
  auto strong = strong_closed_sets(l);
  return skeleton(l, ItemSet::full(l.universe_size), strong);
}

}  // namespace gaifman
