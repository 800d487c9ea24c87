#include "gaifman/oracle.hpp"

#include <algorithm>
#include <bit>

#include "gaifman/error.hpp"

namespace gaifman {

namespace {

void check_guard(const TwoStructure& s, std::size_t guard) {
  if (s.size() > guard || s.size() > kOracleGuard)
    throw GuardError("exhaustive clan search refused: " + std::to_string(s.size()) +
                     " vertices exceeds the guard of " + std::to_string(guard));
}

// nb[z * classes + c] = mask of vertices joined to z by class c
struct MaskTable {
  std::size_t n;
  std::size_t classes;
  std::vector<std::uint32_t> nb;

  explicit MaskTable(const TwoStructure& s)
      : n(s.size()), classes(s.max_class() + 1), nb(n * classes, 0) {
    for (ItemId z = 0; z < n; ++z)
      for (ItemId y = 0; y < n; ++y)
        if (y != z) nb[z * classes + s.edge_class(z, y)] |= std::uint32_t{1} << y;
  }

  bool is_clan(const TwoStructure& s, std::uint32_t c) const {
    if (c == 0) return true;
    const auto first = static_cast<ItemId>(std::countr_zero(c));
    for (ItemId z = 0; z < n; ++z) {
      if (c >> z & 1) continue;
      if (c & ~nb[z * classes + s.edge_class(z, first)]) return false;
    }
    return true;
  }
};

bool overlap(std::uint32_t a, std::uint32_t b) {
  return (a & b) && (a & ~b) && (b & ~a);
}

std::vector<std::uint32_t> clan_masks(const TwoStructure& s) {
  MaskTable t(s);
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << s.size();
  for (std::uint32_t c = 1; c < limit; ++c)
    if (t.is_clan(s, c)) out.push_back(c);
  return out;
}

std::vector<std::uint32_t> strong_masks(const TwoStructure& s) {
  auto clans = clan_masks(s);
  std::vector<std::uint32_t> out;
  for (auto a : clans) {
    bool strong = true;
    for (auto b : clans)
      if (overlap(a, b)) {
        strong = false;
        break;
      }
    if (strong) out.push_back(a);
  }
  return out;
}

std::vector<ItemSet> to_sets(std::size_t n, const std::vector<std::uint32_t>& masks) {
  std::vector<ItemSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(ItemSet::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

ClanTree build(const TwoStructure& s, std::uint32_t node,
               const std::vector<std::uint32_t>& strong) {
  if (std::popcount(node) == 1)
    return ClanTree::leaf(static_cast<ItemId>(std::countr_zero(node)));
  // maximal strong clans strictly inside `node`
  std::vector<std::uint32_t> kids;
  for (auto m : strong) {
    if (m == node || (m & ~node)) continue;
    bool maximal = true;
    for (auto o : strong)
      if (o != node && o != m && !(o & ~node) && (m & ~o) == 0) {
        maximal = false;
        break;
      }
    if (maximal) kids.push_back(m);
  }
  ClanTree t;
  std::vector<ItemId> rep;
  for (auto k : kids) {
    t.children.push_back(build(s, k, strong));
    rep.push_back(static_cast<ItemId>(std::countr_zero(k)));
  }
  const ClassId c0 = s.edge_class(rep[0], rep[1]);
  bool uniform = true;
  for (std::size_t i = 0; i < rep.size() && uniform; ++i)
    for (std::size_t j = i + 1; j < rep.size() && uniform; ++j)
      uniform = s.edge_class(rep[i], rep[j]) == c0;
  t.kind = uniform ? NodeKind::complete : NodeKind::primitive;
  if (uniform) t.color = c0;
  return t;
}

}  // namespace

bool is_clan(const TwoStructure& s, const ItemSet& c) {
  auto members = c.items();
  if (members.size() <= 1) return true;
  for (ItemId z = 0; z < s.size(); ++z) {
    if (c.contains(z)) continue;
    const auto k = s.edge_class(z, members.front());
    for (auto y : members)
      if (s.edge_class(z, y) != k) return false;
  }
  return true;
}

std::vector<ItemSet> all_clans(const TwoStructure& s, std::size_t guard) {
  check_guard(s, guard);
  return to_sets(s.size(), clan_masks(s));
}

std::vector<ItemSet> strong_clans(const TwoStructure& s, std::size_t guard) {
  check_guard(s, guard);
  return to_sets(s.size(), strong_masks(s));
}

ClanTree brute_force_tree(const TwoStructure& s, std::size_t guard) {
  check_guard(s, guard);
  if (s.size() == 0) throw InputError("empty structure has no decomposition tree");
  auto strong = strong_masks(s);
  const std::uint32_t all =
      s.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << s.size()) - 1;
  return build(s, all, strong);
}

TwoStructure random_structure(std::mt19937_64& rng, std::size_t n, std::size_t classes) {
  if (classes < 1) throw InputError("need at least one class");
  std::uniform_int_distribution<ClassId> pick(0, static_cast<ClassId>(classes - 1));
  TwoStructure::Builder b(Universe::numbered(n));
  for (ItemId x = 0; x < n; ++x)
    for (ItemId y = x + 1; y < n; ++y) b.set(x, y, pick(rng));
  return std::move(b).build();
}

namespace {

void compose(std::mt19937_64& rng, std::vector<ItemId> vs, std::size_t classes,
             TwoStructure::Builder& b) {
  if (vs.size() < 2) return;
  std::shuffle(vs.begin(), vs.end(), rng);
  std::uniform_int_distribution<std::size_t> kdist(2, vs.size());
  const std::size_t k = kdist(rng);
  // cut the shuffled list into k nonempty groups
  std::vector<std::size_t> cuts(vs.size() - 1);
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::vector<ItemId>> groups;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    std::size_t end = i < cuts.size() ? cuts[i] : vs.size();
    groups.emplace_back(vs.begin() + start, vs.begin() + end);
    start = end;
  }

  std::uniform_int_distribution<ClassId> pick(0, static_cast<ClassId>(classes - 1));
  const bool complete = std::bernoulli_distribution(0.5)(rng);
  const ClassId color = pick(rng);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const ClassId c = complete ? color : pick(rng);
      for (auto x : groups[i])
        for (auto y : groups[j]) b.set(x, y, c);
    }
  for (auto& g : groups) compose(rng, std::move(g), classes, b);
}

}  // namespace

TwoStructure random_composed_structure(std::mt19937_64& rng, std::size_t n,
                                       std::size_t classes) {
  if (classes < 1) throw InputError("need at least one class");
  TwoStructure::Builder b(Universe::numbered(n));
  std::vector<ItemId> vs(n);
  for (ItemId x = 0; x < n; ++x) vs[x] = x;
  compose(rng, std::move(vs), classes, b);
  return std::move(b).build();
}

TwoStructure random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  TwoStructure::Builder b(Universe::numbered(n));
  for (ItemId x = 0; x < n; ++x)
    for (ItemId y = x + 1; y < n; ++y) b.set(x, y, edge(rng) ? 1 : 0);
  return std::move(b).build();
}

}  // namespace gaifman
