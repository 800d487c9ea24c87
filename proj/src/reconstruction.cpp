#include "gaifman/reconstruction.hpp"

#include <algorithm>
#include <deque>

#include "gaifman/error.hpp"

namespace gaifman {

std::optional<bool> PairGraph::label(std::size_t a, std::size_t b) const {
  for (const auto& e : edges)
    if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return e.same;
  return std::nullopt;
}

PairGraph build_pair_graph(const ImplicationSet& b) {
  PairGraph g;
  g.n = b.universe().size();
  for (ItemId j = 1; j < g.n; ++j)
    for (ItemId i = 0; i < j; ++i) g.vertices.emplace_back(i, j);

  // (x,w) and (y,w) share status unless w is in the consequent of xy
  auto same = [&](ItemId x, ItemId y, ItemId w) {
    auto z = b.find(x, y);
    return !(z && z->contains(w));
  };
  for (ItemId j = 2; j < g.n; ++j)
    g.edges.push_back({PairGraph::index(0, j - 1), PairGraph::index(0, j), same(j - 1, j, 0)});
  for (ItemId j = 2; j < g.n; ++j)
    for (ItemId i = 1; i < j; ++i)
      g.edges.push_back({PairGraph::index(i - 1, j), PairGraph::index(i, j), same(i - 1, i, j)});
  return g;
}

std::vector<VertexPair> pair_path(VertexPair p1, VertexPair p2, std::size_t n) {
  auto valid = [n](VertexPair p) { return p.first < p.second && p.second < n; };
  if (!valid(p1) || !valid(p2)) throw InputError("pair_path needs pairs (i, j) with i < j < n");
  if (p1 == p2) throw InputError("pair_path needs two distinct pairs");

  bool reversed = false;
  if (p1.second > p2.second) {
    std::swap(p1, p2);
    reversed = true;
  }
  std::vector<VertexPair> path;
  const auto [l, k] = p1;
  const auto [m, p] = p2;
  if (k == p) {
    if (l < m) {
      for (ItemId i = l; i <= m; ++i) path.emplace_back(i, k);
    } else {
      for (ItemId i = l + 1; i-- > m;) path.emplace_back(i, k);
    }
  } else {
    for (ItemId i = l + 1; i-- > 0;) path.emplace_back(i, k);
    for (ItemId j = k + 1; j <= p; ++j) path.emplace_back(0, j);
    for (ItemId i = 1; i <= m; ++i) path.emplace_back(i, p);
  }
  if (reversed) std::reverse(path.begin(), path.end());
  return path;
}

TwoStructure reconstruct(const ImplicationSet& b, bool seed_present) {
  if (b.source_classes && *b.source_classes > 2)
    throw UnsupportedError("reconstruction is only defined for two-class structures");
  const auto g = build_pair_graph(b);
  TwoStructure::Builder builder(b.universe());
  if (g.n >= 2) {
    std::vector<std::vector<std::pair<std::size_t, bool>>> adj(g.vertices.size());
    for (const auto& e : g.edges) {
      adj[e.from].emplace_back(e.to, e.same);
      adj[e.to].emplace_back(e.from, e.same);
    }
    std::vector<int> status(g.vertices.size(), -1);
    status[0] = seed_present ? 1 : 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto [w, same] : adj[v]) {
        const int want = same ? status[v] : 1 - status[v];
        if (status[w] < 0) {
          status[w] = want;
          queue.push_back(w);
        } else if (status[w] != want) {
          throw InputError("not a modular implication set of any graph");
        }
      }
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (status[i] < 0) throw LogicError("pair graph is not connected");
      builder.set(g.vertices[i].first, g.vertices[i].second, static_cast<ClassId>(status[i]));
    }
  }
  auto result = std::move(builder).build();
  auto regenerated = generate_implications(result);
  if (!(regenerated == b)) throw InputError("not a modular implication set of any graph");
  return result;
}

bool verify_roundtrip(const TwoStructure& s) {
  if (s.max_class() > 1) return false;
  const auto b = generate_implications(s);
  try {
    auto present = reconstruct(b, true);
    auto absent = reconstruct(b, false);
    if (!(generate_implications(present) == b) || !(generate_implications(absent) == b))
      return false;
    return present == s || absent == s;
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace gaifman
