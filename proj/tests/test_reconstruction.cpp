#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gaifman/cli_io.hpp"
#include "gaifman/error.hpp"
#include "gaifman/oracle.hpp"
#include "gaifman/reconstruction.hpp"

using namespace fixtures;

namespace {

ImplicationSet reconstruction_set() { return parse_implications(reconstruction_implications()); }

std::size_t pair_index(const PairGraph& g, std::string_view p) {
  return PairGraph::index(id(p[0]), id(p[1]));
}

}  // namespace

TEST_CASE("the ten listed implications are those of the example graph") {
  CHECK(generate_implications(reconstruction_graph()) == reconstruction_set());
}

TEST_CASE("pair graph vertices follow the chain order") {
  auto g = build_pair_graph(reconstruction_set());
  std::vector<std::string> names;
  for (auto [i, j] : g.vertices) names.push_back(std::string{char('a' + i), char('a' + j)});
  CHECK(names == std::vector<std::string>{"ab", "ac", "bc", "ad", "bd", "cd", "ae", "be", "ce", "de"});
  CHECK(g.edges.size() == 9);
  CHECK(g.label(pair_index(g, "ab"), pair_index(g, "ac")) == true);
  CHECK(g.label(pair_index(g, "ac"), pair_index(g, "bc")) == false);
  CHECK_FALSE(g.label(pair_index(g, "ab"), pair_index(g, "de")));
}

TEST_CASE("pair graph of two items") {
  ImplicationSet b(letters(2));
  auto g = build_pair_graph(b);
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("pair paths") {
  auto p = pair_path({0, 2}, {1, 2}, 4);
  CHECK(p == std::vector<VertexPair>{{0, 2}, {1, 2}});
  auto q = pair_path({1, 2}, {0, 3}, 4);
  CHECK(q.size() == 3);
  CHECK(q == std::vector<VertexPair>{{1, 2}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(pair_path({1, 2}, {1, 2}, 4), InputError);
  CHECK_THROWS_AS(pair_path({2, 1}, {1, 3}, 4), InputError);
  CHECK_THROWS_AS(pair_path({0, 1}, {1, 4}, 4), InputError);
}

TEST_CASE("pair paths follow chain edges with the closed-form length") {
  const std::size_t n = 7;
  ImplicationSet b(Universe::numbered(n));
  auto g = build_pair_graph(b);
  for (const auto& p1 : g.vertices)
    for (const auto& p2 : g.vertices) {
      if (p1 == p2) continue;
      auto path = pair_path(p1, p2, n);
      CHECK(path.front() == p1);
      CHECK(path.back() == p2);
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        CHECK(g.label(PairGraph::index(path[i].first, path[i].second),
                      PairGraph::index(path[i + 1].first, path[i + 1].second)));
      const auto [l, k] = p1;
      const auto [m, pp] = p2;
      const std::size_t expect =
          k == pp ? (l > m ? l - m : m - l) : std::size_t{l} + m + (k > pp ? k - pp : pp - k);
      CHECK(path.size() - 1 == expect);
    }
}

TEST_CASE("reconstruction from the ten implications") {
  auto b = reconstruction_set();
  auto present = reconstruct(b, true);
  auto absent = reconstruct(b, false);
  CHECK(present == reconstruction_graph());
  CHECK(absent == complement(reconstruction_graph()));
  CHECK(generate_implications(present) == b);
  CHECK(generate_implications(absent) == b);
}

TEST_CASE("edgeless and complete graphs") {
  ImplicationSet empty(letters(3));
  CHECK(reconstruct(empty, false) == structure(3, {}));
  CHECK(reconstruct(empty, true) == structure(3, {"ab", "ac", "bc"}));
  CHECK(verify_roundtrip(structure(4, {})));
  CHECK(verify_roundtrip(structure(3, {"ab", "ac", "bc"})));
}

TEST_CASE("reconstruction rejects sets no graph produces") {
  ImplicationSet b(letters(3));
  b.add(0, 1, set(3, "c"));
  CHECK_THROWS_AS(reconstruct(b, true), InputError);
  auto multi = generate_implications(three_class_structure());
  CHECK_THROWS_AS(reconstruct(multi, true), UnsupportedError);
  CHECK_FALSE(verify_roundtrip(three_class_structure()));
}

TEST_CASE("random round trips and complementarity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 9;
    auto s = random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
    CHECK(verify_roundtrip(s));
    auto b = generate_implications(s);
    CHECK(reconstruct(b, true) == complement(reconstruct(b, false)));
  }
}

TEST_CASE("reconstruction is order independent up to complement") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 6;
    auto s = random_graph(rng, n);
    auto order = shuffled_order(n, static_cast<std::uint64_t>(trial));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(order[i]);
    TwoStructure::Builder relabelled(Universe::from_labels(labels));
    for (ItemId x = 0; x < n; ++x)
      for (ItemId y = x + 1; y < n; ++y)
        relabelled.set(x, y, s.edge_class(order[x], order[y]));
    auto r = reconstruct(generate_implications(std::move(relabelled).build()), true);
    bool same = true, comp = true;
    for (ItemId x = 0; x < n; ++x)
      for (ItemId y = x + 1; y < n; ++y) {
        same = same && r.edge_class(x, y) == s.edge_class(order[x], order[y]);
        comp = comp && r.edge_class(x, y) != s.edge_class(order[x], order[y]);
      }
    CHECK((same || comp));
  }
}
