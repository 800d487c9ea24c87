#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "gaifman/error.hpp"
#include "gaifman/oracle.hpp"

using namespace fixtures;

namespace {

std::vector<InsertCase> first_case_per_insert(const TwoStructure& s) {
  DecompositionTree t(s);
  std::vector<InsertCase> out;
  for (ItemId x = 0; x < s.size(); ++x) {
    auto before = t.case_log().size();
    t.insert(x);
    out.push_back(t.case_log()[before]);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form orders children and renumbers colours") {
  auto s = modules_graph();
  auto t = decompose(s).snapshot();
  CHECK(canon(t, s) == "C0{C1{a,b,c},d,e}");
  CHECK(canonical_form(t) == "C0{C1{0,1,2},3,4}");
  CHECK(canonical_form(t, {false, nullptr}) == "C{C{0,1,2},3,4}");
  CHECK(canonical_form(ClanTree::leaf(3)) == "3");
  auto c = complement(s);
  CHECK(canon(decompose(c).snapshot(), c) == canon(t, s));
}

TEST_CASE("tree accessors") {
  auto s = modules_graph();
  auto t = decompose(s).snapshot();
  CHECK(t.items() == std::vector<ItemId>{0, 1, 2, 3, 4});
  CHECK(t.min_item() == 0);
  CHECK(t.node_count() == 7);
  CHECK(t.internal_sets(5).size() == 2);
  CHECK(validate_tree(s, t) == std::nullopt);
}

TEST_CASE("validate_tree catches broken trees") {
  auto s = modules_graph();
  ClanTree wrong_colour = decompose(s).snapshot();
  wrong_colour.color = 0;
  CHECK(validate_tree(s, wrong_colour));
  ClanTree not_clan{NodeKind::complete, 1, 0, 0,
                    {ClanTree{NodeKind::complete, 0, 0, 0, {ClanTree::leaf(0), ClanTree::leaf(3)}},
                     ClanTree::leaf(1), ClanTree::leaf(2), ClanTree::leaf(4)}};
  CHECK(validate_tree(s, not_clan));
  ClanTree missing{NodeKind::complete, 1, 0, 0, {ClanTree::leaf(0), ClanTree::leaf(1)}};
  CHECK(validate_tree(s, missing));
}

TEST_CASE("group_others collapses leaves of disconnected nodes") {
  ClanTree t{NodeKind::complete, 0, 0, 0,
             {ClanTree{NodeKind::complete, 1, 0, 0, {ClanTree::leaf(0), ClanTree::leaf(1)}},
              ClanTree::leaf(2), ClanTree::leaf(3), ClanTree::leaf(4)}};
  auto g = group_others(t, 3);
  REQUIRE(g.children.size() == 2);
  CHECK(g.children.back().kind == NodeKind::others);
  CHECK(g.children.back().others_count == 3);
  CHECK(canonical_form(g) == "C0{C1{0,1},Others(3)}");
  CHECK(group_others(t, 4) == t);
  CHECK_THROWS_AS(group_others(t, 1), InputError);
}

TEST_CASE("P4 detection in quotients") {
  auto s = p4_chain_graph();
  auto t = decompose(s).snapshot();
  REQUIRE(t.kind == NodeKind::primitive);
  CHECK(quotient_has_induced_p4(s, t));
  auto f3 = modules_graph();
  CHECK_FALSE(quotient_has_induced_p4(f3, decompose(f3).snapshot()));
}

TEST_CASE("small structures") {
  auto one = structure(1, {});
  CHECK(canon(decompose(one).snapshot(), one) == "a");
  auto two = structure(2, {"ab"});
  CHECK(canon(decompose(two).snapshot(), two) == "C0{a,b}");
  auto edgeless = structure(4, {});
  CHECK(canon(decompose(edgeless).snapshot(), edgeless) == "C0{a,b,c,d}");
  DecompositionTree empty(one);
  CHECK_THROWS_AS(empty.snapshot(), LogicError);
}

TEST_CASE("insert rejects bad vertices") {
  auto s = modules_graph();
  DecompositionTree t(s);
  t.insert(0);
  CHECK_THROWS_AS(t.insert(0), InputError);
  CHECK_THROWS_AS(t.insert(9), InputError);
  CHECK(t.contains(0));
  CHECK_FALSE(t.contains(1));
  CHECK(t.inserted_count() == 1);
  CHECK_THROWS_AS(decompose(s, std::vector<ItemId>{0, 1}), InputError);
}

TEST_CASE("walkthrough exercises every case in order") {
  auto s = walkthrough();
  auto cases = first_case_per_insert(s);
  std::vector<std::string> tags;
  for (auto c : cases) tags.push_back(case_tag(c));
  CHECK(tags == std::vector<std::string>{"init0", "init1", "1b", "1d", "2a", "2c", "2b", "1a", "1c"});
  auto t = decompose(s).snapshot();
  CHECK(canon(t, s) == "C0{C1{P{a,b,c,d,e,f},g,h},i}");
  CHECK(validate_tree(s, t) == std::nullopt);
}

TEST_CASE("walkthrough intermediate trees") {
  auto s = walkthrough();
  DecompositionTree t(s);
  std::vector<std::string> expected{
      "a", "C0{a,b}", "C0{a,C1{b,c}}", "P{a,b,c,d}", "P{a,C0{b,e},c,d}",
      "P{a,b,c,d,e,f}", "C0{P{a,b,c,d,e,f},g}", "C0{P{a,b,c,d,e,f},g,h}",
      "C0{C1{P{a,b,c,d,e,f},g,h},i}"};
  for (ItemId x = 0; x < 9; ++x) {
    t.insert(x);
    CHECK(canon(t.snapshot(), s) == expected[x]);
  }
}

TEST_CASE("inserting into a primitive clan with four levels") {
  auto s = primitive_insertion();
  DecompositionTree t(s);
  for (ItemId x = 0; x < 13; ++x) t.insert(x);
  CHECK(canon(t.snapshot(), s) == "C0{a,C1{b,c,d,e},P{f,g,h,C0{i,j,k,l}},m}");
  t.insert(id('n'));
  auto tree = t.snapshot();
  CHECK(canon(tree, s) == "P{C0{a,m},C1{b,c},C1{d,e},f,g,h,C0{i,k},C0{j,l},n}");
  CHECK(root_children(tree, 14) ==
        family(14, {"am", "bc", "de", "f", "g", "h", "jl", "ik", "n"}));
}

TEST_CASE("complete clan split leaves one unlike child to absorb x") {
  // a | {b, c} joined by class 1, b-c class 0; x sees a and b by 1, c by 0
  auto s = structure(4, {"ab", "ac", "ad", "bd"});
  DecompositionTree t(s);
  for (ItemId v = 0; v < 3; ++v) t.insert(v);
  CHECK(canon(t.snapshot(), s) == "C0{a,C1{b,c}}");
  t.insert(id('d'));
  CHECK(canon(t.snapshot(), s) == "C0{a,C1{C0{b,d},c}}");
  std::vector<std::string> tags;
  for (auto c : t.case_log()) tags.push_back(case_tag(c));
  CHECK(tags == std::vector<std::string>{"init0", "init1", "1b", "init1", "1b", "1b", "init1"});
  CHECK(validate_tree(s, t.snapshot()) == std::nullopt);
}

TEST_CASE("visibility partition and split") {
  auto s = primitive_insertion();
  DecompositionTree t(s);
  for (ItemId x = 0; x < 13; ++x) t.insert(x);
  const auto root = *t.root();
  auto part = t.classify_visibility(id('n'), root);
  // a and m are seen by class 0, the root's colour is 1
  CHECK(part.color_visible.empty());
  CHECK(part.other_visible.size() == 2);
  CHECK(part.nonvisible.size() == 2);
  CHECK_THROWS_AS(t.split(part.other_visible.front().first, id('n')), LogicError);

  for (auto child : part.nonvisible) {
    if (t.node(child).kind != NodeKind::complete) continue;
    auto parts = t.split(child, id('n'));
    std::set<std::string> names;
    for (auto p : parts) names.insert(canon(t.snapshot(p), s));
    CHECK(names == std::set<std::string>{"C0{b,c}", "C0{d,e}"});
  }
}

TEST_CASE("pack registers uniform outside vertices only") {
  auto s = modules_graph();
  DecompositionTree t(s);
  t.insert(id('a'));
  t.insert(id('b'));
  auto clan = *t.root();
  auto d_rep = t.registry().find(id('d'), clan);
  REQUIRE(d_rep);
  CHECK(t.registry().class_of(*d_rep) == 1);
  CHECK(t.registry().find(id('c'), clan));

  auto s2 = structure(3, {"ac"});
  DecompositionTree u(s2);
  u.insert(0);
  u.insert(1);
  CHECK_FALSE(u.registry().find(2, *u.root()));
  CHECK(u.stats().packs >= 1);
}

TEST_CASE("randomised agreement with the oracle, shuffled orders") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const std::size_t k = 2 + trial % 3;
    auto s = trial % 2 ? random_structure(rng, n, k) : random_composed_structure(rng, n, k);
    auto want = canon(brute_force_tree(s), s);
    auto got = decompose(s, shuffled_order(n, static_cast<std::uint64_t>(trial))).snapshot();
    CHECK(canon(got, s) == want);
    CHECK(validate_tree(s, got) == std::nullopt);
  }
}

TEST_CASE("shuffled orders are permutations and reproducible") {
  auto a = shuffled_order(50, 9);
  auto b = shuffled_order(50, 9);
  CHECK(a == b);
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == alphabetical(50));
  CHECK(shuffled_order(50, 10) != a);
}
