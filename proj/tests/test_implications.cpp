#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gaifman/cli_io.hpp"
#include "gaifman/error.hpp"
#include "gaifman/oracle.hpp"

using namespace fixtures;

namespace {

ImplicationSet implications_of(const TwoStructure& s) { return generate_implications(s); }

std::vector<ItemSet> closed_sets(const ClosureLattice& l) {
  auto out = l.closed;
  std::sort(out.begin(), out.end());
  return out;
}

ClanType type_of(const ClosureLattice& l, std::size_t n, std::string_view items) {
  return infer_clan_type(l, set(n, items));
}

}  // namespace

TEST_CASE("distinguishing sets") {
  auto s = modules_graph();
  CHECK(distinguishing_set(s, id('a'), id('d')) == set(5, "bc"));
  CHECK(distinguishing_set(s, id('a'), id('b')).empty());
  CHECK(distinguishing_set(three_class_structure(), id('c'), id('d')) == set(5, "abe"));
  CHECK_THROWS_AS(distinguishing_set(s, 1, 1), InputError);
}

TEST_CASE("modular implications of the five-vertex graph") {
  auto b = implications_of(modules_graph());
  CHECK(write_implications(b) ==
        "items: a b c d e\n"
        "a d -> b c\na e -> b c\nb d -> a c\nb e -> a c\nc d -> a b\nc e -> a b\n");
  CHECK(b.source_classes == std::size_t{2});
  CHECK(implications_of(structure(4, {"ab", "ac", "ad", "bc", "bd", "cd"})).empty());
}

TEST_CASE("clan implications of the three-class structure") {
  auto s = three_class_structure();
  auto b = implications_of(s);
  CHECK(b.size() == 9);
  CHECK(b.find(id('c'), id('e')) == set(5, "abd"));
  CHECK(b.find(id('c'), id('d')) == set(5, "abe"));
  CHECK_FALSE(b.find(id('d'), id('e')));
  CHECK(b.source_classes == std::size_t{3});
}

TEST_CASE("implication set invariants") {
  ImplicationSet b(letters(3));
  CHECK_THROWS_AS(b.add(0, 0, set(3, "b")), InputError);
  CHECK_THROWS_AS(b.add(0, 1, ItemSet(3)), InputError);
  CHECK_THROWS_AS(b.add(0, 1, set(3, "ac")), InputError);
  b.add(1, 0, set(3, "c"));
  CHECK(b.find(0, 1) == set(3, "c"));
  b.add(0, 1, set(3, "c"));
  CHECK(b.size() == 1);
  CHECK_THROWS_AS(b.add(0, 2, ItemSet(3, {5})), InputError);
}

TEST_CASE("closure fixpoint") {
  auto b = implications_of(modules_graph());
  CHECK(closure(b, set(5, "de")) == set(5, "de"));
  CHECK(closure(b, ItemSet(5)) == ItemSet(5));
  CHECK(closure(b, set(5, "a")) == set(5, "a"));
  CHECK(closure(b, set(5, "ad")) == set(5, "abcd"));
  CHECK(closure(b, set(5, "ade")) == set(5, "abcde"));
}

TEST_CASE("closure axioms on random structures") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 6;
    auto s = random_structure(rng, n, 2 + trial % 3);
    auto b = implications_of(s);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    auto x = ItemSet::from_mask(n, pick(rng));
    auto y = x | ItemSet::from_mask(n, pick(rng));
    auto cx = closure(b, x);
    CHECK(x.is_subset_of(cx));
    CHECK(closure(b, cx) == cx);
    CHECK(cx.is_subset_of(closure(b, y)));
  }
}

TEST_CASE("closed sets of the five-vertex graph") {
  auto l = enumerate_closed_sets(implications_of(modules_graph()));
  std::vector<ItemSet> middle;
  for (const auto& c : l.closed)
    if (c.size() >= 2 && c.size() < 5) middle.push_back(c);
  std::sort(middle.begin(), middle.end());
  CHECK(middle == family(5, {"ab", "ac", "bc", "de", "abc", "abcd", "abce"}));
  CHECK(strong_closed_sets(l) == family(5, {"a", "b", "c", "d", "e", "abc", "abcde"}));
  CHECK(l.closed.front().empty());
  CHECK(l.closed.size() == 14);
}

TEST_CASE("empty implication set closes every subset") {
  ImplicationSet b(letters(2));
  auto l = enumerate_closed_sets(b);
  CHECK(l.closed.size() == 4);
  CHECK(strong_closed_sets(l) == family(2, {"a", "b", "ab"}));
  CHECK(lattice_to_tree(l).kind == NodeKind::complete);
}

TEST_CASE("lattice invariants") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 6;
    auto l = enumerate_closed_sets(implications_of(random_structure(rng, n, 2 + trial % 3)));
    CHECK(l.index_of(ItemSet::full(n)));
    for (ItemId x = 0; x < n; ++x) CHECK(l.index_of(ItemSet(n, {x})));
    for (const auto& a : l.closed)
      for (const auto& c : l.closed) CHECK(l.index_of(a & c));
    for (std::size_t i = 0; i < l.closed.size(); ++i)
      for (auto k : l.hasse[i]) {
        CHECK(l.closed[k].is_subset_of(l.closed[i]));
        CHECK(l.closed[k] != l.closed[i]);
      }
  }
}

TEST_CASE("guard refuses large universes") {
  auto s = structure(17, {"ab"});
  CHECK_THROWS_AS(enumerate_closed_sets(implications_of(s)), GuardError);
  CHECK_NOTHROW(enumerate_closed_sets(implications_of(structure(6, {"ab"})), 6));
  CHECK_THROWS_AS(enumerate_closed_sets(implications_of(structure(6, {"ab"})), 5), GuardError);
}

TEST_CASE("type inference from the lattice, seven vertices") {
  auto l = enumerate_closed_sets(implications_of(p4_chain_graph()));
  CHECK(l.strong[*l.index_of(set(7, "abcd"))]);
  CHECK(type_of(l, 7, "abcdefg") == ClanType::primitive);
  CHECK(type_of(l, 7, "abcd") == ClanType::primitive);
  CHECK(l.hasse[*l.index_of(set(7, "abcdefg"))].size() == 4);
  CHECK_THROWS_AS(type_of(l, 7, "ab"), InputError);
}

TEST_CASE("type inference from the lattice, five vertices") {
  auto l = enumerate_closed_sets(implications_of(nested_complete_graph()));
  CHECK(l.index_of(set(5, "ab")));
  CHECK(l.index_of(set(5, "ce")));
  CHECK(type_of(l, 5, "abcde") == ClanType::complete);
  CHECK(type_of(l, 5, "abce") == ClanType::complete);
  CHECK(type_of(l, 5, "ab") == ClanType::complete);
  CHECK(l.hasse[*l.index_of(set(5, "abcde"))].size() == 2);
  CHECK(l.hasse[*l.index_of(set(5, "abce"))].size() == 3);
  CHECK_THROWS_AS(type_of(l, 5, "a"), InputError);
}

TEST_CASE("child-count bound depends on the number of classes") {
  CHECK(primitive_child_bound(std::size_t{2}) == 3);
  CHECK(primitive_child_bound(std::size_t{1}) == 3);
  CHECK(primitive_child_bound(std::size_t{3}) == 2);
  CHECK(primitive_child_bound(std::nullopt) == 2);
  // three-vertex primitive quotient needs three classes
  auto tri = structure(3, {"ab:0", "ac:1", "bc:2"});
  auto l = enumerate_closed_sets(implications_of(tri));
  CHECK(infer_clan_type(l, ItemSet::full(3)) == ClanType::primitive);
}

TEST_CASE("lattice skeletons match decomposition trees") {
  auto s3 = modules_graph();
  CHECK(canonical_form(lattice_to_tree(enumerate_closed_sets(implications_of(s3))),
                       {false, &s3.universe()}) == "C{C{a,b,c},d,e}");
  auto s13 = three_class_structure();
  CHECK(canonical_form(lattice_to_tree(enumerate_closed_sets(implications_of(s13))),
                       {false, &s13.universe()}) == "C{P{a,b,c},C{d,e}}");
  auto one = structure(1, {});
  CHECK(lattice_to_tree(enumerate_closed_sets(implications_of(one))) == ClanTree::leaf(0));
}
