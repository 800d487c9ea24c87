#ifndef GAIFMAN_TESTS_FIXTURES_HPP
#define GAIFMAN_TESTS_FIXTURES_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaifman/clan_decomposition.hpp"
#include "gaifman/clan_tree.hpp"
#include "gaifman/core_model.hpp"
#include "gaifman/implications.hpp"

namespace fixtures {

using namespace gaifman;

#ifndef GAIFMAN_DATA_DIR
#define GAIFMAN_DATA_DIR "data"
#endif

inline std::string data_path(const std::string& name) {
  return std::string(GAIFMAN_DATA_DIR) + "/" + name;
}

/// Universe with single-letter labels a, b, c, ...
inline Universe letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe::from_labels(labels);
}

inline ItemId id(char c) { return static_cast<ItemId>(c - 'a'); }

/// Item set from a string of letters, e.g. set(5, "abc").
inline ItemSet set(std::size_t n, std::string_view items) {
  ItemSet s(n);
  for (char c : items) s.insert(id(c));
  return s;
}

/// Structure over letters; each entry is "xy" for class 1 or "xy:k".
inline TwoStructure structure(std::size_t n, const std::vector<std::string>& pairs) {
  TwoStructure::Builder b(letters(n));
  for (const auto& p : pairs) {
    ClassId c = p.size() > 3 ? static_cast<ClassId>(std::stoul(p.substr(3))) : 1;
    b.set(id(p[0]), id(p[1]), c);
  }
  return std::move(b).build();
}

inline std::string canon(const ClanTree& t, const TwoStructure& s) {
  return canonical_form(t, {true, &s.universe()});
}

inline std::vector<ItemSet> family(std::size_t n, const std::vector<std::string>& sets) {
  std::vector<ItemSet> out;
  for (const auto& s : sets) out.push_back(set(n, s));
  std::sort(out.begin(), out.end());
  return out;
}

// Graph whose tree is a complete root over {a,b,c} (disconnected), d, e.
inline TwoStructure modules_graph() {
  return structure(5, {"ad", "ae", "bd", "be", "cd", "ce", "de"});
}

// Graph rebuilt from the ten implications of the reconstruction example.
inline TwoStructure reconstruction_graph() {
  return structure(5, {"ab", "ac", "ad", "cd", "ce"});
}

inline const char* reconstruction_implications() {
  return "a b -> c d\n"
         "a c -> b e\n"
         "a d -> b\n"
         "a e -> b d\n"
         "b c -> d e\n"
         "b d -> c\n"
         "b e -> a c\n"
         "c d -> e\n"
         "c e -> a d\n"
         "d e -> a\n";
}

// Seven vertices: P4 a-b-c-d joined to e, then e-f-g.
inline TwoStructure p4_chain_graph() {
  return structure(7, {"ab", "ae", "bc", "be", "cd", "ce", "de", "ef", "fg"});
}

inline TwoStructure nested_complete_graph() {
  return structure(5, {"ac", "ae", "bc", "be", "ce"});
}

// Three classes: ab=0, ac=1, bc=2, de=1, everything else 0.
inline TwoStructure three_class_structure() {
  return structure(5, {"ab:0", "ac:1", "bc:2", "de:1"});
}

// Nine vertices inserted a..i in order, walking through every case.
inline TwoStructure walkthrough() {
  std::vector<std::string> pairs{"ab", "ac", "bc:0", "ad:0", "bd", "cd:0",
                                 "ae", "be:0", "ce:0", "de", "bf", "cf"};
  for (char v = 'a'; v <= 'f'; ++v) pairs.push_back(std::string{v, 'g'});
  for (char v = 'a'; v <= 'g'; ++v) pairs.push_back(std::string{v, 'h'});
  return structure(9, pairs);
}

// Fourteen vertices a..n; the tree over a..m before n arrives is
// C1{a, m, C0{b,c,d,e}, P{f, g, h, C1{i,j,k,l}}} and n sees only b,c,h,j,l.
inline TwoStructure primitive_insertion() {
  std::vector<std::string> pairs;
  const std::string top = "abcdefghijklm";
  auto group = [](char c) -> int {
    if (c == 'a') return 0;
    if (c == 'm') return 1;
    if (c >= 'b' && c <= 'e') return 2;
    return 3;
  };
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j)
      if (group(top[i]) != group(top[j])) pairs.push_back(std::string{top[i], top[j]});
  // F = P4 f - g - h - X, X = clique on i j k l
  pairs.insert(pairs.end(), {"fg", "gh", "hi", "hj", "hk", "hl", "ij", "ik", "il", "jk", "jl", "kl"});
  for (char c : std::string("bchjl")) pairs.push_back(std::string{c, 'n'});
  return structure(14, pairs);
}

inline std::vector<ItemId> alphabetical(std::size_t n) {
  std::vector<ItemId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<ItemId>(i);
  return order;
}

/// Child item sets of the root, sorted.
inline std::vector<ItemSet> root_children(const ClanTree& t, std::size_t n) {
  std::vector<ItemSet> out;
  for (const auto& c : t.children) out.push_back(c.item_set(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures

#endif  // GAIFMAN_TESTS_FIXTURES_HPP
