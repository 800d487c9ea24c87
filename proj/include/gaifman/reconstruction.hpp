#ifndef GAIFMAN_RECONSTRUCTION_HPP
#define GAIFMAN_RECONSTRUCTION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "gaifman/core_model.hpp"
#include "gaifman/implications.hpp"

namespace gaifman {

/// Unordered vertex pair (i, j) with i < j.
using VertexPair = std::pair<ItemId, ItemId>;

/// Auxiliary graph on all vertex pairs. An edge labelled `same` joins two
/// pairs that are both edges or both non-edges of the source graph.
struct PairGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    bool same;
  };

  std::size_t n = 0;
  /// Pairs in chain order: ab, ac, bc, ad, bd, cd, ...
  std::vector<VertexPair> vertices;
  std::vector<Edge> edges;

  /// Position of (i, j) in `vertices`; i < j < n.
  static std::size_t index(ItemId i, ItemId j) {
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }
  /// Label of the edge between two pair-vertices, or nullopt when absent.
  std::optional<bool> label(std::size_t a, std::size_t b) const;
};

/// Chain edges (v1 v_{j-1}, v1 v_j) and (v_{i-1} v_j, v_i v_j), each
/// labelled from the implication that witnesses it.
PairGraph build_pair_graph(const ImplicationSet& b);

/// Chain path between two pairs over n vertices, endpoints included.
/// Throws InputError for invalid or equal pairs.
std::vector<VertexPair> pair_path(VertexPair p1, VertexPair p2, std::size_t n);

/// Two-class structure whose modular implications are `b`, with the pair of
/// the first two items set to an edge when `seed_present`. Throws
/// UnsupportedError for multi-class sources and InputError when `b` is not
/// the implication set of any graph.
TwoStructure reconstruct(const ImplicationSet& b, bool seed_present);

/// Both reconstructions regenerate the implications of `s`, and one equals `s`.
/// False for structures with more than two classes.
bool verify_roundtrip(const TwoStructure& s);

}  // namespace gaifman

#endif  // GAIFMAN_RECONSTRUCTION_HPP
