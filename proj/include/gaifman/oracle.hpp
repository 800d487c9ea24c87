#ifndef GAIFMAN_ORACLE_HPP
#define GAIFMAN_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gaifman/clan_tree.hpp"
#include "gaifman/core_model.hpp"

namespace gaifman {

/// Largest universe the exhaustive routines accept.
inline constexpr std::size_t kOracleGuard = 16;

/// True when no vertex outside `c` sees two members through different classes.
bool is_clan(const TwoStructure& s, const ItemSet& c);

/// Every nonempty clan, ordered by size then members. Throws GuardError
/// above `guard` vertices.
std::vector<ItemSet> all_clans(const TwoStructure& s, std::size_t guard = kOracleGuard);

/// Clans that overlap no other clan, including singletons and the universe.
std::vector<ItemSet> strong_clans(const TwoStructure& s, std::size_t guard = kOracleGuard);

/// Decomposition tree assembled top-down from the strong clans, with each
/// node typed by inspecting its quotient.
ClanTree brute_force_tree(const TwoStructure& s, std::size_t guard = kOracleGuard);

/// Structure with every pair drawn uniformly from classes [0, classes).
TwoStructure random_structure(std::mt19937_64& rng, std::size_t n, std::size_t classes);

/// Structure built by recursive substitution: vertices are split into
/// random groups joined by either one class or a random quotient, so the
/// decomposition tree tends to be deep.
TwoStructure random_composed_structure(std::mt19937_64& rng, std::size_t n,
                                       std::size_t classes);

/// Two-class random graph with edge probability `p`.
TwoStructure random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5);

}  // namespace gaifman

#endif  // GAIFMAN_ORACLE_HPP
