#ifndef GAIFMAN_CLI_IO_HPP
#define GAIFMAN_CLI_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaifman/clan_tree.hpp"
#include "gaifman/core_model.hpp"
#include "gaifman/gaifman_builder.hpp"
#include "gaifman/implications.hpp"

namespace gaifman {

/// Comma-separated table with a header line; double quotes escape commas
/// and doubled quotes. Blank lines are skipped.
Table parse_csv(std::string_view text);

/// One transaction per line, tokens separated by whitespace or commas.
std::vector<std::vector<std::string>> parse_transactions(std::string_view text);

/// "n <count>", an optional "labels <l0> <l1> ..." line, then "u v <class>"
/// lines over vertex indices. Unlisted pairs are class 0; '#' starts a comment.
TwoStructure parse_graph_file(std::string_view text);
std::string write_graph_file(const TwoStructure& s);

/// "x y -> z1 z2 ..." per line, an optional leading "items: ..." line fixing
/// the universe order; '#' starts a comment.
ImplicationSet parse_implications(std::string_view text);
std::string write_implications(const ImplicationSet& b);

/// "{a,b}" style rendering of an item set.
std::string format_set(const ItemSet& s, const Universe& u);

/// Every closed set on its own line with its immediate subsets indented
/// beneath; strong sets carry a trailing "*".
std::string lattice_report(const ClosureLattice& l, const Universe& u);

/// Graphviz text: each internal node is a point linked to a cluster holding
/// its quotient, with quotient edges styled per class and class 0 omitted.
std::string render_dot(const ClanTree& tree, const TwoStructure& s);

/// Label escaped for a DOT string, truncated to 64 characters.
std::string dot_label(std::string_view label);

enum class Command { decompose, implications, closures, reconstruct, oracle_check };
enum class InputKind { relational, transactional, graph, implications };
enum class Variant { standard, threshold, linear, exponential };
enum class TreeFormat { dot, canonical };

struct RunConfig {
  Command command = Command::decompose;
  std::string input;
  InputKind kind = InputKind::graph;
  Variant variant = Variant::standard;
  std::uint64_t threshold = 0;
  std::uint64_t interval = 0;
  std::optional<std::uint64_t> lower_threshold;
  std::optional<ItemFilter> filter;
  bool keep_empty_cells = false;
  std::optional<std::size_t> others_min;
  std::optional<std::uint64_t> order_seed;
  TreeFormat format = TreeFormat::dot;
  std::string out;  // empty: standard output
  bool seed_present = true;
  std::size_t guard = 16;

  /// Throws InputError for inconsistent settings.
  void validate() const;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitMismatch = 3;

/// Loads a structure from a relational, transactional or graph input.
TwoStructure load_structure(const RunConfig& config, std::string_view text,
                            std::ostream& err);

/// Executes one command; artifacts go to config.out or `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gaifman

#endif  // GAIFMAN_CLI_IO_HPP
