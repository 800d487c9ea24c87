#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gaifman/cli_io.hpp"

using namespace gaifman;

namespace {

struct Options {
  std::string input;
  std::string kind = "graph";
  std::string variant = "standard";
  std::uint64_t threshold = 0;
  std::uint64_t interval = 0;
  std::uint64_t lower_threshold = 0;
  std::uint64_t min_count = 0;
  std::uint64_t top_items = 0;
  std::size_t others_min = 0;
  std::uint64_t order_seed = 0;
  std::string format = "dot";
  std::string out;
  bool seed_absent = false;
  std::size_t guard = 16;
  bool keep_empty = false;
};

void add_input(CLI::App* app, Options& o, bool dataset) {
  app->add_option("-i,--input", o.input, "Input file")->required();
  auto* kind = app->add_option("-k,--kind", o.kind, "relational | transactional | graph | implications")
                   ->capture_default_str();
  kind->check(CLI::IsMember({"relational", "transactional", "graph", "implications"}));
  app->add_option("-o,--out", o.out, "Output file (default: standard output)");
  if (!dataset) return;
  app->add_option("--variant", o.variant, "standard | threshold | linear | exp")
      ->check(CLI::IsMember({"standard", "threshold", "linear", "exp"}))
      ->capture_default_str();
  app->add_option("--threshold", o.threshold, "Co-occurrence cutoff for the threshold variant");
  app->add_option("--interval", o.interval, "Bucket width for the linear variant");
  app->add_option("--lower-threshold", o.lower_threshold, "Zero counts below this value first");
  auto* mc = app->add_option("--min-count", o.min_count, "Keep items occurring at least this often");
  auto* top = app->add_option("--top-items", o.top_items, "Keep the most frequent items (ties kept)");
  mc->excludes(top);
  app->add_flag("--keep-empty", o.keep_empty, "Turn empty relational cells into items");
}

RunConfig to_config(Command cmd, const Options& o, const CLI::App* app) {
  static const std::map<std::string, InputKind> kinds{
      {"relational", InputKind::relational},
      {"transactional", InputKind::transactional},
      {"graph", InputKind::graph},
      {"implications", InputKind::implications}};
  static const std::map<std::string, Variant> variants{{"standard", Variant::standard},
                                                       {"threshold", Variant::threshold},
                                                       {"linear", Variant::linear},
                                                       {"exp", Variant::exponential}};
  RunConfig c;
  c.command = cmd;
  c.input = o.input;
  c.kind = kinds.at(o.kind);
  c.variant = variants.at(o.variant);
  c.threshold = o.threshold;
  c.interval = o.interval;
  c.keep_empty_cells = o.keep_empty;
  c.out = o.out;
  c.seed_present = !o.seed_absent;
  c.guard = o.guard;
  c.format = o.format == "canonical" ? TreeFormat::canonical : TreeFormat::dot;
  auto given = [&](const char* name) {
    auto* opt = app->get_option_no_throw(name);
    return opt && opt->count() > 0;
  };
  if (given("--lower-threshold")) c.lower_threshold = o.lower_threshold;
  if (given("--min-count")) c.filter = ItemFilter::min_count(o.min_count);
  if (given("--top-items")) c.filter = ItemFilter::top_n(o.top_items);
  if (given("--others-min")) c.others_min = o.others_min;
  if (given("--order-seed")) c.order_seed = o.order_seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clan decomposition of Gaifman graphs and 2-structures"};
  app.require_subcommand(1);
  Options o;

  auto* dec = app.add_subcommand("decompose", "Build the strong-clan decomposition tree");
  add_input(dec, o, true);
  dec->add_option("--others-min", o.others_min, "Collapse this many disconnected leaves into Others");
  dec->add_option("--order-seed", o.order_seed, "Shuffle the insertion order with this seed");
  dec->add_option("--format", o.format, "dot | canonical")
      ->check(CLI::IsMember({"dot", "canonical"}))
      ->capture_default_str();

  auto* imp = app.add_subcommand("implications", "Write the clan implications");
  add_input(imp, o, true);

  auto* clo = app.add_subcommand("closures", "Enumerate the closed-set lattice");
  add_input(clo, o, true);
  clo->add_option("--guard", o.guard, "Largest universe to enumerate")->capture_default_str();

  auto* rec = app.add_subcommand("reconstruct", "Rebuild a graph from modular implications");
  add_input(rec, o, false);
  rec->add_flag("--seed-absent{true},--seed-present{false}", o.seed_absent,
                "Status of the first pair (default: present)");

  auto* chk = app.add_subcommand("oracle-check", "Compare against the brute-force oracle");
  add_input(chk, o, true);
  chk->add_option("--order-seed", o.order_seed, "Shuffle the insertion order with this seed");
  chk->add_option("--guard", o.guard, "Largest universe to search")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const std::map<CLI::App*, Command> commands{{dec, Command::decompose},
                                              {imp, Command::implications},
                                              {clo, Command::closures},
                                              {rec, Command::reconstruct},
                                              {chk, Command::oracle_check}};
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) return run(to_config(cmd, o, sub), std::cout, std::cerr);
  return kExitInput;
}
