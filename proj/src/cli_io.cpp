#include "gaifman/cli_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "gaifman/clan_decomposition.hpp"
#include "gaifman/error.hpp"
#include "gaifman/oracle.hpp"
#include "gaifman/reconstruction.hpp"

namespace gaifman {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> tokens(std::string_view line, std::string_view seps = " \t") {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && seps.find(line[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < line.size() && seps.find(line[j]) == std::string_view::npos) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_blank_or_comment(std::string_view line) {
  auto p = line.find_first_not_of(" \t");
  return p == std::string_view::npos || line[p] == '#';
}

std::uint64_t parse_number(const std::string& tok, std::size_t lineno) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("line " + std::to_string(lineno) + ": expected a number, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw InputError("line " + std::to_string(lineno) + ": number out of range '" + tok + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_has_content = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content || row.size() > 1) records.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      row_has_content = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
      row_has_content = true;
    }
  }
  if (quoted) throw InputError("unterminated quoted field in CSV input");
  if (!field.empty() || !row.empty()) end_row();
  if (records.empty()) throw InputError("CSV input has no header");
  Table t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1),
                std::make_move_iterator(records.end()));
  return t;
}

std::vector<std::vector<std::string>> parse_transactions(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (auto line : split_lines(text)) {
    if (is_blank_or_comment(line)) continue;
    out.push_back(tokens(line, " \t,"));
  }
  return out;
}

TwoStructure parse_graph_file(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<std::size_t> n;
  std::optional<TwoStructure::Builder> builder;
  std::map<std::pair<ItemId, ItemId>, ClassId> seen;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto lineno = k + 1;
    if (is_blank_or_comment(lines[k])) continue;
    auto tok = tokens(lines[k]);
    if (!n) {
      if (tok.size() != 2 || tok[0] != "n")
        throw InputError("line " + std::to_string(lineno) + ": expected 'n <count>'");
      n = parse_number(tok[1], lineno);
      builder.emplace(Universe::numbered(*n));
      continue;
    }
    if (tok.front() == "labels") {
      if (!seen.empty()) throw InputError("line " + std::to_string(lineno) + ": labels must precede pairs");
      if (tok.size() != *n + 1)
        throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(*n) + " labels");
      builder.emplace(Universe::from_labels({tok.begin() + 1, tok.end()}));
      continue;
    }
    if (tok.size() != 3)
      throw InputError("line " + std::to_string(lineno) + ": expected 'u v <class>'");
    auto u = parse_number(tok[0], lineno);
    auto v = parse_number(tok[1], lineno);
    auto c = parse_number(tok[2], lineno);
    if (u >= *n || v >= *n)
      throw InputError("line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v) throw InputError("line " + std::to_string(lineno) + ": self-pair");
    std::pair<ItemId, ItemId> key{static_cast<ItemId>(std::min(u, v)),
                                  static_cast<ItemId>(std::max(u, v))};
    auto [it, fresh] = seen.emplace(key, static_cast<ClassId>(c));
    if (!fresh && it->second != c)
      throw InputError("line " + std::to_string(lineno) + ": conflicting class for pair " +
                       tok[0] + " " + tok[1]);
    builder->set(key.first, key.second, static_cast<ClassId>(c));
  }
  if (!n) throw InputError("graph file has no 'n <count>' line");
  return std::move(*builder).build();
}

std::string write_graph_file(const TwoStructure& s) {
  std::ostringstream out;
  out << "n " << s.size() << "\n";
  if (!(s.universe() == Universe::numbered(s.size()))) {
    out << "labels";
    for (ItemId x = 0; x < s.size(); ++x) {
      const auto& l = s.label(x);
      if (l.find_first_of(" \t\n") != std::string::npos)
        throw InputError("label '" + l + "' contains whitespace");
      out << " " << l;
    }
    out << "\n";
  }
  for (ItemId x = 0; x < s.size(); ++x)
    for (ItemId y = x + 1; y < s.size(); ++y)
      if (auto c = s.edge_class(x, y); c != 0) out << x << " " << y << " " << c << "\n";
  return out.str();
}

ImplicationSet parse_implications(std::string_view text) {
  struct Raw {
    std::string x, y;
    std::vector<std::string> z;
    std::size_t lineno;
  };
  Universe u;
  std::vector<Raw> raw;
  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto lineno = k + 1;
    if (is_blank_or_comment(lines[k])) continue;
    auto tok = tokens(lines[k]);
    if (tok.front() == "items:") {
      if (!raw.empty() || u.size() != 0)
        throw InputError("line " + std::to_string(lineno) + ": 'items:' must come first");
      for (std::size_t i = 1; i < tok.size(); ++i) u.add(tok[i]);
      continue;
    }
    auto arrow = std::find_if(tok.begin(), tok.end(),
                              [](const std::string& t) { return t == "->" || t == "=>"; });
    if (arrow == tok.end())
      throw InputError("line " + std::to_string(lineno) + ": missing '->'");
    if (arrow - tok.begin() != 2)
      throw InputError("line " + std::to_string(lineno) + ": antecedent must be a pair");
    Raw r{tok[0], tok[1], {arrow + 1, tok.end()}, lineno};
    if (r.z.empty())
      throw InputError("line " + std::to_string(lineno) + ": empty consequent");
    raw.push_back(std::move(r));
  }
  for (const auto& r : raw) {
    u.intern(r.x);
    u.intern(r.y);
    for (const auto& z : r.z) u.intern(z);
  }
  ImplicationSet b(u);
  for (const auto& r : raw) {
    ItemSet z(u.size());
    for (const auto& t : r.z) z.insert(*u.find(t));
    try {
      b.add(*u.find(r.x), *u.find(r.y), z);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(r.lineno) + ": " + e.what());
    }
  }
  return b;
}

std::string write_implications(const ImplicationSet& b) {
  std::ostringstream out;
  const auto& u = b.universe();
  out << "items:";
  for (ItemId x = 0; x < u.size(); ++x) out << " " << u.label(x);
  out << "\n";
  for (const auto& imp : b.list()) {
    out << u.label(imp.x) << " " << u.label(imp.y) << " ->";
    for (auto z : imp.consequent.items()) out << " " << u.label(z);
    out << "\n";
  }
  return out.str();
}

std::string format_set(const ItemSet& s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.items()) {
    if (!first) out += ",";
    out += u.label(x);
    first = false;
  }
  return out + "}";
}

std::string lattice_report(const ClosureLattice& l, const Universe& u) {
  std::vector<std::size_t> order(l.closed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return l.closed[a].size() > l.closed[b].size();
  });
  auto line = [&](std::size_t i) {
    return format_set(l.closed[i], u) + (l.strong[i] ? " *" : "");
  };
  std::ostringstream out;
  out << "# " << l.closed.size() << " closed sets; * marks strong closures\n";
  for (auto i : order) {
    out << line(i) << "\n";
    for (auto c : l.hasse[i]) out << "  " << line(c) << "\n";
  }
  return out.str();
}

// --------------------------------------------------------------------- DOT

namespace {

constexpr std::size_t kMaxLabel = 64;

std::uint32_t fnv1a(std::string_view s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string edge_style(ClassId c) {
  switch (c) {
    case 1: return "style=solid";
    case 2: return "style=dashed";
    case 3: return "style=dotted";
    case 4: return "style=bold";
    default: return "style=solid, label=\"" + std::to_string(c) + "\"";
  }
}

ItemId first_leaf(const ClanTree& t) {
  const ClanTree* cur = &t;
  while (cur->kind != NodeKind::leaf) {
    if (cur->kind == NodeKind::others || cur->children.empty())
      throw InputError("subtree has no leaf to stand for it");
    cur = &cur->children.front();
  }
  return cur->item;
}

struct DotWriter {
  const TwoStructure& s;
  std::vector<std::string> labels;
  std::ostringstream out;
  std::size_t next = 0;

  std::string write(const ClanTree& t) {
    const auto id = next++;
    const std::string dot = "n" + std::to_string(id);
    out << "  " << dot << " [shape=point, width=0.12];\n";

    std::vector<std::string> members;
    std::vector<const ClanTree*> kids;
    for (const auto& c : t.children) kids.push_back(&c);
    std::stable_sort(kids.begin(), kids.end(), [](const ClanTree* a, const ClanTree* b) {
      auto key = [](const ClanTree* x) {
        return x->kind == NodeKind::others ? static_cast<ItemId>(-1) : x->min_item();
      };
      return key(a) < key(b);
    });

    std::vector<std::string> deferred;
    out << "  subgraph cluster_" << id << " {\n";
    out << "    label=\"" << (t.kind == NodeKind::complete ? "complete" : "primitive");
    if (t.kind == NodeKind::complete && t.color) out << " " << *t.color;
    out << "\";\n";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto q = "q" + std::to_string(id) + "_" + std::to_string(i);
      members.push_back(q);
      const auto& k = *kids[i];
      if (k.kind == NodeKind::leaf) {
        out << "    " << q << " [shape=ellipse, label=\"" << labels[k.item] << "\"];\n";
      } else if (k.kind == NodeKind::others) {
        out << "    " << q << " [shape=box, style=dashed, label=\"Others(" << k.others_count
            << ")\"];\n";
      } else {
        out << "    " << q << " [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.15];\n";
      }
    }
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (kids[i]->kind == NodeKind::others || kids[j]->kind == NodeKind::others) continue;
        const auto c = s.edge_class(first_leaf(*kids[i]), first_leaf(*kids[j]));
        if (c == 0) continue;
        out << "    " << members[i] << " -> " << members[j] << " [dir=none, " << edge_style(c)
            << "];\n";
      }
    out << "  }\n";
    out << "  " << dot << " -> " << members.front() << " [lhead=cluster_" << id
        << ", arrowhead=none];\n";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (!kids[i]->is_internal()) continue;
      auto child = write(*kids[i]);
      out << "  " << members[i] << " -> " << child << " [style=dotted, arrowhead=none];\n";
    }
    return dot;
  }
};

}  // namespace

std::string dot_label(std::string_view label) {
  return escape(label.substr(0, kMaxLabel));
}

std::string render_dot(const ClanTree& tree, const TwoStructure& s) {
  DotWriter w{s, {}, {}, 0};
  std::map<std::string, std::size_t> uses;
  for (ItemId x = 0; x < s.size(); ++x) {
    w.labels.push_back(std::string(std::string_view(s.label(x)).substr(0, kMaxLabel)));
    ++uses[w.labels.back()];
  }
  for (ItemId x = 0; x < s.size(); ++x) {
    if (uses[w.labels[x]] > 1) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "~%08x", fnv1a(s.label(x)));
      w.labels[x] += buf;
    }
    w.labels[x] = escape(w.labels[x]);
  }

  w.out << "digraph clan_tree {\n  compound=true;\n  node [fontname=\"Helvetica\"];\n";
  if (tree.kind == NodeKind::leaf) {
    w.out << "  n0 [shape=ellipse, label=\"" << w.labels[tree.item] << "\"];\n";
  } else if (tree.kind == NodeKind::others) {
    w.out << "  n0 [shape=box, style=dashed, label=\"Others(" << tree.others_count << ")\"];\n";
  } else {
    w.write(tree);
  }
  w.out << "}\n";
  return w.out.str();
}

// --------------------------------------------------------------------- run

void RunConfig::validate() const {
  if (input.empty()) throw InputError("an input file is required");
  if (variant == Variant::threshold && threshold == 0)
    throw InputError("the threshold variant needs --threshold >= 1");
  if (variant == Variant::linear && interval == 0)
    throw InputError("the linear variant needs --interval >= 1");
  if (lower_threshold && *lower_threshold == 0)
    throw InputError("--lower-threshold must be at least 1");
  if (others_min && *others_min < 2) throw InputError("--others-min must be at least 2");
  if (filter && filter->value == 0) throw InputError("item filter value must be at least 1");
  const bool wants_structure = command == Command::decompose ||
                               command == Command::implications ||
                               command == Command::oracle_check;
  if (wants_structure && kind == InputKind::implications)
    throw InputError("this command needs a dataset or graph input, not implications");
  if (command == Command::reconstruct && kind != InputKind::implications)
    throw InputError("reconstruct reads an implications file");
}

TwoStructure load_structure(const RunConfig& config, std::string_view text, std::ostream& err) {
  if (config.kind == InputKind::graph) return parse_graph_file(text);
  if (config.kind == InputKind::implications)
    throw InputError("implications input does not describe a structure");

  Dataset d = config.kind == InputKind::relational
                  ? ingest_relational(parse_csv(text), {config.keep_empty_cells})
                  : ingest_transactional(parse_transactions(text));
  if (config.filter) {
    auto filtered = filter_items(d, *config.filter);
    if (filtered.warning) err << "warning: " << *filtered.warning << "\n";
    d = std::move(filtered.dataset);
  }
  auto counts = count_cooccurrences(d);
  if (config.lower_threshold) counts = apply_lower_threshold(counts, *config.lower_threshold);
  switch (config.variant) {
    case Variant::standard: return build_standard(counts);
    case Variant::threshold: return build_thresholded(counts, config.threshold);
    case Variant::linear: return build_linear(counts, config.interval);
    case Variant::exponential: return build_exponential(counts);
  }
  throw LogicError("unknown variant");
}

namespace {

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const auto text = read_file(config.input);
  std::string artifact;
  int status = kExitOk;

  switch (config.command) {
    case Command::decompose: {
      auto s = load_structure(config, text, err);
      if (s.size() == 0) throw InputError("input has no items");
      std::optional<std::vector<ItemId>> order;
      if (config.order_seed) order = shuffled_order(s.size(), *config.order_seed);
      auto tree = decompose(s, order).snapshot();
      if (config.others_min) tree = group_others(tree, *config.others_min);
      artifact = config.format == TreeFormat::dot
                     ? render_dot(tree, s)
                     : canonical_form(tree, {true, &s.universe()}) + "\n";
      break;
    }
    case Command::implications: {
      auto s = load_structure(config, text, err);
      artifact = write_implications(generate_implications(s));
      break;
    }
    case Command::closures: {
      ImplicationSet b = config.kind == InputKind::implications
                             ? parse_implications(text)
                             : generate_implications(load_structure(config, text, err));
      auto lattice = enumerate_closed_sets(b, config.guard);
      artifact = lattice_report(lattice, b.universe());
      break;
    }
    case Command::reconstruct: {
      auto b = parse_implications(text);
      artifact = write_graph_file(reconstruct(b, config.seed_present));
      break;
    }
    case Command::oracle_check: {
      auto s = load_structure(config, text, err);
      std::optional<std::vector<ItemId>> order;
      if (config.order_seed) order = shuffled_order(s.size(), *config.order_seed);
      const CanonicalOptions opts{true, &s.universe()};
      auto fast = canonical_form(decompose(s, order).snapshot(), opts);
      auto slow = canonical_form(brute_force_tree(s, config.guard), opts);
      artifact = "incremental: " + fast + "\noracle:      " + slow + "\n" +
                 (fast == slow ? "match\n" : "MISMATCH\n");
      if (fast != slow) status = kExitMismatch;
      break;
    }
  }

  if (config.out.empty()) {
    out << artifact;
  } else {
    std::ofstream f(config.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + config.out + "'");
    f << artifact;
  }
  return status;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace gaifman
