#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psmonoid/conjugacy.hpp"
#include "psmonoid/insertion.hpp"
#include "psmonoid/presentation.hpp"
#include "psmonoid/shiftgraph.hpp"

namespace {

using namespace psmonoid;

struct CommonOpts {
  std::string variant = "right";
  std::string format = "text";
  std::uint64_t guard = kDefaultGuard;
  unsigned parallelism = 1;
};

Variant variant_of(const CommonOpts& o) { return parse_variant(o.variant); }

void add_variant(CLI::App* sub, CommonOpts& o, bool required = true) {
  auto* opt = sub->add_option("--variant", o.variant, "tableau variant")
                  ->check(CLI::IsMember({"left", "right"}));
  if (required) opt->required();
}

void add_guard(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--guard", o.guard, "max words enumerated per class")
      ->envname("PATIENCE_GUARD")
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* sub, CommonOpts& o,
                const std::vector<std::string>& allowed) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(allowed));
}

void add_parallelism(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--parallelism", o.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
}

// Rows top to bottom, so the bottom row is printed last as in the figures.
std::string render_tableau(const Tableau& t) {
  if (t.columns().empty()) return "(empty tableau)\n";
  std::size_t height = 0;
  std::size_t width = 1;
  for (const auto& col : t.columns()) {
    height = std::max(height, col.size());
    for (Symbol s : col) width = std::max(width, std::to_string(s).size());
  }
  std::string out;
  for (std::size_t level = height; level-- > 0;) {
    std::string line;
    for (const auto& col : t.columns()) {
      std::string cell = level < col.size() ? std::to_string(col[level]) : "";
      cell.insert(0, width - cell.size(), ' ');
      if (!line.empty()) line.push_back(' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out.push_back('\n');
  }
  return out;
}

ShiftGraph graph_for(const std::string& word, const std::string& evaluation,
                     Variant variant, std::uint64_t guard) {
  if (word.empty() == evaluation.empty()) {
    throw std::invalid_argument("give a word or --evaluation, not both");
  }
  if (!evaluation.empty()) {
    ShiftGraph g = class_graph(Evaluation::parse(evaluation), variant, guard);
    if (!is_connected(g)) {
      throw std::invalid_argument(
          "class graph is disconnected; give a word to pick a component");
    }
    return g;
  }
  return component(insert_word(Word::parse(word), variant), guard);
}

void print_component(const ShiftGraph& g, const CommonOpts& o) {
  int d = diameter(g, o.parallelism);
  if (o.format == "json") {
    std::cout << to_json(g, d).dump() << "\n";
  } else if (o.format == "dot") {
    std::cout << "// vertices=" << g.vertices.size() << " diameter=" << d
              << "\n"
              << to_dot(g);
  } else {
    std::cout << "vertices=" << g.vertices.size() << " diameter=" << d << "\n";
  }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void table_row(const Evaluation& e, Variant variant, const CommonOpts& o) {
  std::cout << csv_quote(e.str()) << ",";
  try {
    ShiftGraph g = class_graph(e, variant, o.guard);
    std::cout << g.vertices.size() << "," << diameter(g, o.parallelism) << "\n";
  } catch (const guard_exceeded&) {
    std::cout << "SKIPPED,SKIPPED\n";
  }
}

void print_path(const ShiftPath& p, const CommonOpts& o) {
  if (o.format == "json") {
    nlohmann::json j;
    j["length"] = p.length();
    j["nodes"] = nlohmann::json::array();
    for (const auto& t : p.nodes) j["nodes"].push_back(t.to_json());
    j["witnesses"] = nlohmann::json::array();
    for (const auto& [x, y] : p.witnesses) {
      j["witnesses"].push_back({x.str(), y.str()});
    }
    std::cout << j.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    std::cout << i << ": " << column_reading(p.nodes[i]).str() << "\n";
    if (i < p.witnesses.size()) {
      std::cout << "   shift " << p.witnesses[i].first.str() << " | "
                << p.witnesses[i].second.str() << "\n";
    }
  }
  std::cout << "length=" << p.length() << "\n";
}

// All evaluations with content {1..n}, in total-length order, whose class
// stays within the cap.
void conjecture_scan(int n, std::uint64_t max_class, const CommonOpts& o) {
  if (n < 2) throw std::invalid_argument("need at least two symbols");
  int scanned = 0;
  int skipped = 0;
  int worst_low = 0;
  int upper_violations = 0;
  int min_d = -1, max_d = -1;

  std::vector<int> counts(n);
  auto visit = [&](const Evaluation& e) {
    if (multinomial(e) > max_class) {
      ++skipped;
      return;
    }
    ShiftGraph g = class_graph(e, variant_of(o), o.guard);
    int d = diameter(g, o.parallelism);
    ++scanned;
    min_d = min_d < 0 ? d : std::min(min_d, d);
    max_d = std::max(max_d, d);
    bool upper_ok = n == 2 ? d == 1 : d <= 2 * n - 4;
    bool lower_ok = n == 2 ? d == 1 : d >= n - 1;
    if (!upper_ok) ++upper_violations;
    if (!lower_ok) ++worst_low;
    std::cout << csv_quote(e.str()) << " vertices=" << g.vertices.size()
              << " diameter=" << d << (upper_ok ? "" : " UPPER-BOUND-VIOLATION")
              << (lower_ok ? "" : " below-conjectured-lower-bound") << "\n";
  };
  // Compositions of `total` into n positive parts, lexicographic.
  auto compose = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      counts[pos] = remaining;
      visit(Evaluation(counts));
      return;
    }
    for (int c = 1; c <= remaining - (n - 1 - pos); ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  for (std::uint64_t total = static_cast<std::uint64_t>(n);; ++total) {
    // Smallest class at this length: all but one symbol unique.
    std::uint64_t floor_size = 1;
    for (std::uint64_t i = 0; i + 1 < static_cast<std::uint64_t>(n); ++i) {
      floor_size *= total - i;
    }
    if (floor_size > max_class) break;
    compose(compose, 0, static_cast<int>(total));
  }
  std::cout << "scanned=" << scanned << " skipped=" << skipped
            << " diameter-range=[" << min_d << "," << max_d << "]"
            << " upper-bound-violations=" << upper_violations
            << " lower-bound-misses=" << worst_low << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patience sorting monoid toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string word, word2, evaluation, relation;
  bool delayed = false;
  bool repeated_min = false;
  int max_standard_len = 7;
  std::vector<std::string> eval_list;
  std::optional<std::size_t> bound;
  int scan_symbols = 3;
  std::uint64_t max_class = 5040;

  auto* cmd_insert = app.add_subcommand("insert", "insert a word, print its tableau");
  cmd_insert->add_option("word", word, "input word");
  add_variant(cmd_insert, o);
  add_format(cmd_insert, o, {"text", "json"});

  auto* cmd_reading = app.add_subcommand("reading", "column reading of a word's tableau");
  cmd_reading->add_option("word", word, "input word")->required();
  add_variant(cmd_reading, o);
  cmd_reading->add_flag("--delayed", delayed, "list delayed column readings");

  auto* cmd_equiv = app.add_subcommand("equiv", "do two words insert to the same tableau?");
  cmd_equiv->add_option("word", word)->required();
  cmd_equiv->add_option("other", word2)->required();
  add_variant(cmd_equiv, o);

  auto* cmd_closure = app.add_subcommand("closure", "congruence class of a word");
  cmd_closure->add_option("word", word)->required();
  add_variant(cmd_closure, o);
  add_guard(cmd_closure, o);

  auto* cmd_component = app.add_subcommand("component", "cyclic shift component");
  cmd_component->add_option("word", word, "member word");
  cmd_component->add_option("--evaluation", evaluation, "whole class, e.g. \"(4,1,4)\"");
  add_variant(cmd_component, o);
  add_format(cmd_component, o, {"text", "json", "dot"});
  add_guard(cmd_component, o);
  add_parallelism(cmd_component, o);

  auto* cmd_tables = app.add_subcommand("tables", "vertex/diameter table as CSV");
  cmd_tables->add_option("--max-standard-len", max_standard_len,
                         "standard classes up to this length")
      ->check(CLI::NonNegativeNumber);
  cmd_tables->add_option("--evaluation", eval_list, "extra evaluation rows");
  add_variant(cmd_tables, o, false);
  add_guard(cmd_tables, o);
  add_parallelism(cmd_tables, o);

  auto* cmd_cocharge = app.add_subcommand("cocharge", "cocharge sequence of a standard word");
  cmd_cocharge->add_option("word", word)->required();

  auto* cmd_conj = app.add_subcommand("conj", "conjugacy deciders");
  cmd_conj->add_option("word", word)->required();
  cmd_conj->add_option("other", word2)->required();
  cmd_conj->add_option("--relation", relation, "psim|tpsim|lsim|osim|evsim")
      ->required()
      ->check(CLI::IsMember({"psim", "tpsim", "lsim", "osim", "evsim"}));
  add_variant(cmd_conj, o);
  cmd_conj->add_option("--bound", bound, "conjugator length cap");
  add_guard(cmd_conj, o);

  auto* cmd_center = app.add_subcommand("center-path", "shift path to the class center");
  cmd_center->add_option("word", word)->required();
  add_variant(cmd_center, o, false);
  add_format(cmd_center, o, {"text", "json"});
  cmd_center->add_flag("--repeated-min", repeated_min,
                       "use the repeated-minimum construction and target");

  auto* cmd_scan = app.add_subcommand("conjecture-scan", "diameter range over small classes");
  cmd_scan->add_option("--symbols", scan_symbols, "content size n")->required();
  cmd_scan->add_option("--max-class-size", max_class, "largest class enumerated");
  add_variant(cmd_scan, o, false);
  add_guard(cmd_scan, o);
  add_parallelism(cmd_scan, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_insert) {
      Tableau t = insert_word(Word::parse(word), variant_of(o));
      if (o.format == "json") {
        std::cout << t.dump() << "\n";
      } else {
        std::cout << render_tableau(t);
      }
    } else if (*cmd_reading) {
      Tableau t = insert_word(Word::parse(word), variant_of(o));
      if (delayed) {
        for (const Word& d : delayed_column_readings(t)) {
          std::cout << d.str() << "\n";
        }
      } else {
        std::cout << column_reading(t).str() << "\n";
      }
    } else if (*cmd_equiv) {
      bool same = equivalent(Word::parse(word), Word::parse(word2), variant_of(o));
      std::cout << (same ? "true" : "false") << "\n";
    } else if (*cmd_closure) {
      for (const Word& w : congruence_closure(Word::parse(word), variant_of(o), o.guard)) {
        std::cout << w.str() << "\n";
      }
    } else if (*cmd_component) {
      print_component(graph_for(word, evaluation, variant_of(o), o.guard), o);
    } else if (*cmd_tables) {
      std::cout << "evaluation,vertices,diameter\n";
      for (int len = 1; len <= max_standard_len; ++len) {
        table_row(Evaluation(std::vector<int>(len, 1)), variant_of(o), o);
      }
      for (const std::string& ev : eval_list) {
        table_row(Evaluation::parse(ev), variant_of(o), o);
      }
    } else if (*cmd_cocharge) {
      std::cout << cocharge(Word::parse(word)).str() << "\n";
    } else if (*cmd_conj) {
      Variant v = variant_of(o);
      Tableau a = insert_word(Word::parse(word), v);
      Tableau b = insert_word(Word::parse(word2), v);
      ConjugacyVerdict verdict = ConjugacyVerdict::not_related();
      if (relation == "psim") {
        verdict = psim(a, b, o.guard) ? ConjugacyVerdict::related(Word{})
                                      : ConjugacyVerdict::not_related();
        verdict.witness.reset();
      } else if (relation == "tpsim") {
        verdict = tpsim(a, b, o.guard) ? ConjugacyVerdict::related(Word{})
                                       : ConjugacyVerdict::not_related();
        verdict.witness.reset();
      } else if (relation == "evsim") {
        verdict = evsim(a, b) ? ConjugacyVerdict::related(Word{})
                              : ConjugacyVerdict::not_related();
        verdict.witness.reset();
      } else {
        std::size_t cap = bound.value_or(default_conjugacy_bound(a));
        verdict = relation == "lsim" ? lsim_bounded(a, b, cap)
                                     : osim_bounded(a, b, cap);
      }
      std::cout << verdict.to_json().dump() << "\n";
    } else if (*cmd_center) {
      if (variant_of(o) != Variant::right) {
        throw std::invalid_argument("center paths live in the right variant");
      }
      Tableau t = insert_word(Word::parse(word), Variant::right);
      print_path(repeated_min ? path_to_center_repeated_min(t) : path_to_center(t), o);
    } else if (*cmd_scan) {
      conjecture_scan(scan_symbols, max_class, o);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
