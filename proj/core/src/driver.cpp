#include "ccgnf/driver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ccgnf/chart.hpp"
#include "ccgnf/recipe.hpp"

namespace ccgnf {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* mode_name(RunConfig::Mode mode) {
  switch (mode) {
    case RunConfig::Mode::All: return "all";
    case RunConfig::Mode::Nf: return "nf";
    case RunConfig::Mode::Canonical: return "canonical";
  }
  return "?";
}

// Tokens without lexicon entries that themselves parse as categories become
// lexical items with that category, so schematic strings like "A/B B/C C"
// parse without a lexicon file.
std::vector<LexEntry> add_pseudo_entries(std::vector<LexEntry> entries,
                                         const std::vector<std::string>& sentence,
                                         std::vector<LexEntry>& pseudo_out) {
  std::set<std::string> known;
  for (const LexEntry& e : entries) known.insert(e.word);
  for (const std::string& token : sentence) {
    if (known.count(token)) continue;
    known.insert(token);
    try {
      Cat c = Category::parse(token);
      entries.push_back(LexEntry{token, c});
      pseudo_out.push_back(LexEntry{token, c});
    } catch (const CategorySyntaxError&) {
      // Stays unknown; the parser reports it.
    }
  }
  return entries;
}

Grammar assemble_grammar(const RunConfig& config,
                         const std::vector<std::string>& sentence,
                         std::vector<LexEntry>& pseudo_out) {
  std::vector<LexEntry> entries;
  if (!config.lexicon_path.empty()) {
    std::ifstream in(config.lexicon_path);
    if (!in) throw ConfigError("cannot open lexicon file: " + config.lexicon_path);
    try {
      entries = load_lexicon(in);
    } catch (const LoadError& e) {
      throw ConfigError(config.lexicon_path + ": " + e.what());
    }
  }

  PolicyConfig policy_config;
  bool have_policy = false;
  if (!config.policy_path.empty()) {
    std::ifstream in(config.policy_path);
    if (!in) throw ConfigError("cannot open policy file: " + config.policy_path);
    try {
      policy_config = load_policy(in);
    } catch (const LoadError& e) {
      throw ConfigError(config.policy_path + ": " + e.what());
    }
    have_policy = true;
  }

  entries = add_pseudo_entries(std::move(entries), sentence, pseudo_out);
  RulePolicy policy =
      have_policy ? policy_config.policy : pure_policy();
  if (config.mode == RunConfig::Mode::Canonical && policy.enable_substitution)
    throw ConfigError("mode=canonical does not support enable_substitution");

  Cat target = nullptr;
  if (!config.target.empty()) {
    try {
      target = Category::parse(config.target);
    } catch (const CategorySyntaxError& e) {
      throw ConfigError(std::string("bad target category: ") + e.what());
    }
  } else if (policy_config.target != nullptr) {
    target = policy_config.target;
  } else {
    target = Category::atom("S");
  }
  return Grammar(std::move(entries), std::move(policy), target);
}

void print_trees(std::ostream& out, const std::vector<TreePtr>& trees, bool verbose) {
  out << "trees:\n";
  for (const TreePtr& t : trees) out << "  " << format_tree(t, verbose) << '\n';
}

void print_recipes(std::ostream& out, const std::vector<TreePtr>& trees,
                   const std::vector<std::string>& words) {
  out << "recipes:\n";
  for (const TreePtr& t : trees)
    out << "  " << render_recipe(beta_normalize(recipe_of(t)), words) << '\n';
}

int run_mode_all(const RunConfig& config, const std::vector<std::string>& sentence,
                 const Grammar& grammar, std::ostream& out) {
  const int n = static_cast<int>(sentence.size());
  Chart chart = parse_exhaustive(sentence, grammar);
  std::vector<TreePtr> trees =
      enumerate_trees(chart, 0, n, grammar.target(), config.cap);
  std::vector<std::vector<TreePtr>> classes = group_into_classes(trees);
  if (config.show_trees) print_trees(out, trees, config.verbose);
  if (config.show_recipes) print_recipes(out, trees, sentence);
  if (config.show_counts) {
    out << "counts:\n";
    out << "  total: " << trees.size() << '\n';
    out << "  classes: " << classes.size() << '\n';
    out << "  class-sizes:";
    for (const auto& cls : classes) out << ' ' << cls.size();
    out << '\n';
  }
  if (config.show_classes) {
    out << "classes:\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out << "  class " << (i + 1) << ": size " << classes[i].size() << '\n';
      out << "    " << format_tree(classes[i].front(), config.verbose) << '\n';
    }
  }
  return trees.empty() ? 1 : 0;
}

int run_mode_nf(const RunConfig& config, const std::vector<std::string>& sentence,
                const Grammar& grammar, std::ostream& out) {
  const int n = static_cast<int>(sentence.size());
  Chart chart = parse_nf(sentence, grammar);
  std::vector<TreePtr> trees =
      enumerate_trees(chart, 0, n, grammar.target(), config.cap);
  if (config.show_trees) print_trees(out, trees, config.verbose);
  if (config.show_recipes) print_recipes(out, trees, sentence);
  if (config.show_counts) {
    out << "counts:\n";
    out << "  nf: " << trees.size() << '\n';
  }
  if (config.show_classes) {
    std::vector<std::vector<TreePtr>> classes = group_into_classes(trees);
    out << "classes:\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out << "  class " << (i + 1) << ": size " << classes[i].size() << '\n';
      out << "    " << format_tree(classes[i].front(), config.verbose) << '\n';
    }
  }
  return trees.empty() ? 1 : 0;
}

int run_mode_canonical(const RunConfig& config,
                       const std::vector<std::string>& sentence,
                       const Grammar& grammar, std::ostream& out) {
  CanonicalChart chart = parse_canonical(sentence, grammar, config.prefer);
  const std::vector<CanonicalChart::Entry>& parses = chart.parses();
  std::vector<TreePtr> trees;
  for (const CanonicalChart::Entry& e : parses) trees.push_back(e.parse);
  if (config.show_trees) print_trees(out, trees, config.verbose);
  if (config.show_recipes) print_recipes(out, trees, sentence);
  if (config.show_counts) {
    out << "counts:\n";
    out << "  canonical: " << parses.size() << '\n';
  }
  if (config.show_classes) {
    out << "classes:\n";
    for (std::size_t i = 0; i < parses.size(); ++i) {
      out << "  class " << (i + 1) << ": seqno " << parses[i].seqno << " candidates "
          << parses[i].candidates << '\n';
      out << "    " << format_tree(parses[i].parse, config.verbose) << '\n';
    }
  }
  if (config.verbose) {
    out << "cells:\n";
    for (int width = 1; width <= chart.width(); ++width)
      for (int start = 0; start + width <= chart.width(); ++start) {
        int end = start + width;
        for (const CanonicalChart::Entry& e : chart.cell(start, end))
          out << "  [" << start << ',' << end << ") seqno " << e.seqno
              << " candidates " << e.candidates << ' ' << e.parse->category()->str()
              << ": " << format_tree(e.parse, true) << '\n';
      }
  }
  return parses.empty() ? 1 : 0;
}

}  // namespace

int run(const RunConfig& config, const std::vector<std::string>& sentence,
        std::ostream& out, std::ostream& err) {
  try {
    if (sentence.empty()) throw ConfigError("empty sentence");
    if (config.cap == 0) throw ConfigError("cap must be >= 1");
    std::vector<LexEntry> pseudo;
    Grammar grammar = assemble_grammar(config, sentence, pseudo);

    out << "sentence:";
    for (const std::string& w : sentence) out << ' ' << w;
    out << '\n';
    out << "mode: " << mode_name(config.mode) << '\n';
    for (const LexEntry& p : pseudo)
      out << "pseudo-lexical: " << p.word << " := " << p.category->str() << '\n';

    switch (config.mode) {
      case RunConfig::Mode::All:
        return run_mode_all(config, sentence, grammar, out);
      case RunConfig::Mode::Nf:
        return run_mode_nf(config, sentence, grammar, out);
      case RunConfig::Mode::Canonical:
        return run_mode_canonical(config, sentence, grammar, out);
    }
    return 2;
  } catch (const UnknownWordError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap)" << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

namespace {

struct DemoRow {
  std::string metric;
  std::string expected;
  std::string actual;
};

struct DemoResult {
  std::vector<std::string> sentence;
  std::vector<DemoRow> rows;
};

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

std::vector<LexEntry> pseudo_lexicon(const std::vector<std::string>& tokens) {
  std::vector<LexEntry> entries;
  std::set<std::string> seen;
  for (const std::string& t : tokens)
    if (seen.insert(t).second) entries.push_back(LexEntry{t, Category::parse(t)});
  return entries;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string sizes_desc(const std::vector<std::vector<TreePtr>>& classes) {
  std::vector<std::size_t> sizes;
  for (const auto& cls : classes) sizes.push_back(cls.size());
  std::sort(sizes.rbegin(), sizes.rend());
  std::string out;
  for (std::size_t s : sizes) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

std::set<std::string> reading_keys(const std::vector<TreePtr>& trees) {
  std::set<std::string> keys;
  for (const TreePtr& t : trees) keys.insert(reading_key(t));
  return keys;
}

constexpr std::uint64_t kDemoCap = 1'000'000;

DemoResult demo_galoot(int) {
  std::vector<LexEntry> lex = {
      {"the", Category::parse("NP/N")},
      {"galoot", Category::parse("N")},
      {"in", Category::parse("(N\\N)/NP")},
      {"corner", Category::parse("N")},
      {"that", Category::parse("(N\\N)/(S/NP)")},
      {"I", Category::parse("S/(S\\NP)")},
      {"said", Category::parse("(S\\NP)/S")},
      {"Mary", Category::parse("S/(S\\NP)")},
      {"pretends", Category::parse("(S\\NP)/(S_inf\\NP)")},
      {"to", Category::parse("(S_inf\\NP)/(S_stem\\NP)")},
      {"like", Category::parse("(S_stem\\NP)/NP")},
  };
  std::vector<std::string> sentence =
      split_words("the galoot in the corner that I said Mary pretends to like");
  Grammar g(lex, pure_policy(), Category::atom("NP"));
  const int n = static_cast<int>(sentence.size());

  Chart exhaustive = parse_exhaustive(sentence, g);
  std::vector<TreePtr> trees = enumerate_trees(exhaustive, 0, n, g.target(), kDemoCap);
  std::vector<std::vector<TreePtr>> classes = group_into_classes(trees);
  Chart nf = parse_nf(sentence, g);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, n, g.target(), kDemoCap);
  CanonicalChart canonical = parse_canonical(sentence, g);
  std::vector<TreePtr> canonical_trees;
  for (const CanonicalChart::Entry& e : canonical.parses())
    canonical_trees.push_back(e.parse);

  DemoResult result;
  result.sentence = sentence;
  result.rows = {
      {"exhaustive-total", "252", std::to_string(trees.size())},
      {"class-count", "2", std::to_string(classes.size())},
      {"class-sizes", "168,84", sizes_desc(classes)},
      {"nf-count", "2", std::to_string(nf_trees.size())},
      {"canonical-count", "2", std::to_string(canonical_trees.size())},
      {"class-agreement", "yes",
       yesno(reading_keys(nf_trees) == reading_keys(canonical_trees))},
  };
  return result;
}

DemoResult demo_john(int) {
  std::vector<LexEntry> lex = {
      {"John", Category::parse("S/(S\\NP)")},
      {"likes", Category::parse("(S\\NP)/NP")},
      {"Mary", Category::parse("NP")},
  };
  std::vector<std::string> sentence = split_words("John likes Mary");
  Grammar g(lex, pure_policy(), Category::atom("S"));

  Chart exhaustive = parse_exhaustive(sentence, g);
  std::vector<TreePtr> trees = enumerate_trees(exhaustive, 0, 3, g.target(), kDemoCap);
  std::vector<std::vector<TreePtr>> classes = group_into_classes(trees);
  Chart nf = parse_nf(sentence, g);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, 3, g.target(), kDemoCap);

  DemoResult result;
  result.sentence = sentence;
  result.rows = {
      {"exhaustive-total", "2", std::to_string(trees.size())},
      {"class-count", "1", std::to_string(classes.size())},
      {"nf-count", "1", std::to_string(nf_trees.size())},
      {"nf-parse", "[[John] [[likes] [Mary]]S\\NP-OT]S-OT",
       nf_trees.empty() ? "-" : format_tree(nf_trees.front(), true)},
  };
  return result;
}

DemoResult demo_chain_fn5(int) {
  std::vector<std::string> sentence = split_words("A/B B/C C/D/E");
  std::vector<LexEntry> lex = pseudo_lexicon(sentence);
  Grammar g(lex, pure_policy(), Category::parse("A/D/E"));

  Chart exhaustive = parse_exhaustive(sentence, g);
  std::vector<TreePtr> trees = enumerate_trees(exhaustive, 0, 3, g.target(), kDemoCap);
  Chart nf = parse_nf(sentence, g);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, 3, g.target(), kDemoCap);

  std::string rewrite_ok = "-";
  if (nf_trees.size() == 1 && trees.size() == 2) {
    const TreePtr& nf_tree = nf_trees.front();
    // The other exhaustive parse is the left-branching one.
    TreePtr other = structurally_equal(trees[0], nf_tree) ? trees[1] : trees[0];
    rewrite_ok = yesno(structurally_equal(nf_rewrite(other), nf_tree));
  }

  DemoResult result;
  result.sentence = sentence;
  result.rows = {
      {"exhaustive-total", "2", std::to_string(trees.size())},
      {"nf-count", "1", std::to_string(nf_trees.size())},
      {"nf-parse", "[[A/B] [[B/C] [C/D/E]]B/D/E-FC2]A/D/E-FC2",
       nf_trees.empty() ? "-" : format_tree(nf_trees.front(), true)},
      {"rewrite-maps-to-nf", "yes", rewrite_ok},
  };
  return result;
}

DemoResult demo_modifiers(int n) {
  if (n < 1 || n > 4)
    throw ConfigError("the modifiers demo takes --n between 1 and 4");
  // Totals are the Catalan numbers C(2n); class counts follow binomial(2n, n).
  static const std::uint64_t kTotals[] = {2, 14, 132, 1430};
  static const std::uint64_t kClasses[] = {2, 6, 20, 70};

  std::vector<std::string> sentence;
  for (int i = 0; i < n; ++i) sentence.push_back("S/S");
  sentence.push_back("S");
  for (int i = 0; i < n; ++i) sentence.push_back("S\\S");
  std::vector<LexEntry> lex = pseudo_lexicon(sentence);
  Grammar g(lex, pure_policy(), Category::atom("S"));
  const int len = static_cast<int>(sentence.size());

  Chart exhaustive = parse_exhaustive(sentence, g);
  std::vector<TreePtr> trees = enumerate_trees(exhaustive, 0, len, g.target(), kDemoCap);
  std::vector<std::vector<TreePtr>> classes = group_into_classes(trees);
  Chart nf = parse_nf(sentence, g);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, len, g.target(), kDemoCap);
  CanonicalChart canonical = parse_canonical(sentence, g);
  std::vector<TreePtr> canonical_trees;
  for (const CanonicalChart::Entry& e : canonical.parses())
    canonical_trees.push_back(e.parse);

  DemoResult result;
  result.sentence = sentence;
  result.rows = {
      {"exhaustive-total", std::to_string(kTotals[n - 1]), std::to_string(trees.size())},
      {"class-count", std::to_string(kClasses[n - 1]), std::to_string(classes.size())},
      {"nf-count", std::to_string(kClasses[n - 1]), std::to_string(nf_trees.size())},
      {"canonical-count", std::to_string(kClasses[n - 1]),
       std::to_string(canonical_trees.size())},
      {"class-agreement", "yes",
       yesno(reading_keys(nf_trees) == reading_keys(canonical_trees))},
  };
  return result;
}

DemoResult demo_blocked(int) {
  std::vector<std::string> sentence = split_words("A/B B/C C");
  std::vector<LexEntry> lex = pseudo_lexicon(sentence);
  RulePolicy policy = pure_policy();
  policy.blocked.insert(BlockedRule{Category::parse("B/C"), Category::parse("C"),
                                    RuleKind::compose(Slash::Forward, 0)});
  Grammar g(lex, policy, Category::atom("A"));

  Chart nf = parse_nf(sentence, g);
  std::vector<TreePtr> nf_trees = enumerate_trees(nf, 0, 3, g.target(), kDemoCap);
  CanonicalChart canonical = parse_canonical(sentence, g);
  const std::vector<CanonicalChart::Entry>& parses = canonical.parses();

  DemoResult result;
  result.sentence = sentence;
  result.rows = {
      {"nf-count", "0", std::to_string(nf_trees.size())},
      {"canonical-count", "1", std::to_string(parses.size())},
      {"parse", "[[[A/B] [B/C]]A/C-FC1 [C]]A-OT",
       parses.empty() ? "-" : format_tree(parses.front().parse, true)},
      {"cached-nf", "[[A/B] [[B/C] [C]]B-OT]A-OT",
       parses.empty() ? "-" : format_tree(parses.front().nf, true)},
  };
  return result;
}

using DemoFn = DemoResult (*)(int);

const std::vector<std::pair<std::string, DemoFn>>& demo_registry() {
  static const std::vector<std::pair<std::string, DemoFn>> demos = {
      {"galoot", demo_galoot},       {"john", demo_john},
      {"chain-fn5", demo_chain_fn5}, {"modifiers", demo_modifiers},
      {"blocked", demo_blocked},
  };
  return demos;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : demo_registry()) names.push_back(name);
  return names;
}

int run_demo(const std::string& name, int n, std::ostream& out, std::ostream& err) {
  const DemoFn* found = nullptr;
  for (const auto& [demo_name, fn] : demo_registry())
    if (demo_name == name) found = &fn;
  if (!found) {
    err << "error: unknown demo '" << name << "'; available:";
    for (const std::string& d : demo_names()) err << ' ' << d;
    err << '\n';
    return 2;
  }
  try {
    DemoResult result = (*found)(n);
    out << "demo: " << name << '\n';
    out << "sentence:";
    for (const std::string& w : result.sentence) out << ' ' << w;
    out << '\n';

    std::size_t w_metric = 6, w_expected = 8, w_actual = 6;
    for (const DemoRow& r : result.rows) {
      w_metric = std::max(w_metric, r.metric.size());
      w_expected = std::max(w_expected, r.expected.size());
      w_actual = std::max(w_actual, r.actual.size());
    }
    auto pad = [](const std::string& s, std::size_t width) {
      return s + std::string(width - s.size(), ' ');
    };
    out << pad("metric", w_metric) << "  " << pad("expected", w_expected) << "  "
        << pad("actual", w_actual) << "  ok\n";
    bool all_ok = true;
    for (const DemoRow& r : result.rows) {
      bool ok = r.expected == r.actual;
      all_ok = all_ok && ok;
      out << pad(r.metric, w_metric) << "  " << pad(r.expected, w_expected) << "  "
          << pad(r.actual, w_actual) << "  " << (ok ? "yes" : "NO") << '\n';
    }
    out << "result: " << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ccgnf
