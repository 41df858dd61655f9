#include <benchmark/benchmark.h>

#include <sstream>

#include "ccgnf/canonical.hpp"
#include "ccgnf/chart.hpp"
#include "ccgnf/recipe.hpp"

using namespace ccgnf;

namespace {

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Grammar galoot_grammar() {
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
  return Grammar(lex, pure_policy(), Category::atom("NP"));
}

const std::vector<std::string>& galoot_sentence() {
  static const std::vector<std::string> sentence =
      split("the galoot in the corner that I said Mary pretends to like");
  return sentence;
}

Grammar chain_grammar(int k) {
  std::vector<LexEntry> lex;
  for (int i = 1; i < k; ++i) {
    std::string cat = "A" + std::to_string(i) + "/A" + std::to_string(i + 1);
    lex.push_back({cat, Category::parse(cat)});
  }
  lex.push_back({"A" + std::to_string(k), Category::atom("A" + std::to_string(k))});
  return Grammar(lex, pure_policy(), Category::atom("A1"));
}

std::vector<std::string> chain_sentence(int k) {
  std::vector<std::string> out;
  for (int i = 1; i < k; ++i)
    out.push_back("A" + std::to_string(i) + "/A" + std::to_string(i + 1));
  out.push_back("A" + std::to_string(k));
  return out;
}

void BM_GalootExhaustive(benchmark::State& state) {
  Grammar g = galoot_grammar();
  for (auto _ : state) {
    Chart chart = parse_exhaustive(galoot_sentence(), g);
    benchmark::DoNotOptimize(count_trees(chart, 0, 12, g.target()));
  }
}
BENCHMARK(BM_GalootExhaustive);

void BM_GalootNf(benchmark::State& state) {
  Grammar g = galoot_grammar();
  for (auto _ : state) {
    Chart chart = parse_nf(galoot_sentence(), g);
    benchmark::DoNotOptimize(count_trees(chart, 0, 12, g.target()));
  }
}
BENCHMARK(BM_GalootNf);

void BM_GalootCanonical(benchmark::State& state) {
  Grammar g = galoot_grammar();
  for (auto _ : state) {
    CanonicalChart chart = parse_canonical(galoot_sentence(), g);
    benchmark::DoNotOptimize(chart.parses().size());
  }
}
BENCHMARK(BM_GalootCanonical);

void BM_GalootEnumerateAndGroup(benchmark::State& state) {
  Grammar g = galoot_grammar();
  Chart chart = parse_exhaustive(galoot_sentence(), g);
  for (auto _ : state) {
    std::vector<TreePtr> trees = enumerate_trees(chart, 0, 12, g.target(), 1000);
    benchmark::DoNotOptimize(group_into_classes(trees).size());
  }
}
BENCHMARK(BM_GalootEnumerateAndGroup);

void BM_ChainNf(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Grammar g = chain_grammar(k);
  std::vector<std::string> sentence = chain_sentence(k);
  for (auto _ : state) {
    Chart chart = parse_nf(sentence, g);
    benchmark::DoNotOptimize(count_trees(chart, 0, k, g.target()));
  }
}
BENCHMARK(BM_ChainNf)->Arg(8)->Arg(12)->Arg(16);

void BM_ChainCanonical(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Grammar g = chain_grammar(k);
  std::vector<std::string> sentence = chain_sentence(k);
  for (auto _ : state) {
    CanonicalChart chart = parse_canonical(sentence, g);
    benchmark::DoNotOptimize(chart.parses().size());
  }
}
BENCHMARK(BM_ChainCanonical)->Arg(8)->Arg(12)->Arg(16);

void BM_NfRewrite(benchmark::State& state) {
  // Rewrite the fully left-branching chain parse, the worst case for rotation.
  int k = static_cast<int>(state.range(0));
  Grammar g = chain_grammar(k);
  Chart chart = parse_exhaustive(chain_sentence(k), g);
  TreePtr left_branching;
  for (const TreePtr& t : enumerate_trees(chart, 0, k, g.target(), 1u << 20))
    if (!left_branching ||
        left_branching_score(t) > left_branching_score(left_branching))
      left_branching = t;
  for (auto _ : state) benchmark::DoNotOptimize(nf_rewrite(left_branching));
}
BENCHMARK(BM_NfRewrite)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
