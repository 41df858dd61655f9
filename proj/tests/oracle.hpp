#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccgnf/chart.hpp"

// Test-side oracles, kept independent of the chart machinery they check.
namespace ccgnf::testing {

// Every parse tree over the words by direct recursive bracketing, no packing.
// When target is non-null only full-span trees of that category are returned,
// otherwise all full-span trees of any category.
std::vector<TreePtr> brute_force_trees(const std::vector<std::string>& words,
                                       const Grammar& g, Cat target = nullptr);

// The normal-form constraints as declarative tree properties, read off the
// children's own rules rather than tags: a forward-composition output never
// feeds the primary (left) side of a forward rule, except that degree-1
// composition output may feed forward substitution; mirrored for backward.
bool declarative_nf(const TreePtr& tree);

std::uint64_t catalan(int n);

Cat random_category(std::mt19937& rng, const std::vector<Cat>& atoms, int max_depth);

struct RandomCase {
  std::vector<LexEntry> entries;
  std::vector<std::string> words;
};

// A lexicon over <= 4 atoms with categories of depth <= max_depth and up to
// max_cats entries per word, plus a sentence of one word per position.
RandomCase random_case(std::mt19937& rng, int min_len, int max_len, int max_cats,
                       int max_depth);

// All rule instances used anywhere in the chart, in deterministic order.
std::vector<RuleInstance> instances_in_chart(const Chart& chart);

std::vector<std::string> words(const std::string& text);

// Grammar whose words are the tokens themselves, each assigned the category
// it spells, under the pure preset.
Grammar schematic_grammar(const std::vector<std::string>& tokens, const char* target,
                          bool with_substitution = false);

}  // namespace ccgnf::testing
