#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccgnf/grammar.hpp"
#include "ccgnf/tree.hpp"

namespace ccgnf {

struct UnknownWordError : std::runtime_error {
  explicit UnknownWordError(std::vector<std::string> missing);
  std::vector<std::string> words;
};

// Packed CKY chart. Items are keyed by (category, tag class) per cell and hold
// their derivations; trees are unpacked on demand.
class Chart {
 public:
  struct Item;

  struct Derivation {
    RuleInstance rule;
    const Item* left = nullptr;
    const Item* right = nullptr;
  };

  struct Item {
    Cat category = nullptr;
    Tag tag;
    int begin = 0;
    int end = 0;
    bool lexical = false;
    std::string word;  // lexical items only
    std::vector<Derivation> derivations;
  };

  int width() const { return width_; }
  const std::vector<std::string>& words() const { return words_; }

  // Items spanning words [begin, end), in insertion order.
  const std::vector<const Item*>& cell(int begin, int end) const;

 private:
  friend class ChartBuilder;

  int width_ = 0;
  std::vector<std::string> words_;
  std::deque<Item> storage_;
  std::vector<std::vector<const Item*>> cells_;
};

// Standard CKY over every rule the grammar allows; no normal-form filtering.
// Every grammatical tree is represented.
Chart parse_exhaustive(const std::vector<std::string>& words, const Grammar& g);

// CKY that additionally requires nf_admissible at every combination, so the
// chart contains exactly the normal-form trees.
Chart parse_nf(const std::vector<std::string>& words, const Grammar& g);

struct EnumerationCapExceeded : std::runtime_error {
  EnumerationCapExceeded(std::uint64_t count, std::uint64_t cap);
  std::uint64_t count;  // full count when known, 0 when it overflowed
  std::uint64_t cap;
};

// Number of distinct trees over [begin, end) whose root has the given
// category (any tag). Throws std::overflow_error if it exceeds uint64.
std::uint64_t count_trees(const Chart& chart, int begin, int end, Cat category);

// All distinct trees for the given span and category (any tag), depth-first,
// deterministic order. Throws EnumerationCapExceeded when more than cap trees
// would be produced.
std::vector<TreePtr> enumerate_trees(const Chart& chart, int begin, int end,
                                     Cat category, std::uint64_t cap);

}  // namespace ccgnf
