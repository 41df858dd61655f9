#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ccgnf/category.hpp"
#include "ccgnf/rules.hpp"

namespace ccgnf {

struct LexEntry {
  std::string word;
  Cat category = nullptr;
};

// A fully instantiated rule pattern that the policy removes from the grammar.
struct BlockedRule {
  Cat left = nullptr;
  Cat right = nullptr;
  RuleKind kind;

  friend bool operator==(const BlockedRule&, const BlockedRule&) = default;
};

struct BlockedRuleHash {
  std::size_t operator()(const BlockedRule& b) const {
    std::size_t h = std::hash<const void*>()(b.left);
    h = h * 1000003u ^ std::hash<const void*>()(b.right);
    h = h * 1000003u ^ RuleKindHash()(b.kind);
    return h;
  }
};

using BlockedRuleSet = std::unordered_set<BlockedRule, BlockedRuleHash>;

// Composition degrees are never capped in pure CCG.
inline constexpr int kUnboundedDegree = std::numeric_limits<int>::max();

// Which rule instances the grammar admits. Pure CCG is max_degree unbounded,
// crossing allowed, and nothing blocked.
struct RulePolicy {
  int max_degree = 3;
  bool allow_crossing = true;
  bool enable_substitution = false;
  BlockedRuleSet blocked;
};

class Grammar {
 public:
  Grammar(std::vector<LexEntry> entries, RulePolicy policy, Cat target);

  // Empty when the word has no entries.
  const std::vector<Cat>& categories_of(const std::string& word) const;
  bool has_word(const std::string& word) const { return lexicon_.count(word) > 0; }

  const std::vector<LexEntry>& entries() const { return entries_; }
  const RulePolicy& policy() const { return policy_; }
  Cat target() const { return target_; }
  int max_lexical_arity() const { return max_arity_; }

 private:
  std::vector<LexEntry> entries_;
  std::unordered_map<std::string, std::vector<Cat>> lexicon_;
  RulePolicy policy_;
  Cat target_;
  int max_arity_ = 0;
};

struct LoadError : std::runtime_error {
  LoadError(std::size_t line, const std::string& msg);
  std::size_t line;
};

// Lexicon files: UTF-8, one `word<TAB>category` per line, '#' comments.
// Throws LoadError (with line number) on malformed categories or duplicate
// (word, category) entries.
std::vector<LexEntry> load_lexicon(std::istream& in);

struct PolicyConfig {
  RulePolicy policy;
  Cat target = nullptr;  // null when the file does not set one
};

// Policy files: flat key=value lines with keys max_degree, allow_crossing,
// enable_substitution, target, and repeated
//   block = <left> + <right> -> <output> [<kind>]
// lines, e.g. `block = B/C + C -> B [>B0]`. The stated output is checked
// against the template.
PolicyConfig load_policy(std::istream& in);

// The pure-CCG preset: every instance of the rule templates is admitted, with
// no degree bound. A bound derived from lexical arities is not enough:
// rewriting a parse into normal form can raise composition degrees above any
// arity in the lexicon.
RulePolicy pure_policy(bool with_substitution = false);

bool rule_allowed(const Grammar& g, const RuleInstance& r);

}  // namespace ccgnf
