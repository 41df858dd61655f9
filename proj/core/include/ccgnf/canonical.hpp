#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccgnf/chart.hpp"
#include "ccgnf/grammar.hpp"
#include "ccgnf/tree.hpp"

namespace ccgnf {

// Rewrites a composition-only tree into the unique pure-CCG normal form of
// its reading: when a composition output would feed the primary side of a
// same-direction rule, the offending node is rotated (the primary child's own
// secondary subtree is re-composed with the sibling first) until the
// constraint holds everywhere. Preserves span, category, and recipe; throws
// std::invalid_argument on substitution nodes.
TreePtr nf_rewrite(const TreePtr& tree);

// Hash-consed pure-CCG normal forms with sequence numbers. Two trees have the
// same normal form iff key_of returns the same node, making equivalence a
// table lookup. State is per-sentence: use one table per comparison batch.
class NfKeyTable {
 public:
  struct Node {
    std::int64_t seqno = 0;
    bool leaf = false;
    int position = 0;  // leaves
    Cat category = nullptr;
    Tag tag;
    RuleKind rule;  // internal nodes
    const Node* left = nullptr;
    const Node* right = nullptr;
  };

  NfKeyTable() = default;
  NfKeyTable(const NfKeyTable&) = delete;
  NfKeyTable& operator=(const NfKeyTable&) = delete;

  const Node* leaf(int position, Cat category);

  // The normal form of combining two NF subtrees by a composition rule,
  // rotating when the direct node would violate the constraints. Memoized on
  // (rule, left seqno, right seqno), so repeated combinations are O(1).
  const Node* combine(const RuleKind& kind, const Node* left, const Node* right);

  // Normal form of an arbitrary composition-only tree.
  const Node* key_of(const TreePtr& tree);

  TreePtr materialize(const Node* node, const std::vector<std::string>& words) const;

 private:
  struct Key {
    RuleKind rule;
    std::int64_t left;
    std::int64_t right;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = RuleKindHash()(k.rule);
      h = h * 1000003u ^ std::hash<std::int64_t>()(k.left);
      h = h * 1000003u ^ std::hash<std::int64_t>()(k.right);
      return h;
    }
  };
  struct LeafKey {
    int position;
    Cat category;
    friend bool operator==(const LeafKey&, const LeafKey&) = default;
  };
  struct LeafKeyHash {
    std::size_t operator()(const LeafKey& k) const {
      return std::hash<int>()(k.position) * 1000003u ^
             std::hash<const void*>()(k.category);
    }
  };

  const Node* intern(const RuleKind& kind, const Node* left, const Node* right);

  std::deque<Node> storage_;
  std::unordered_map<LeafKey, const Node*, LeafKeyHash> leaves_;
  std::unordered_map<Key, const Node*, KeyHash> nodes_;
  std::int64_t counter_ = 0;
};

// True iff the two composition-only trees (over the same leaf sequence) have
// the same pure-CCG normal form; agrees with the recipe oracle.
bool nf_key_equal(const TreePtr& a, const TreePtr& b);

// Which of two equivalent parses should represent their class.
enum class Preference {
  FirstFound,         // never replace
  MoreLeftBranching,  // more internal nodes sitting on left-child edges wins
  FewerNonstandard,   // fewer FC/BC/SF/SB-tagged nodes wins
};

int left_branching_score(const TreePtr& tree);
int nonstandard_count(const TreePtr& tree);

// True when the candidate should displace the incumbent; ties keep the
// incumbent.
bool preferable_to(Preference p, const TreePtr& candidate, const TreePtr& incumbent);

// Result of the canonicalizing parse: one representative parse per semantic
// class per cell, each paired with its cached pure-CCG normal form (which may
// not itself be a legal parse under the restricted grammar).
class CanonicalChart {
 public:
  struct Entry {
    TreePtr parse;          // current representative
    TreePtr nf;             // its cached normal form
    std::int64_t seqno = 0; // the normal form's sequence number
    int candidates = 0;     // parses seen with this normal form
  };

  int width() const { return width_; }
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<Entry>& cell(int begin, int end) const;

  // Root-cell entries whose parse has the grammar's target category.
  const std::vector<Entry>& parses() const { return target_parses_; }

 private:
  friend CanonicalChart parse_canonical(const std::vector<std::string>&,
                                        const Grammar&, Preference);
  int width_ = 0;
  std::vector<std::string> words_;
  std::vector<std::vector<Entry>> cells_;
  std::vector<Entry> target_parses_;
};

// CKY that caches each candidate's pure-CCG normal form and keeps exactly one
// representative parse per normal form, so it returns one (possibly non-NF)
// parse per reading even when the rule set is arbitrarily restricted. The
// grammar must not enable substitution.
CanonicalChart parse_canonical(const std::vector<std::string>& words, const Grammar& g,
                               Preference preference = Preference::FirstFound);

}  // namespace ccgnf
