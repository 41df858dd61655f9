#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccgnf/category.hpp"
#include "ccgnf/rules.hpp"

namespace ccgnf {

// Constituent marker recording which rule produced it: OT for application
// outputs and lexical items, FC/BC (with the degree) for composition outputs,
// SF/SB for substitution outputs.
struct Tag {
  enum class Kind : unsigned char { OT, FC, BC, SF, SB };

  Kind kind = Kind::OT;
  int degree = 0;  // meaningful for FC/BC

  static Tag ot() { return {Kind::OT, 0}; }
  static Tag fc(int degree) { return {Kind::FC, degree}; }
  static Tag bc(int degree) { return {Kind::BC, degree}; }
  static Tag sf() { return {Kind::SF, 0}; }
  static Tag sb() { return {Kind::SB, 0}; }

  // "OT", "FC1", "FC2" (any degree >= 2), "SF", ...; verbose prints the true
  // degree, e.g. "FC3".
  std::string str(bool verbose = false) const;

  friend bool operator==(const Tag&, const Tag&) = default;
};

Tag output_tag(const RuleKind& kind);

// The normal-form admissibility check applied when a rule combines two tagged
// constituents: composition output never feeds the primary side of a
// same-direction rule, and degree >= 2 composition output never feeds the
// primary side of same-direction substitution. Secondary arguments and
// OT/SF/SB inputs are never restricted.
bool nf_admissible(const RuleKind& rule, Tag left, Tag right);

class ParseTree;
using TreePtr = std::shared_ptr<const ParseTree>;

// Immutable derivation tree. Leaves carry (position, word, category); internal
// nodes carry the instantiated rule, and their category/tag are derived from
// it. Children must span adjacent substrings.
class ParseTree {
 public:
  static TreePtr leaf(int position, std::string word, Cat category);
  static TreePtr node(const RuleInstance& rule, TreePtr left, TreePtr right);

  bool is_leaf() const { return left_ == nullptr; }
  int begin() const { return begin_; }
  int end() const { return end_; }

  int position() const;
  const std::string& word() const;

  const RuleInstance& rule() const;
  const TreePtr& left() const;
  const TreePtr& right() const;

  Cat category() const { return category_; }
  Tag tag() const { return tag_; }

 private:
  ParseTree() = default;

  RuleInstance rule_;
  TreePtr left_;
  TreePtr right_;
  Cat category_ = nullptr;
  Tag tag_;
  int begin_ = 0;
  int end_ = 0;
  std::string word_;  // leaves only
};

// Bracketed text format: `[w]` for leaves, `[L R]<cat>-<TAG>` for nodes, e.g.
// `[[John] [[likes] [Mary]]S\NP-OT]S-OT`.
std::string format_tree(const TreePtr& tree, bool verbose = false);

bool structurally_equal(const TreePtr& a, const TreePtr& b);

std::vector<Cat> leaf_categories(const TreePtr& tree);
std::vector<std::string> leaf_words(const TreePtr& tree);

}  // namespace ccgnf
