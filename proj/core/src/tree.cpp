#include "ccgnf/tree.hpp"

#include <stdexcept>

namespace ccgnf {

std::string Tag::str(bool verbose) const {
  switch (kind) {
    case Kind::OT: return "OT";
    case Kind::SF: return "SF";
    case Kind::SB: return "SB";
    case Kind::FC: return "FC" + std::to_string(verbose ? degree : std::min(degree, 2));
    case Kind::BC: return "BC" + std::to_string(verbose ? degree : std::min(degree, 2));
  }
  return "?";
}

Tag output_tag(const RuleKind& kind) {
  if (kind.op == RuleOp::Substitute)
    return kind.dir == Slash::Forward ? Tag::sf() : Tag::sb();
  if (kind.degree == 0) return Tag::ot();
  return kind.dir == Slash::Forward ? Tag::fc(kind.degree) : Tag::bc(kind.degree);
}

bool nf_admissible(const RuleKind& rule, Tag left, Tag right) {
  if (rule.dir == Slash::Forward) {
    if (left.kind != Tag::Kind::FC) return true;
    if (rule.op == RuleOp::Substitute) return left.degree < 2;
    return false;
  }
  if (right.kind != Tag::Kind::BC) return true;
  if (rule.op == RuleOp::Substitute) return right.degree < 2;
  return false;
}

TreePtr ParseTree::leaf(int position, std::string word, Cat category) {
  if (position < 0) throw std::invalid_argument("negative leaf position");
  if (category == nullptr) throw std::invalid_argument("null leaf category");
  auto t = std::shared_ptr<ParseTree>(new ParseTree());
  t->word_ = std::move(word);
  t->category_ = category;
  t->tag_ = Tag::ot();
  t->begin_ = position;
  t->end_ = position + 1;
  return t;
}

TreePtr ParseTree::node(const RuleInstance& rule, TreePtr left, TreePtr right) {
  if (!left || !right) throw std::invalid_argument("null child");
  if (rule.left != left->category() || rule.right != right->category())
    throw std::logic_error("malformed tree: rule operands do not match children");
  if (apply_rule(rule.kind, rule.left, rule.right) != rule.output)
    throw std::logic_error("malformed tree: stated output does not match template");
  if (left->end() != right->begin())
    throw std::logic_error("malformed tree: children do not span adjacent substrings");
  auto t = std::shared_ptr<ParseTree>(new ParseTree());
  t->rule_ = rule;
  t->category_ = rule.output;
  t->tag_ = output_tag(rule.kind);
  t->begin_ = left->begin();
  t->end_ = right->end();
  t->left_ = std::move(left);
  t->right_ = std::move(right);
  return t;
}

int ParseTree::position() const {
  if (!is_leaf()) throw std::logic_error("position on internal node");
  return begin_;
}

const std::string& ParseTree::word() const {
  if (!is_leaf()) throw std::logic_error("word on internal node");
  return word_;
}

const RuleInstance& ParseTree::rule() const {
  if (is_leaf()) throw std::logic_error("rule on leaf");
  return rule_;
}

const TreePtr& ParseTree::left() const {
  if (is_leaf()) throw std::logic_error("left on leaf");
  return left_;
}

const TreePtr& ParseTree::right() const {
  if (is_leaf()) throw std::logic_error("right on leaf");
  return right_;
}

namespace {

void format_into(const TreePtr& t, bool verbose, std::string& out) {
  if (t->is_leaf()) {
    out += '[';
    out += t->word();
    out += ']';
    return;
  }
  out += '[';
  format_into(t->left(), verbose, out);
  out += ' ';
  format_into(t->right(), verbose, out);
  out += ']';
  out += t->category()->str();
  out += '-';
  out += t->tag().str(verbose);
}

}  // namespace

std::string format_tree(const TreePtr& tree, bool verbose) {
  std::string out;
  format_into(tree, verbose, out);
  return out;
}

bool structurally_equal(const TreePtr& a, const TreePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf())
    return a->position() == b->position() && a->word() == b->word() &&
           a->category() == b->category();
  return a->rule() == b->rule() && structurally_equal(a->left(), b->left()) &&
         structurally_equal(a->right(), b->right());
}

namespace {

template <typename T, typename F>
void collect_leaves(const TreePtr& t, std::vector<T>& out, F&& get) {
  if (t->is_leaf()) {
    out.push_back(get(t));
    return;
  }
  collect_leaves(t->left(), out, get);
  collect_leaves(t->right(), out, get);
}

}  // namespace

std::vector<Cat> leaf_categories(const TreePtr& tree) {
  std::vector<Cat> out;
  collect_leaves(tree, out, [](const TreePtr& l) { return l->category(); });
  return out;
}

std::vector<std::string> leaf_words(const TreePtr& tree) {
  std::vector<std::string> out;
  collect_leaves(tree, out, [](const TreePtr& l) { return l->word(); });
  return out;
}

}  // namespace ccgnf
