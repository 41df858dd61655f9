#include "ccgnf/canonical.hpp"

#include <stdexcept>

namespace ccgnf {

namespace {

// Builds the normal form of rule(left, right) where both children are already
// NF. When the node is inadmissible the primary child is a same-direction
// composition <Q, b1, b2>; rotate: combine b2 with the sibling at the original
// degree n, then attach b1 at degree n + Q.degree - 1. The degree arithmetic
// is forced by the category bookkeeping, which is asserted.
TreePtr nf_combine_trees(const RuleInstance& rule, const TreePtr& left,
                         const TreePtr& right) {
  if (nf_admissible(rule.kind, left->tag(), right->tag())) {
    return ParseTree::node(rule, left, right);
  }
  int n = rule.kind.degree;
  if (rule.kind.dir == Slash::Forward) {
    const TreePtr& b1 = left->left();
    const TreePtr& b2 = left->right();
    int q = left->rule().kind.degree;
    auto inner_rule =
        instantiate(RuleKind::compose(Slash::Forward, n), b2->category(),
                    right->category());
    if (!inner_rule) throw std::logic_error("nf_rewrite: rotation category mismatch");
    TreePtr inner = nf_combine_trees(*inner_rule, b2, right);
    auto outer_rule = instantiate(RuleKind::compose(Slash::Forward, n + q - 1),
                                  b1->category(), inner->category());
    if (!outer_rule || outer_rule->output != rule.output)
      throw std::logic_error("nf_rewrite: rotation category mismatch");
    if (!nf_admissible(outer_rule->kind, b1->tag(), inner->tag()))
      throw std::logic_error("nf_rewrite: rotated node is not normal form");
    return ParseTree::node(*outer_rule, b1, inner);
  }
  const TreePtr& g1 = right->left();
  const TreePtr& g2 = right->right();
  int q = right->rule().kind.degree;
  auto inner_rule = instantiate(RuleKind::compose(Slash::Backward, n),
                                left->category(), g1->category());
  if (!inner_rule) throw std::logic_error("nf_rewrite: rotation category mismatch");
  TreePtr inner = nf_combine_trees(*inner_rule, left, g1);
  auto outer_rule = instantiate(RuleKind::compose(Slash::Backward, n + q - 1),
                                inner->category(), g2->category());
  if (!outer_rule || outer_rule->output != rule.output)
    throw std::logic_error("nf_rewrite: rotation category mismatch");
  if (!nf_admissible(outer_rule->kind, inner->tag(), g2->tag()))
    throw std::logic_error("nf_rewrite: rotated node is not normal form");
  return ParseTree::node(*outer_rule, inner, g2);
}

}  // namespace

TreePtr nf_rewrite(const TreePtr& tree) {
  if (tree->is_leaf()) return tree;
  if (tree->rule().kind.op == RuleOp::Substitute)
    throw std::invalid_argument("nf_rewrite: substitution nodes have no normal form");
  TreePtr left = nf_rewrite(tree->left());
  TreePtr right = nf_rewrite(tree->right());
  if (left == tree->left() && right == tree->right() &&
      nf_admissible(tree->rule().kind, left->tag(), right->tag()))
    return tree;
  return nf_combine_trees(tree->rule(), left, right);
}

const NfKeyTable::Node* NfKeyTable::leaf(int position, Cat category) {
  auto [it, fresh] = leaves_.try_emplace(LeafKey{position, category}, nullptr);
  if (fresh) {
    storage_.push_back(Node{++counter_, true, position, category, Tag::ot(),
                            RuleKind{}, nullptr, nullptr});
    it->second = &storage_.back();
  }
  return it->second;
}

const NfKeyTable::Node* NfKeyTable::intern(const RuleKind& kind, const Node* left,
                                           const Node* right) {
  auto [it, fresh] = nodes_.try_emplace(Key{kind, left->seqno, right->seqno}, nullptr);
  if (fresh) {
    Cat out = apply_rule(kind, left->category, right->category);
    if (out == nullptr)
      throw std::logic_error("NfKeyTable: rule does not apply to NF children");
    storage_.push_back(
        Node{++counter_, false, left->position, out, output_tag(kind), kind, left, right});
    it->second = &storage_.back();
  }
  return it->second;
}

const NfKeyTable::Node* NfKeyTable::combine(const RuleKind& kind, const Node* left,
                                            const Node* right) {
  if (kind.op != RuleOp::Compose)
    throw std::invalid_argument("NfKeyTable: substitution rules are not canonicalizable");
  Cat expected = apply_rule(kind, left->category, right->category);
  if (expected == nullptr)
    throw std::logic_error("NfKeyTable: rule does not apply to NF children");

  Key memo_key{kind, left->seqno, right->seqno};
  auto it = nodes_.find(memo_key);
  if (it != nodes_.end()) return it->second;

  const Node* result;
  if (nf_admissible(kind, left->tag, right->tag)) {
    result = intern(kind, left, right);
  } else if (kind.dir == Slash::Forward) {
    const Node* inner =
        combine(RuleKind::compose(Slash::Forward, kind.degree), left->right, right);
    result = combine(
        RuleKind::compose(Slash::Forward, kind.degree + left->rule.degree - 1),
        left->left, inner);
    nodes_.emplace(memo_key, result);
  } else {
    const Node* inner =
        combine(RuleKind::compose(Slash::Backward, kind.degree), left, right->left);
    result = combine(
        RuleKind::compose(Slash::Backward, kind.degree + right->rule.degree - 1),
        inner, right->right);
    nodes_.emplace(memo_key, result);
  }
  if (result->category != expected)
    throw std::logic_error("NfKeyTable: rotation category mismatch");
  return result;
}

const NfKeyTable::Node* NfKeyTable::key_of(const TreePtr& tree) {
  if (tree->is_leaf()) return leaf(tree->position(), tree->category());
  if (tree->rule().kind.op == RuleOp::Substitute)
    throw std::invalid_argument("NfKeyTable: substitution nodes are not canonicalizable");
  return combine(tree->rule().kind, key_of(tree->left()), key_of(tree->right()));
}

TreePtr NfKeyTable::materialize(const Node* node,
                                const std::vector<std::string>& words) const {
  if (node->leaf) {
    std::size_t pos = static_cast<std::size_t>(node->position);
    return ParseTree::leaf(node->position,
                           pos < words.size() ? words[pos] : "w" + std::to_string(pos),
                           node->category);
  }
  auto rule = instantiate(node->rule, node->left->category, node->right->category);
  if (!rule) throw std::logic_error("NfKeyTable: corrupt node");
  return ParseTree::node(*rule, materialize(node->left, words),
                         materialize(node->right, words));
}

bool nf_key_equal(const TreePtr& a, const TreePtr& b) {
  NfKeyTable table;
  return table.key_of(a) == table.key_of(b);
}

int left_branching_score(const TreePtr& tree) {
  if (tree->is_leaf()) return 0;
  int score = left_branching_score(tree->left()) + left_branching_score(tree->right());
  if (!tree->left()->is_leaf()) ++score;
  return score;
}

int nonstandard_count(const TreePtr& tree) {
  if (tree->is_leaf()) return 0;
  return (tree->tag().kind != Tag::Kind::OT ? 1 : 0) +
         nonstandard_count(tree->left()) + nonstandard_count(tree->right());
}

bool preferable_to(Preference p, const TreePtr& candidate, const TreePtr& incumbent) {
  switch (p) {
    case Preference::FirstFound:
      return false;
    case Preference::MoreLeftBranching:
      return left_branching_score(candidate) > left_branching_score(incumbent);
    case Preference::FewerNonstandard:
      return nonstandard_count(candidate) < nonstandard_count(incumbent);
  }
  return false;
}

const std::vector<CanonicalChart::Entry>& CanonicalChart::cell(int begin,
                                                               int end) const {
  if (begin < 0 || end > width_ || begin >= end)
    throw std::out_of_range("chart cell out of range");
  return cells_[static_cast<std::size_t>(begin) * (width_ + 1) + end];
}

CanonicalChart parse_canonical(const std::vector<std::string>& words, const Grammar& g,
                               Preference preference) {
  if (g.policy().enable_substitution)
    throw std::invalid_argument(
        "canonical mode does not support substitution rules");
  if (words.empty()) throw std::invalid_argument("empty sentence");
  const int n = static_cast<int>(words.size());

  std::vector<std::string> missing;
  for (const std::string& w : words)
    if (!g.has_word(w)) missing.push_back(w);
  if (!missing.empty()) throw UnknownWordError(std::move(missing));

  NfKeyTable table;
  struct Rep {
    TreePtr parse;
    int candidates = 0;
  };
  std::unordered_map<const NfKeyTable::Node*, Rep> reps;
  auto cell_index = [n](int b, int e) {
    return static_cast<std::size_t>(b) * (n + 1) + e;
  };
  std::vector<std::vector<const NfKeyTable::Node*>> cells(
      static_cast<std::size_t>(n) * (n + 1));

  for (int i = 0; i < n; ++i)
    for (Cat c : g.categories_of(words[i])) {
      const NfKeyTable::Node* key = table.leaf(i, c);
      reps.emplace(key, Rep{ParseTree::leaf(i, words[i], c), 1});
      cells[cell_index(i, i + 1)].push_back(key);
    }

  for (int width = 2; width <= n; ++width)
    for (int start = 0; start + width <= n; ++start) {
      int end = start + width;
      for (int mid = start + 1; mid < end; ++mid)
        for (const NfKeyTable::Node* lkey : cells[cell_index(start, mid)])
          for (const NfKeyTable::Node* rkey : cells[cell_index(mid, end)]) {
            TreePtr beta = reps.at(lkey).parse;
            TreePtr gamma = reps.at(rkey).parse;
            for (const RuleInstance& rule :
                 enumerate_rules(beta->category(), gamma->category(),
                                 g.policy().max_degree, false)) {
              if (!rule_allowed(g, rule)) continue;
              TreePtr candidate = ParseTree::node(rule, beta, gamma);
              const NfKeyTable::Node* key = table.combine(rule.kind, lkey, rkey);
              if (key->category != rule.output)
                throw std::logic_error("parse_canonical: NF category mismatch");
              auto [it, fresh] = reps.try_emplace(key, Rep{candidate, 1});
              if (fresh) {
                cells[cell_index(start, end)].push_back(key);
              } else {
                ++it->second.candidates;
                if (preferable_to(preference, candidate, it->second.parse))
                  it->second.parse = std::move(candidate);
              }
            }
          }
    }

  CanonicalChart out;
  out.width_ = n;
  out.words_ = words;
  out.cells_.resize(cells.size());
  for (std::size_t ci = 0; ci < cells.size(); ++ci)
    for (const NfKeyTable::Node* key : cells[ci]) {
      const Rep& rep = reps.at(key);
      out.cells_[ci].push_back(CanonicalChart::Entry{
          rep.parse, table.materialize(key, words), key->seqno, rep.candidates});
    }
  for (const CanonicalChart::Entry& e : out.cells_[cell_index(0, n)])
    if (e.parse->category() == g.target()) out.target_parses_.push_back(e);
  return out;
}

}  // namespace ccgnf
