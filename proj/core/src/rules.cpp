#include "ccgnf/rules.hpp"

#include <algorithm>
#include <utility>

namespace ccgnf {

std::string RuleKind::name() const {
  std::string prefix = (dir == Slash::Forward) ? ">" : "<";
  if (op == RuleOp::Substitute) return prefix + "S";
  return prefix + "B" + std::to_string(degree);
}

namespace {

// Peels the n outermost (slash, arg) pairs off c. Returns the remaining
// category and fills `pairs` outermost-first, or nullptr if c is too shallow.
Cat peel(Cat c, int n, std::vector<std::pair<Slash, Cat>>& pairs) {
  for (int i = 0; i < n; ++i) {
    if (c->atomic()) return nullptr;
    pairs.emplace_back(c->dir(), c->arg());
    c = c->result();
  }
  return c;
}

Cat reattach(Cat base, const std::vector<std::pair<Slash, Cat>>& pairs) {
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    base = Category::make(base, it->first, it->second);
  return base;
}

}  // namespace

Cat try_compose(Cat left, Cat right, Slash dir, int degree) {
  if (degree < 0) throw std::invalid_argument("composition degree must be >= 0");
  std::vector<std::pair<Slash, Cat>> pairs;
  pairs.reserve(static_cast<std::size_t>(degree));
  if (dir == Slash::Forward) {
    if (left->atomic() || left->dir() != Slash::Forward) return nullptr;
    Cat stripped = peel(right, degree, pairs);
    if (stripped != left->arg()) return nullptr;
    return reattach(left->result(), pairs);
  }
  if (right->atomic() || right->dir() != Slash::Backward) return nullptr;
  Cat stripped = peel(left, degree, pairs);
  if (stripped != right->arg()) return nullptr;
  return reattach(right->result(), pairs);
}

Cat try_substitute(Cat left, Cat right, Slash dir) {
  if (left->atomic() || right->atomic()) return nullptr;
  // The two operands must share the same outermost |1 and z.
  if (left->dir() != right->dir() || left->arg() != right->arg()) return nullptr;
  if (dir == Slash::Forward) {
    Cat functor = left->result();  // x/y
    if (functor->atomic() || functor->dir() != Slash::Forward) return nullptr;
    if (right->result() != functor->arg()) return nullptr;
    return Category::make(functor->result(), left->dir(), left->arg());
  }
  Cat functor = right->result();  // x\y
  if (functor->atomic() || functor->dir() != Slash::Backward) return nullptr;
  if (left->result() != functor->arg()) return nullptr;
  return Category::make(functor->result(), left->dir(), left->arg());
}

Cat apply_rule(const RuleKind& kind, Cat left, Cat right) {
  if (kind.op == RuleOp::Compose) return try_compose(left, right, kind.dir, kind.degree);
  return try_substitute(left, right, kind.dir);
}

std::optional<RuleInstance> instantiate(const RuleKind& kind, Cat left, Cat right) {
  Cat out = apply_rule(kind, left, right);
  if (out == nullptr) return std::nullopt;
  return RuleInstance{kind, left, right, out};
}

bool is_crossing(const RuleInstance& inst) {
  if (inst.kind.op == RuleOp::Substitute) {
    // |1 is the outermost slash shared by both operands.
    Slash outer = inst.left->dir();
    return outer != inst.kind.dir;
  }
  if (inst.kind.degree == 0) return false;
  Cat secondary = (inst.kind.dir == Slash::Forward) ? inst.right : inst.left;
  for (int i = 0; i < inst.kind.degree; ++i) {
    if (secondary->dir() != inst.kind.dir) return true;
    secondary = secondary->result();
  }
  return false;
}

std::vector<RuleInstance> enumerate_rules(Cat left, Cat right, int max_degree,
                                          bool with_substitution) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  // For a fixed pair and direction at most one composition degree fits: the
  // secondary shrinks strictly with each peeled slash, so the functor's
  // argument is exposed at a unique depth, if at all.
  struct Candidate {
    int degree;
    Slash dir;
    Cat output;
  };
  std::vector<Candidate> compositions;
  for (Slash dir : {Slash::Forward, Slash::Backward}) {
    Cat functor = (dir == Slash::Forward) ? left : right;
    if (functor->atomic() || functor->dir() != dir) continue;
    Cat y = functor->arg();
    Cat cur = (dir == Slash::Forward) ? right : left;
    std::vector<std::pair<Slash, Cat>> pairs;
    for (int n = 0;; ++n) {
      if (cur == y) {
        compositions.push_back(Candidate{n, dir, reattach(functor->result(), pairs)});
        break;
      }
      if (cur->atomic() || n >= max_degree) break;
      pairs.emplace_back(cur->dir(), cur->arg());
      cur = cur->result();
    }
  }
  std::sort(compositions.begin(), compositions.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.dir == Slash::Forward && b.dir == Slash::Backward;
            });

  std::vector<RuleInstance> out;
  for (const Candidate& c : compositions)
    out.push_back(RuleInstance{RuleKind::compose(c.dir, c.degree), left, right, c.output});
  if (with_substitution) {
    for (Slash dir : {Slash::Forward, Slash::Backward}) {
      if (Cat c = try_substitute(left, right, dir))
        out.push_back(RuleInstance{RuleKind::substitute(dir), left, right, c});
    }
  }
  return out;
}

}  // namespace ccgnf
