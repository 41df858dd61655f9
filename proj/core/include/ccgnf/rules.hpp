#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccgnf/category.hpp"

namespace ccgnf {

enum class RuleOp : unsigned char { Compose, Substitute };

// A binary rule template instantiation point: generalized composition of some
// degree (degree 0 is plain application) or substitution, in either direction.
struct RuleKind {
  RuleOp op = RuleOp::Compose;
  Slash dir = Slash::Forward;
  int degree = 0;  // composition degree; fixed at 1 for substitution

  static RuleKind compose(Slash dir, int degree) { return {RuleOp::Compose, dir, degree}; }
  static RuleKind substitute(Slash dir) { return {RuleOp::Substitute, dir, 1}; }

  bool is_application() const { return op == RuleOp::Compose && degree == 0; }
  bool is_composition() const { return op == RuleOp::Compose && degree >= 1; }

  std::string name() const;  // ">B0", "<B2", ">S", "<S"

  friend bool operator==(const RuleKind&, const RuleKind&) = default;
};

// A fully instantiated phrase-structure rule: the concrete categories it
// combines plus the category it yields (stored redundantly for blocking and
// reporting).
struct RuleInstance {
  RuleKind kind;
  Cat left = nullptr;
  Cat right = nullptr;
  Cat output = nullptr;

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

// Generalized composition. Forward of degree n combines x/y with
// y|n zn ... |2 z2 |1 z1 into x|n zn ... |2 z2 |1 z1, each |i independently
// / or \ (crossing instances included). Backward is the mirror image with the
// x\y functor on the right. Degree 0 is application. Returns nullptr when the
// categories do not fit the template.
Cat try_compose(Cat left, Cat right, Slash dir, int degree);

// Substitution. Forward: x/y|1z  y|1z -> x|1z, with matching |1 and z.
// Backward: y|1z  x\y|1z -> x|1z. Returns nullptr on mismatch.
Cat try_substitute(Cat left, Cat right, Slash dir);

// Output of `kind` applied to (left, right), or nullptr if it does not apply.
Cat apply_rule(const RuleKind& kind, Cat left, Cat right);

std::optional<RuleInstance> instantiate(const RuleKind& kind, Cat left, Cat right);

// True when any |i of the instance points against the functor's own slash,
// e.g. A/B B\C -> A\C or the backward N/N N\N -> N/N.
bool is_crossing(const RuleInstance& inst);

// Every instance with composition degree <= max_degree (plus substitution
// instances when requested) that applies to (left, right). Deterministic
// order: composition by degree then direction, then substitution.
std::vector<RuleInstance> enumerate_rules(Cat left, Cat right, int max_degree,
                                          bool with_substitution = false);

struct RuleKindHash {
  std::size_t operator()(const RuleKind& k) const {
    return std::hash<int>()((static_cast<int>(k.op) << 24) |
                            (static_cast<int>(k.dir) << 16) | k.degree);
  }
};

}  // namespace ccgnf
