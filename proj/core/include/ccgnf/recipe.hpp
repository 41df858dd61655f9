#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccgnf/tree.hpp"

namespace ccgnf {

class Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

// Lambda term over leaf variables describing how word meanings combine; the
// intensional meaning of a derivation. Bound variables use de Bruijn indices,
// so alpha-equivalence is plain structural equality.
class Recipe {
 public:
  enum class Kind : unsigned char { LeafVar, BoundVar, Lam, App };

  static RecipePtr leaf_var(int position);
  static RecipePtr bound_var(int index);
  static RecipePtr lam(RecipePtr body);
  static RecipePtr app(RecipePtr fun, RecipePtr arg);

  Kind kind() const { return kind_; }
  int position() const;      // LeafVar
  int index() const;         // BoundVar
  const RecipePtr& body() const;
  const RecipePtr& fun() const;
  const RecipePtr& arg() const;

 private:
  Recipe() = default;

  Kind kind_ = Kind::LeafVar;
  int value_ = 0;  // position or index
  RecipePtr a_;    // body or fun
  RecipePtr b_;    // arg
};

// The static recipe of a derivation. Composition of degree n with functor
// recipe f and secondary recipe g yields λc1...λcn. f(g(c1)...(cn)) (degree 0
// is plain f(g)); substitution yields λz. f(z)(g(z)). No normalization here.
RecipePtr recipe_of(const TreePtr& tree);

struct ReductionBudgetExceeded : std::runtime_error {
  explicit ReductionBudgetExceeded(int steps);
  int steps;
};

// Full beta-normal form by leftmost-outermost reduction, capture-avoiding.
// Throws ReductionBudgetExceeded after max_steps beta steps.
RecipePtr beta_normalize(const RecipePtr& r, int max_steps = 10000);

bool is_beta_normal(const RecipePtr& r);

// Structural equality; with de Bruijn binders this is equality up to renaming.
// Leaf variables compare by position.
bool alpha_equal(const RecipePtr& a, const RecipePtr& b);

// λ-prefix rendering with leaf variables shown as word_position, e.g.
// `John_0(likes_1(Mary_2))`.
std::string render_recipe(const RecipePtr& r, const std::vector<std::string>& words);

// Canonical serialization usable as a hash key.
std::string recipe_key(const RecipePtr& r);

// Key identifying the reading of a parse: the lexical categories it chose for
// each leaf plus its beta-normal recipe. Parses that pick different lexical
// entries are analyses of different readings even when the bare recipes
// coincide.
std::string reading_key(const TreePtr& tree);

// Partition by reading, classes ordered by first appearance. All trees must
// span the same words.
std::vector<std::vector<TreePtr>> group_into_classes(const std::vector<TreePtr>& trees);

}  // namespace ccgnf
