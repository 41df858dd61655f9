#include "ccgnf/recipe.hpp"

#include <unordered_map>

namespace ccgnf {

RecipePtr Recipe::leaf_var(int position) {
  if (position < 0) throw std::invalid_argument("negative leaf position");
  auto r = std::shared_ptr<Recipe>(new Recipe());
  r->kind_ = Kind::LeafVar;
  r->value_ = position;
  return r;
}

RecipePtr Recipe::bound_var(int index) {
  if (index < 0) throw std::invalid_argument("negative de Bruijn index");
  auto r = std::shared_ptr<Recipe>(new Recipe());
  r->kind_ = Kind::BoundVar;
  r->value_ = index;
  return r;
}

RecipePtr Recipe::lam(RecipePtr body) {
  if (!body) throw std::invalid_argument("null body");
  auto r = std::shared_ptr<Recipe>(new Recipe());
  r->kind_ = Kind::Lam;
  r->a_ = std::move(body);
  return r;
}

RecipePtr Recipe::app(RecipePtr fun, RecipePtr arg) {
  if (!fun || !arg) throw std::invalid_argument("null operand");
  auto r = std::shared_ptr<Recipe>(new Recipe());
  r->kind_ = Kind::App;
  r->a_ = std::move(fun);
  r->b_ = std::move(arg);
  return r;
}

int Recipe::position() const {
  if (kind_ != Kind::LeafVar) throw std::logic_error("position on non-leaf term");
  return value_;
}

int Recipe::index() const {
  if (kind_ != Kind::BoundVar) throw std::logic_error("index on non-variable term");
  return value_;
}

const RecipePtr& Recipe::body() const {
  if (kind_ != Kind::Lam) throw std::logic_error("body on non-lambda term");
  return a_;
}

const RecipePtr& Recipe::fun() const {
  if (kind_ != Kind::App) throw std::logic_error("fun on non-application term");
  return a_;
}

const RecipePtr& Recipe::arg() const {
  if (kind_ != Kind::App) throw std::logic_error("arg on non-application term");
  return b_;
}

RecipePtr recipe_of(const TreePtr& tree) {
  if (tree->is_leaf()) return Recipe::leaf_var(tree->position());
  const RuleKind& kind = tree->rule().kind;
  bool fwd = kind.dir == Slash::Forward;
  RecipePtr f = recipe_of(fwd ? tree->left() : tree->right());
  RecipePtr g = recipe_of(fwd ? tree->right() : tree->left());
  if (kind.op == RuleOp::Compose) {
    int n = kind.degree;
    RecipePtr body = std::move(g);
    for (int i = 0; i < n; ++i)
      body = Recipe::app(std::move(body), Recipe::bound_var(n - 1 - i));
    body = Recipe::app(std::move(f), std::move(body));
    for (int i = 0; i < n; ++i) body = Recipe::lam(std::move(body));
    return body;
  }
  // λz. f(z)(g(z))
  return Recipe::lam(Recipe::app(Recipe::app(std::move(f), Recipe::bound_var(0)),
                                 Recipe::app(std::move(g), Recipe::bound_var(0))));
}

ReductionBudgetExceeded::ReductionBudgetExceeded(int steps)
    : std::runtime_error("beta reduction exceeded " + std::to_string(steps) +
                         " steps"),
      steps(steps) {}

namespace {

// Shift free de Bruijn indices >= cutoff by delta.
RecipePtr shift(const RecipePtr& t, int delta, int cutoff) {
  switch (t->kind()) {
    case Recipe::Kind::LeafVar:
      return t;
    case Recipe::Kind::BoundVar:
      return t->index() >= cutoff ? Recipe::bound_var(t->index() + delta) : t;
    case Recipe::Kind::Lam:
      return Recipe::lam(shift(t->body(), delta, cutoff + 1));
    case Recipe::Kind::App:
      return Recipe::app(shift(t->fun(), delta, cutoff),
                         shift(t->arg(), delta, cutoff));
  }
  throw std::logic_error("unreachable");
}

RecipePtr substitute(const RecipePtr& t, int index, const RecipePtr& value) {
  switch (t->kind()) {
    case Recipe::Kind::LeafVar:
      return t;
    case Recipe::Kind::BoundVar:
      return t->index() == index ? value : t;
    case Recipe::Kind::Lam:
      return Recipe::lam(substitute(t->body(), index + 1, shift(value, 1, 0)));
    case Recipe::Kind::App:
      return Recipe::app(substitute(t->fun(), index, value),
                         substitute(t->arg(), index, value));
  }
  throw std::logic_error("unreachable");
}

// One leftmost-outermost beta step, or nullptr when t is already normal.
RecipePtr step(const RecipePtr& t) {
  switch (t->kind()) {
    case Recipe::Kind::LeafVar:
    case Recipe::Kind::BoundVar:
      return nullptr;
    case Recipe::Kind::Lam: {
      RecipePtr body = step(t->body());
      return body ? Recipe::lam(std::move(body)) : nullptr;
    }
    case Recipe::Kind::App: {
      if (t->fun()->kind() == Recipe::Kind::Lam)
        return shift(substitute(t->fun()->body(), 0, shift(t->arg(), 1, 0)), -1, 0);
      if (RecipePtr fun = step(t->fun())) return Recipe::app(std::move(fun), t->arg());
      if (RecipePtr arg = step(t->arg())) return Recipe::app(t->fun(), std::move(arg));
      return nullptr;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

RecipePtr beta_normalize(const RecipePtr& r, int max_steps) {
  if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
  RecipePtr cur = r;
  for (int i = 0; i < max_steps; ++i) {
    RecipePtr next = step(cur);
    if (!next) return cur;
    cur = std::move(next);
  }
  throw ReductionBudgetExceeded(max_steps);
}

bool is_beta_normal(const RecipePtr& r) {
  switch (r->kind()) {
    case Recipe::Kind::LeafVar:
    case Recipe::Kind::BoundVar:
      return true;
    case Recipe::Kind::Lam:
      return is_beta_normal(r->body());
    case Recipe::Kind::App:
      return r->fun()->kind() != Recipe::Kind::Lam && is_beta_normal(r->fun()) &&
             is_beta_normal(r->arg());
  }
  return false;
}

bool alpha_equal(const RecipePtr& a, const RecipePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Recipe::Kind::LeafVar:
      return a->position() == b->position();
    case Recipe::Kind::BoundVar:
      return a->index() == b->index();
    case Recipe::Kind::Lam:
      return alpha_equal(a->body(), b->body());
    case Recipe::Kind::App:
      return alpha_equal(a->fun(), b->fun()) && alpha_equal(a->arg(), b->arg());
  }
  return false;
}

namespace {

void render_into(const RecipePtr& r, const std::vector<std::string>& words,
                 std::vector<std::string>& binders, int& counter, std::string& out) {
  switch (r->kind()) {
    case Recipe::Kind::LeafVar: {
      std::size_t pos = static_cast<std::size_t>(r->position());
      out += pos < words.size() ? words[pos] : "w";
      out += '_';
      out += std::to_string(r->position());
      return;
    }
    case Recipe::Kind::BoundVar: {
      std::size_t depth = binders.size();
      std::size_t idx = static_cast<std::size_t>(r->index());
      out += idx < depth ? binders[depth - 1 - idx] : "?";
      return;
    }
    case Recipe::Kind::Lam: {
      std::string name = "x" + std::to_string(++counter);
      out += "\xce\xbb";  // λ
      out += name;
      out += ". ";
      binders.push_back(name);
      render_into(r->body(), words, binders, counter, out);
      binders.pop_back();
      return;
    }
    case Recipe::Kind::App: {
      bool wrap = r->fun()->kind() == Recipe::Kind::Lam;
      if (wrap) out += '(';
      render_into(r->fun(), words, binders, counter, out);
      if (wrap) out += ')';
      out += '(';
      render_into(r->arg(), words, binders, counter, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string render_recipe(const RecipePtr& r, const std::vector<std::string>& words) {
  std::string out;
  std::vector<std::string> binders;
  int counter = 0;
  render_into(r, words, binders, counter, out);
  return out;
}

std::string recipe_key(const RecipePtr& r) {
  switch (r->kind()) {
    case Recipe::Kind::LeafVar:
      return "L" + std::to_string(r->position());
    case Recipe::Kind::BoundVar:
      return "V" + std::to_string(r->index());
    case Recipe::Kind::Lam:
      return "l(" + recipe_key(r->body()) + ")";
    case Recipe::Kind::App:
      return "a(" + recipe_key(r->fun()) + "," + recipe_key(r->arg()) + ")";
  }
  throw std::logic_error("unreachable");
}

std::string reading_key(const TreePtr& tree) {
  std::string key;
  for (Cat c : leaf_categories(tree)) {
    key += c->str();
    key += '|';
  }
  key += "::";
  key += recipe_key(beta_normalize(recipe_of(tree)));
  return key;
}

std::vector<std::vector<TreePtr>> group_into_classes(const std::vector<TreePtr>& trees) {
  std::vector<std::vector<TreePtr>> classes;
  std::unordered_map<std::string, std::size_t> index;
  for (const TreePtr& t : trees) {
    std::string key = reading_key(t);
    auto [it, fresh] = index.try_emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(t);
  }
  return classes;
}

}  // namespace ccgnf
