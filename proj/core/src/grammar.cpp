#include "ccgnf/grammar.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace ccgnf {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

LoadError::LoadError(std::size_t line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}

Grammar::Grammar(std::vector<LexEntry> entries, RulePolicy policy, Cat target)
    : entries_(std::move(entries)), policy_(std::move(policy)), target_(target) {
  if (target_ == nullptr) throw std::invalid_argument("grammar target category is null");
  for (const LexEntry& e : entries_) {
    if (e.category == nullptr)
      throw std::invalid_argument("null category for word '" + e.word + "'");
    std::vector<Cat>& cats = lexicon_[e.word];
    if (std::find(cats.begin(), cats.end(), e.category) != cats.end())
      throw std::invalid_argument("duplicate lexicon entry: " + e.word + " := " +
                                  e.category->str());
    cats.push_back(e.category);
    max_arity_ = std::max(max_arity_, e.category->arity());
  }
}

const std::vector<Cat>& Grammar::categories_of(const std::string& word) const {
  static const std::vector<Cat> kEmpty;
  auto it = lexicon_.find(word);
  return it == lexicon_.end() ? kEmpty : it->second;
}

std::vector<LexEntry> load_lexicon(std::istream& in) {
  std::vector<LexEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw LoadError(lineno, "expected `word<TAB>category`");
    std::string word = trim(line.substr(0, tab));
    std::string cat_text = trim(line.substr(tab + 1));
    if (word.empty()) throw LoadError(lineno, "empty word");
    Cat cat;
    try {
      cat = Category::parse(cat_text);
    } catch (const CategorySyntaxError& e) {
      throw LoadError(lineno, std::string("bad category: ") + e.what());
    }
    for (const LexEntry& prev : entries)
      if (prev.word == word && prev.category == cat)
        throw LoadError(lineno, "duplicate entry: " + word + " := " + cat->str());
    entries.push_back(LexEntry{std::move(word), cat});
  }
  return entries;
}

namespace {

bool parse_bool(const std::string& value, std::size_t lineno) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw LoadError(lineno, "expected boolean, got '" + value + "'");
}

RuleKind parse_kind(const std::string& text, std::size_t lineno) {
  if (text.size() < 2) throw LoadError(lineno, "bad rule kind '" + text + "'");
  Slash dir;
  if (text[0] == '>') dir = Slash::Forward;
  else if (text[0] == '<') dir = Slash::Backward;
  else throw LoadError(lineno, "bad rule kind '" + text + "'");
  if (text[1] == 'S') {
    if (text.size() != 2) throw LoadError(lineno, "bad rule kind '" + text + "'");
    return RuleKind::substitute(dir);
  }
  if (text[1] != 'B') throw LoadError(lineno, "bad rule kind '" + text + "'");
  try {
    std::size_t used = 0;
    int degree = std::stoi(text.substr(2), &used);
    if (used != text.size() - 2 || degree < 0) throw std::invalid_argument("");
    return RuleKind::compose(dir, degree);
  } catch (const std::exception&) {
    throw LoadError(lineno, "bad rule kind '" + text + "'");
  }
}

Cat parse_cat_or_fail(const std::string& text, std::size_t lineno) {
  try {
    return Category::parse(text);
  } catch (const CategorySyntaxError& e) {
    throw LoadError(lineno, std::string("bad category: ") + e.what());
  }
}

// block = <left> + <right> -> <output> [<kind>]
BlockedRule parse_block(const std::string& value, std::size_t lineno) {
  std::size_t open = value.rfind('[');
  std::size_t close = value.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw LoadError(lineno, "block line needs a trailing [kind]");
  RuleKind kind = parse_kind(trim(value.substr(open + 1, close - open - 1)), lineno);
  std::string lhs = value.substr(0, open);
  std::size_t arrow = lhs.find("->");
  if (arrow == std::string::npos) throw LoadError(lineno, "block line needs `->`");
  std::size_t plus = lhs.find('+');
  if (plus == std::string::npos || plus > arrow)
    throw LoadError(lineno, "block line needs `<left> + <right>`");
  Cat left = parse_cat_or_fail(trim(lhs.substr(0, plus)), lineno);
  Cat right = parse_cat_or_fail(trim(lhs.substr(plus + 1, arrow - plus - 1)), lineno);
  Cat stated = parse_cat_or_fail(trim(lhs.substr(arrow + 2)), lineno);
  Cat actual = apply_rule(kind, left, right);
  if (actual == nullptr)
    throw LoadError(lineno, "rule " + kind.name() + " does not apply to " +
                                left->str() + " + " + right->str());
  if (actual != stated)
    throw LoadError(lineno, "stated output " + stated->str() + " does not match " +
                                kind.name() + " output " + actual->str());
  return BlockedRule{left, right, kind};
}

}  // namespace

PolicyConfig load_policy(std::istream& in) {
  PolicyConfig config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) throw LoadError(lineno, "expected key=value");
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key == "max_degree") {
      try {
        std::size_t used = 0;
        config.policy.max_degree = std::stoi(value, &used);
        if (used != value.size() || config.policy.max_degree < 0)
          throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw LoadError(lineno, "max_degree must be a non-negative integer");
      }
    } else if (key == "allow_crossing") {
      config.policy.allow_crossing = parse_bool(value, lineno);
    } else if (key == "enable_substitution") {
      config.policy.enable_substitution = parse_bool(value, lineno);
    } else if (key == "target") {
      config.target = parse_cat_or_fail(value, lineno);
    } else if (key == "block") {
      config.policy.blocked.insert(parse_block(value, lineno));
    } else {
      throw LoadError(lineno, "unknown key '" + key + "'");
    }
  }
  return config;
}

RulePolicy pure_policy(bool with_substitution) {
  RulePolicy policy;
  policy.max_degree = kUnboundedDegree;
  policy.allow_crossing = true;
  policy.enable_substitution = with_substitution;
  return policy;
}

bool rule_allowed(const Grammar& g, const RuleInstance& r) {
  const RulePolicy& p = g.policy();
  if (r.kind.op == RuleOp::Compose) {
    if (r.kind.degree > p.max_degree) return false;
  } else {
    if (!p.enable_substitution) return false;
  }
  if (!p.allow_crossing && is_crossing(r)) return false;
  if (!p.blocked.empty() && p.blocked.count(BlockedRule{r.left, r.right, r.kind}) > 0)
    return false;
  return true;
}

}  // namespace ccgnf
