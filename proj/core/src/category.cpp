#include "ccgnf/category.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace ccgnf {

namespace {

bool atom_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Pool {
  std::mutex mu;
  std::unordered_map<std::string, std::unique_ptr<Category>> atoms;
  std::map<std::tuple<Cat, Slash, Cat>, std::unique_ptr<Category>> functors;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

CategorySyntaxError::CategorySyntaxError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
      position(pos) {}

Cat Category::atom(std::string_view name) {
  if (name.empty() || !atom_start(name.front()))
    throw std::invalid_argument("atom name must match [A-Za-z][A-Za-z0-9_]*: '" +
                                std::string(name) + "'");
  for (char c : name)
    if (!atom_char(c))
      throw std::invalid_argument("atom name must match [A-Za-z][A-Za-z0-9_]*: '" +
                                  std::string(name) + "'");
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  auto it = p.atoms.find(std::string(name));
  if (it != p.atoms.end()) return it->second.get();
  auto node = std::unique_ptr<Category>(new Category());
  node->name_ = std::string(name);
  node->printed_ = node->name_;
  Cat res = node.get();
  p.atoms.emplace(node->name_, std::move(node));
  return res;
}

Cat Category::make(Cat result, Slash dir, Cat arg) {
  if (result == nullptr || arg == nullptr)
    throw std::invalid_argument("Category::make: null operand");
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  auto key = std::make_tuple(result, dir, arg);
  auto it = p.functors.find(key);
  if (it != p.functors.end()) return it->second.get();
  auto node = std::unique_ptr<Category>(new Category());
  node->result_ = result;
  node->dir_ = dir;
  node->arg_ = arg;
  node->arity_ = result->arity() + 1;
  node->printed_ = result->str() + slash_char(dir) +
                   (arg->atomic() ? arg->str() : "(" + arg->str() + ")");
  Cat res = node.get();
  p.functors.emplace(key, std::move(node));
  return res;
}

const std::string& Category::atom_name() const {
  if (!atomic()) throw std::logic_error("atom_name on functor category");
  return name_;
}

Cat Category::result() const {
  if (atomic()) throw std::logic_error("result on atomic category");
  return result_;
}

Slash Category::dir() const {
  if (atomic()) throw std::logic_error("dir on atomic category");
  return dir_;
}

Cat Category::arg() const {
  if (atomic()) throw std::logic_error("arg on atomic category");
  return arg_;
}

std::string Category::str_full() const {
  if (atomic()) return name_;
  return "(" + result_->str_full() + slash_char(dir_) + arg_->str_full() + ")";
}

namespace {

struct CatParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw CategorySyntaxError(msg, pos);
  }

  Cat parse_item() {
    skip_ws();
    if (pos >= text.size()) fail("expected category");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Cat inner = parse_category();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (!atom_start(c)) fail(std::string("unexpected character '") + c + "'");
    std::size_t start = pos;
    while (pos < text.size() && atom_char(text[pos])) ++pos;
    return Category::atom(text.substr(start, pos - start));
  }

  Cat parse_category() {
    Cat cat = parse_item();
    for (;;) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      if (c != '/' && c != '\\') break;
      ++pos;
      Slash dir = (c == '/') ? Slash::Forward : Slash::Backward;
      cat = Category::make(cat, dir, parse_item());
    }
    return cat;
  }
};

}  // namespace

Cat Category::parse(std::string_view text) {
  CatParser parser{text};
  Cat cat = parser.parse_category();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input after category");
  return cat;
}

}  // namespace ccgnf
