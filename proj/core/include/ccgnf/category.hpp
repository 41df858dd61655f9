#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccgnf {

class Category;

// Interned handle: structurally equal categories share one node, so pointer
// equality is structural equality and a Cat can be used directly as a map key.
using Cat = const Category*;

enum class Slash : unsigned char { Forward, Backward };

constexpr char slash_char(Slash s) { return s == Slash::Forward ? '/' : '\\'; }

struct CategorySyntaxError : std::runtime_error {
  CategorySyntaxError(const std::string& msg, std::size_t pos);
  std::size_t position;
};

// An atomic symbol (S, NP, N, S_inf, ...) or a functor x/y (seeks y to the
// right) resp. x\y (seeks y to the left). Features are just distinct atom
// names; there is no unification.
class Category {
 public:
  // Atom names match [A-Za-z][A-Za-z0-9_]*.
  static Cat atom(std::string_view name);
  static Cat make(Cat result, Slash dir, Cat arg);

  // Left-associative syntax with parentheses: "S\NP/NP" is ((S\NP)/NP).
  static Cat parse(std::string_view text);

  bool atomic() const { return arg_ == nullptr; }
  const std::string& atom_name() const;
  Cat result() const;
  Slash dir() const;
  Cat arg() const;

  // Number of outermost slashes on the result spine: NP -> 0, (S\NP)/NP -> 2.
  int arity() const { return arity_; }

  const std::string& str() const { return printed_; }  // minimal parentheses
  std::string str_full() const;                        // every functor wrapped

  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;

 private:
  Category() = default;

  std::string name_;      // atoms only
  Cat result_ = nullptr;  // functors only
  Cat arg_ = nullptr;
  Slash dir_ = Slash::Forward;
  int arity_ = 0;
  std::string printed_;
};

}  // namespace ccgnf
