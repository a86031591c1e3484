#pragma once

// MSO[<] formulas with language predicates.
//
// Prefix syntax (`;` starts a comment):
//   true  false
//   (< x y)               x < y
//   (in x X)              x ∈ X
//   (letter x a)          position x carries letter a
//   (L name X1 ... Xk)    the language `name` holds of the partition X1..Xk
//   (not f)  (and f g ...)  (or f g ...)  (implies f g)  (iff f g)
//   (exists x pos f)  (forall X set f)
// Identifiers start with a letter or `_` and continue with letters, digits,
// `_` or `'`.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "omegaext/words.hpp"

namespace omegaext {

enum class Sort { kPosition, kSet };

class Formula {
 public:
  enum class Kind {
    kTrue,
    kFalse,
    kLess,
    kIn,
    kLetter,
    kLanguage,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kExists,
    kForall,
  };

  static Formula truth(bool value);
  static Formula less(std::string x, std::string y);
  static Formula in(std::string x, std::string set);
  static Formula letter(std::string x, Symbol a);
  static Formula language(std::string name, std::vector<std::string> sets);
  static Formula negate(Formula f);
  /// n-ary; with no operands these are true and false.
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula f, Formula g);
  static Formula iff(Formula f, Formula g);
  static Formula exists(std::string var, Sort sort, Formula body);
  static Formula forall(std::string var, Sort sort, Formula body);

  Kind kind() const noexcept { return node_->kind; }
  /// Variable names: both operands of <, (x, X) of ∈, x of letter, the
  /// bound variable of a quantifier, and the arguments of an L-atom.
  const std::vector<std::string>& vars() const noexcept { return node_->vars; }
  Symbol letter_value() const noexcept { return node_->letter; }
  /// Predicate name of an L-atom.
  const std::string& name() const noexcept { return node_->name; }
  Sort sort() const noexcept { return node_->sort; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }

  bool is_quantifier() const noexcept {
    return kind() == Kind::kExists || kind() == Kind::kForall;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::vector<std::string> vars{};
    Symbol letter = 0;
    std::string name{};
    Sort sort = Sort::kPosition;
    std::vector<Formula> children{};
  };
  explicit Formula(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  std::shared_ptr<const Node> node_;
};

struct FreeVariable {
  std::string name;
  Sort sort;
  friend auto operator<=>(const FreeVariable&, const FreeVariable&) = default;
};

/// Free variables with the sort implied by their use, sorted by name.
/// Throws `InvalidArgument` when a variable is used with both sorts.
std::vector<FreeVariable> free_variables(const Formula& f);

/// Scoping problems: sort clashes, a variable bound twice along a path, or
/// an L-atom whose arity differs from `arities` (name → arity, when given).
std::vector<std::string> scope_errors(
    const Formula& f, const std::map<std::string, std::size_t>* arities = nullptr);

/// Node count.
std::size_t formula_size(const Formula& f);
/// Longest root-to-leaf path, counting nodes.
std::size_t formula_depth(const Formula& f);
std::size_t count_language_atoms(const Formula& f);
/// Nesting depth of first-order quantifiers.
std::size_t position_quantifier_rank(const Formula& f);
bool has_set_quantifier(const Formula& f);

/// Throws `ParseError` with a position on malformed input.
Formula parse_formula(std::string_view text);
/// Prefix syntax; `parse_formula(format_formula(f)) == f`.
std::string format_formula(const Formula& f);
/// Mathematical notation for reading, e.g. ∀x. ∃y. (x < y ∧ a(y)).
std::string pretty_formula(const Formula& f);

}  // namespace omegaext
