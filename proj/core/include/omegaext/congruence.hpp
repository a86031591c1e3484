#pragma once

// Bounded checks of the ω-congruence conditions against a language oracle:
// infinite-product recognition for a classifier, and Arnold / right
// congruence classes of a language.

#include <optional>
#include <string>
#include <vector>

#include "omegaext/classifier.hpp"
#include "omegaext/language.hpp"

namespace omegaext {

struct Condition2Options {
  std::size_t word_bound = 2;   // uᵢ ranges over Σ^{1..word_bound}
  std::size_t head_bound = 2;   // number of head words
  std::size_t cycle_bound = 2;  // number of cycle words (>= 1)
};

struct Condition2Result {
  std::optional<Condition2ViolationWitness> witness;
  std::size_t tested = 0;
  /// Pairs skipped because a product erased to a finite word.
  std::size_t skipped = 0;
};

/// Compares u₁u₂⋯ with the product of the classes' shortest nonempty
/// representatives over every eventually periodic sequence within bounds.
/// Oracle errors other than `NotAnOmegaWord` are rethrown with context.
/// With `replacements`, each uᵢ is replaced by the word given for its class
/// instead (classes without an entry keep their representative).
Condition2Result check_condition2_bounded(
    const Classifier& c, const LanguageOracle& oracle,
    const Condition2Options& options = {},
    const LanguageOracle::Replacements* replacements = nullptr);

/// A context distinguishing u from u'.  `kind` is "wuv" for w·u·x·y^ω
/// (v = x·y^ω) and "w(uv)^w" for w·(u·x)^ω (y unused).
struct ArnoldContext {
  std::string kind;
  FiniteWord w;
  FiniteWord x;
  FiniteWord y;
};

struct ArnoldResult {
  bool equivalent = true;
  std::optional<ArnoldContext> context;
};

ArnoldResult arnold_equiv_bounded(const LanguageOracle& oracle,
                                  const FiniteWord& u, const FiniteWord& u_prime,
                                  std::size_t context_bound);

struct ArnoldClasses {
  /// Classes in order of their shortlex-least member; members shortlex.
  std::vector<std::vector<FiniteWord>> classes;
  bool transitive = true;
  /// Two words in one closure class that the pairwise check separates.
  std::optional<std::pair<FiniteWord, FiniteWord>> non_transitive_pair;
};

ArnoldClasses arnold_classes_bounded(const LanguageOracle& oracle,
                                     std::size_t word_bound,
                                     std::size_t context_bound);

struct RightCongruenceResult {
  bool equivalent = true;
  std::optional<UPWord> tail;
};

RightCongruenceResult right_congruence_bounded(const LanguageOracle& oracle,
                                               const FiniteWord& u,
                                               const FiniteWord& u_prime,
                                               std::size_t tail_bound);

}  // namespace omegaext
