#pragma once

// The concrete languages.
//
//   U        over {a,b}: words with a-labelled intervals of unbounded size.
//            A lasso x·y^ω is a member iff y ∈ a⁺; a block word with block
//            letter a is a member iff its lengths are affine.
//   Uprime   over {a,b,1}: erasing every 1 gives a word of U (1 is neutral).
//   P        over {a,b}: the ultimately periodic words.
//   primes   over {a,b}: w·(aⁿb)^ω with n prime.
//   singleton:<lasso>   the single word given.
//   regular:<file>      the language of a Büchi automaton file.

#include <optional>
#include <string_view>

#include "omegaext/buchi.hpp"
#include "omegaext/language.hpp"
#include "omegaext/random.hpp"

namespace omegaext {

LanguageOracle oracle_U();
LanguageOracle oracle_Uprime();
LanguageOracle oracle_P();
LanguageOracle oracle_prime_blocks();
/// Alphabet {a,b} plus any other letters of `w0`.
LanguageOracle oracle_singleton(const UPWord& w0);
LanguageOracle oracle_regular(const BuchiAutomaton& a, std::string name = "regular");

/// Builds an oracle from its registry name (see the file comment).
LanguageOracle make_oracle(std::string_view name);

bool is_prime(std::uint64_t n);

/// A membership change caused by inserting or deleting neutral letters.
struct NeutralCounterexample {
  UPWord original;
  UPWord modified;
  bool original_member;
  bool modified_member;
};

struct NeutralTestResult {
  std::optional<NeutralCounterexample> counterexample;
  std::size_t tested = 0;
  /// Samples skipped because a word erased to a finite word.
  std::size_t skipped = 0;
};

/// Samples lasso words and compares membership after inserting the neutral
/// letter into the prefix, periodically into the period, or deleting its
/// occurrences.  Throws `InvalidArgument` when the oracle has no neutral
/// letter.
NeutralTestResult neutral_letter_property_test(const LanguageOracle& oracle,
                                               std::size_t samples,
                                               std::uint64_t seed);

/// The U′ witness for a classifier over {a,b,1}: uᵢ = aⁱb, whose product
/// a¹b a²b a³b ⋯ is in U′, against the class-wise replacement sequence.
/// Without `replacements` each class is replaced by its shortlex-least word
/// containing b, so the replaced product has a b in its period and the
/// witness always exists.  With explicit replacements the aⁱb scheme is
/// tried first, then a bounded search over eventually periodic sequences.
std::optional<Condition2ViolationWitness> violation_finder_Uprime(
    const Classifier& c, const LanguageOracle::Replacements* replacements = nullptr);

}  // namespace omegaext
