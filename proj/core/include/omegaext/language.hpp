#pragma once

// Membership oracles for languages of ω-words on finitely presented words.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegaext/classifier.hpp"
#include "omegaext/words.hpp"

namespace omegaext {

/// Two infinite products that a classifier identifies but the language
/// separates.  `sequence` describes u₁, u₂, ...; `replaced` the class-wise
/// substitute sequence.  The two products are the concatenations.
struct Condition2ViolationWitness {
  std::vector<FiniteWord> head;
  std::vector<FiniteWord> cycle;
  /// Set when the original sequence is not eventually periodic (for example
  /// uᵢ = aⁱb); `head`/`cycle` are then empty.
  std::string scheme;
  std::vector<FiniteWord> replaced_head;
  std::vector<FiniteWord> replaced_cycle;
  OmegaWord original;
  OmegaWord replaced;
  bool original_member;
  bool replaced_member;
};

class LanguageOracle {
 public:
  using UPMembership = std::function<bool(const UPWord&)>;
  using BlockMembership = std::function<bool(const BlockWord&)>;
  /// Replacement word per class id (for example an opponent's responses).
  using Replacements = std::map<ClassId, FiniteWord>;
  /// With `replacements == nullptr` the finder picks its own class
  /// representatives and must return a witness; with explicit replacements
  /// it may fail to find one.
  using ViolationFinder = std::function<std::optional<Condition2ViolationWitness>(
      const Classifier&, const Replacements*)>;

  LanguageOracle(std::string name, Alphabet alphabet, UPMembership up);

  LanguageOracle& with_block_membership(BlockMembership block);
  LanguageOracle& with_neutral_letter(Symbol neutral);
  LanguageOracle& with_violation_finder(ViolationFinder finder);

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::optional<Symbol>& neutral_letter() const noexcept { return neutral_; }
  bool supports_blocks() const noexcept { return static_cast<bool>(block_); }
  bool has_violation_finder() const noexcept { return static_cast<bool>(finder_); }

  /// Throws `AlphabetMismatch` on foreign letters; propagates the
  /// membership function's `UnsupportedInput`.
  bool contains(const UPWord& w) const;
  /// Uses the block membership when present and the lasso form of
  /// eventually periodic block words otherwise; throws `UnsupportedInput`
  /// when neither applies.
  bool contains(const BlockWord& w) const;
  bool contains(const OmegaWord& w) const;

  /// Throws `UnsupportedInput` when the oracle has no finder.
  Condition2ViolationWitness find_violation(const Classifier& c) const;
  std::optional<Condition2ViolationWitness> find_violation(
      const Classifier& c, const Replacements& replacements) const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::optional<Symbol> neutral_;
  UPMembership up_;
  BlockMembership block_;
  ViolationFinder finder_;
};

/// True iff both verdicts of `w` are reproduced by `oracle` and differ.
bool verify_witness(const LanguageOracle& oracle,
                    const Condition2ViolationWitness& w);

}  // namespace omegaext
