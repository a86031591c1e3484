#include "omegaext/language.hpp"

#include "omegaext/error.hpp"
#include "omegaext/text.hpp"

namespace omegaext {

LanguageOracle::LanguageOracle(std::string name, Alphabet alphabet,
                               UPMembership up)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), up_(std::move(up)) {
  if (!up_) throw InvalidArgument("oracle needs a lasso membership function");
}

LanguageOracle& LanguageOracle::with_block_membership(BlockMembership block) {
  block_ = std::move(block);
  return *this;
}

LanguageOracle& LanguageOracle::with_neutral_letter(Symbol neutral) {
  alphabet_.index(neutral);
  neutral_ = neutral;
  return *this;
}

LanguageOracle& LanguageOracle::with_violation_finder(ViolationFinder finder) {
  finder_ = std::move(finder);
  return *this;
}

bool LanguageOracle::contains(const UPWord& w) const {
  alphabet_.require_word(w.prefix(), "oracle " + name_);
  alphabet_.require_word(w.period(), "oracle " + name_);
  return up_(w);
}

bool LanguageOracle::contains(const BlockWord& w) const {
  alphabet_.require_word(std::string{w.block_letter(), w.separator_letter()},
                         "oracle " + name_);
  if (block_) return block_(w);
  if (auto up = w.to_up()) return up_(*up);
  throw UnsupportedInput("oracle " + name_ + " does not decide block word " +
                         format_word(w));
}

bool LanguageOracle::contains(const OmegaWord& w) const {
  return std::visit([this](const auto& x) { return contains(x); }, w);
}

Condition2ViolationWitness LanguageOracle::find_violation(
    const Classifier& c) const {
  if (!finder_) {
    throw UnsupportedInput("oracle " + name_ + " has no violation finder");
  }
  auto w = finder_(c, nullptr);
  if (!w) throw Error("oracle " + name_ + ": violation finder returned nothing");
  return *w;
}

std::optional<Condition2ViolationWitness> LanguageOracle::find_violation(
    const Classifier& c, const Replacements& replacements) const {
  if (!finder_) {
    throw UnsupportedInput("oracle " + name_ + " has no violation finder");
  }
  return finder_(c, &replacements);
}

bool verify_witness(const LanguageOracle& oracle,
                    const Condition2ViolationWitness& w) {
  const bool a = oracle.contains(w.original);
  const bool b = oracle.contains(w.replaced);
  return a == w.original_member && b == w.replaced_member && a != b;
}

}  // namespace omegaext
