#pragma once

// Finite-word machinery: rational transducers, syntactic right congruences
// of languages of finite words, membership in the separator languages
//   L₁ = { u#u′ : u ∼ u′ }
//   L₂ = { w₁#⋯#w_n#v₁ρ#⋯ρ#v_mρ# : w₁ ∼ v₁, w_n ∼ v_m, the wᵢ pairwise ≁,
//          the vⱼ pairwise ≁, wᵢ ∼ vⱼ ⇒ wᵢ₊₁ ∼ vⱼ₊₁ for i < n, j < m }
// and loop representations { w·v^ω : v ∈ L }.
//
// Inside words ρ# is the single symbol '%'; text formats write it as "%#".

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "omegaext/buchi.hpp"
#include "omegaext/language.hpp"
#include "omegaext/words.hpp"

namespace omegaext {

// ---------------------------------------------------------------- Transducers

struct TransducerEdge {
  State from;
  State to;
  FiniteWord input;
  FiniteWord output;
};

class RationalTransducer {
 public:
  RationalTransducer(Alphabet input, Alphabet output, std::size_t num_states);

  /// Throws `AlphabetMismatch` on labels outside the declared alphabets.
  void add_edge(State from, State to, FiniteWord input, FiniteWord output);
  void set_initial(State q);
  void set_final(State q);
  State add_state();

  const Alphabet& input_alphabet() const noexcept { return input_; }
  const Alphabet& output_alphabet() const noexcept { return output_; }
  std::size_t num_states() const noexcept { return finals_.size(); }
  const std::vector<State>& initial_states() const noexcept { return initial_; }
  bool is_final(State q) const { return finals_.at(q) != 0; }
  const std::vector<TransducerEdge>& edges() const noexcept { return edges_; }

 private:
  Alphabet input_;
  Alphabet output_;
  std::vector<State> initial_;
  std::vector<std::uint8_t> finals_;
  std::vector<TransducerEdge> edges_;
};

struct TransducerImage {
  std::set<FiniteWord> outputs;
  /// Some run was cut off because its output outgrew the cap.
  bool truncated = false;
};

/// All outputs of accepting runs on `w` whose output has length at most
/// `output_cap`.
TransducerImage apply_transducer(const RationalTransducer& t, const FiniteWord& w,
                                 std::size_t output_cap = 64);

RationalTransducer identity_transducer(const Alphabet& sigma);
/// Every letter of `sigma` maps to ε; the output alphabet is `output`.
RationalTransducer erasing_transducer(const Alphabet& sigma, const Alphabet& output);
/// u ↦ u#u for |u| ≤ max_length, remembering u in the state.
RationalTransducer copy_transducer(const Alphabet& sigma, std::size_t max_length);

// --------------------------------------------------------- Finite languages

struct FiniteLanguageOracle {
  std::string name;
  Alphabet alphabet;
  std::function<bool(const FiniteWord&)> contains;
  /// Exact u ∼ u′, when known.
  std::function<bool(const FiniteWord&, const FiniteWord&)> equivalent{};
};

/// { aⁿbⁿ : n ≥ 1 } with its exact right congruence: aⁱ ∼ aⁱ′ iff i = i′,
/// aⁱbʲ ∼ aⁱ′bʲ′ (1 ≤ j ≤ i) iff i − j = i′ − j′, and all words that are
/// no prefix of a member are equivalent.
FiniteLanguageOracle oracle_anbn();

/// `anbn`, or `anbn-bounded` for the same language without the exact ∼.
FiniteLanguageOracle make_finite_oracle(std::string_view name);

struct CongruenceVerdict {
  bool equivalent = false;
  /// From the oracle's exact decision rather than a bounded search.
  bool exact = false;
  /// A suffix separating the two words, when one was found.
  std::optional<FiniteWord> suffix;
};

/// Exact when the oracle decides ∼; otherwise no separating suffix of
/// length ≤ `suffix_bound`.
CongruenceVerdict right_congruence_finite(const FiniteLanguageOracle& L, const FiniteWord& u,
                                          const FiniteWord& u2,
                                          std::size_t suffix_bound = 8);
/// The bounded search alone, ignoring any exact decision.
CongruenceVerdict right_congruence_bounded(const FiniteLanguageOracle& L, const FiniteWord& u,
                                           const FiniteWord& u2, std::size_t suffix_bound);

// --------------------------------------------------------- Separated words

inline constexpr Symbol kHash = '#';
inline constexpr Symbol kRhoHash = '%';

/// w₁#⋯#w_n#v₁ρ#⋯ρ#v_mρ# with n, m ≥ 1.
struct SeparatedWord {
  std::vector<FiniteWord> w;
  std::vector<FiniteWord> v;
};

/// Reads the text form, where "%#" is ρ#.  Throws `ParseError` on a lone %.
FiniteWord parse_separator_text(std::string_view text);
std::string format_separator_text(const FiniteWord& s);

/// Throws `ParseError` unless `s` has the shape above.
SeparatedWord parse_separated(const FiniteWord& s);
FiniteWord format_separated(const SeparatedWord& s);

struct MembershipVerdict {
  bool member = false;
  bool exact = false;
};

/// Throws `InvalidArgument` unless `s` has exactly one #.
MembershipVerdict member_L1(const FiniteLanguageOracle& L, const FiniteWord& s,
                            std::size_t suffix_bound = 8);
/// Throws `ParseError` when `s` is not a separated word.
MembershipVerdict member_L2(const FiniteLanguageOracle& L, const FiniteWord& s,
                            std::size_t suffix_bound = 8);

/// Erases every letter except # and ρ#.
FiniteWord project_to_separators(const FiniteWord& s);

struct L2Census {
  std::size_t max_length = 0;
  /// Separated words examined; the search skips only extensions of prefixes
  /// that already break a condition on completed segments.
  std::size_t examined = 0;
  std::size_t members = 0;
  /// Members whose separator counts differ.
  std::vector<FiniteWord> unequal;
  /// n with #ⁿρ#ⁿ the projection of some member.
  std::set<std::size_t> attained;
  bool exact = false;
};

/// Every member of L₂ of length ≤ max_length (ρ# counting as one symbol).
L2Census census_L2(const FiniteLanguageOracle& L, std::size_t max_length,
                   std::size_t suffix_bound = 8);

/// { x·y^ω : some rotation r of y's primitive root has rᵏ ∈ L, 1 ≤ k ≤ K }.
LanguageOracle loop_representation(const FiniteLanguageOracle& L, std::size_t power_bound = 16);

}  // namespace omegaext
