#pragma once

// Nondeterministic Büchi automata over a finite alphabet.
//
// Text format (one item per line, `//` starts a comment line):
//   alphabet a b
//   states 2
//   initial 0
//   accepting 1
//   0 a 1
//   1 b 0
// `format_buchi` emits transitions sorted by (source, letter index, target),
// so parse/format round-trips on canonical text.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegaext/words.hpp"

namespace omegaext {

using State = std::uint32_t;

struct Transition {
  State from;
  Symbol letter;
  State to;
  friend bool operator==(const Transition&, const Transition&) = default;
};

class BuchiAutomaton {
 public:
  BuchiAutomaton(Alphabet alphabet, std::size_t num_states);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return initial_.size(); }
  std::size_t num_transitions() const noexcept { return num_transitions_; }

  /// Adds a fresh state and returns its id.
  State add_state(bool initial = false, bool accepting = false);
  /// Duplicate transitions are ignored.
  void add_transition(State from, Symbol letter, State to);
  void set_initial(State q, bool value = true);
  void set_accepting(State q, bool value = true);

  bool is_initial(State q) const { return initial_.at(q) != 0; }
  bool is_accepting(State q) const { return accepting_.at(q) != 0; }
  std::vector<State> initial_states() const;
  std::vector<State> accepting_states() const;

  /// Successors of `q` under the letter with alphabet index `letter_index`,
  /// sorted ascending.
  const std::vector<State>& successors(State q, std::size_t letter_index) const {
    return succ_[q * alphabet_.size() + letter_index];
  }
  /// All transitions in (source, letter index, target) order.
  std::vector<Transition> transitions() const;

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::vector<std::uint8_t> initial_;
  std::vector<std::uint8_t> accepting_;
  std::vector<std::vector<State>> succ_;
  std::size_t num_transitions_ = 0;
};

/// Caps for the Ramsey complement.
struct ComplementOptions {
  std::size_t max_states = 1'000'000;
  std::size_t max_monoid_elements = 200'000;
};

/// Witness search result: `witness` is set iff the language is nonempty.
struct EmptinessResult {
  bool empty = true;
  std::optional<UPWord> witness;
};

/// Membership of a lasso word.  Throws `AlphabetMismatch` on foreign letters.
bool accepts_up(const BuchiAutomaton& a, const UPWord& w);

/// L(a) ∩ L(b) via the two-phase product.
BuchiAutomaton intersect(const BuchiAutomaton& a, const BuchiAutomaton& b);
/// L(a) ∪ L(b) via disjoint union.
BuchiAutomaton unite(const BuchiAutomaton& a, const BuchiAutomaton& b);
/// Σ^ω \ L(a) via the transition-monoid (Ramsey) construction.  Throws
/// `BudgetExceeded` when a cap in `options` is crossed.
BuchiAutomaton complement(const BuchiAutomaton& a,
                          const ComplementOptions& options = {});

EmptinessResult is_empty(const BuchiAutomaton& a);

/// h(L(a)) for a letter-to-letter `h` with source alphabet equal to a's.
BuchiAutomaton map_letters(const BuchiAutomaton& a, const Homomorphism& h);
/// h⁻¹(L(a)) for a letter-to-letter `h` whose images lie in a's alphabet.
BuchiAutomaton inverse_map_letters(const BuchiAutomaton& a,
                                   const Homomorphism& h);

/// Keeps states that are reachable and can reach an accepting cycle.
/// Language preserving; the result may have zero states.
BuchiAutomaton trim(const BuchiAutomaton& a);

/// A word in exactly one of the two languages, if any.
std::optional<UPWord> distinguishing_word(const BuchiAutomaton& a,
                                          const BuchiAutomaton& b,
                                          const ComplementOptions& options = {});
bool equivalent(const BuchiAutomaton& a, const BuchiAutomaton& b,
                const ComplementOptions& options = {});

// Small reference automata.
BuchiAutomaton empty_automaton(const Alphabet& alphabet);
BuchiAutomaton universal_automaton(const Alphabet& alphabet);
/// Words with infinitely many occurrences of `letter`.
BuchiAutomaton infinitely_many(const Alphabet& alphabet, Symbol letter);
/// The single word letter^ω.
BuchiAutomaton only_letter(const Alphabet& alphabet, Symbol letter);

BuchiAutomaton parse_buchi(std::string_view text);
std::string format_buchi(const BuchiAutomaton& a);

}  // namespace omegaext
