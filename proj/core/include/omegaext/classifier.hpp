#pragma once

// Finite-index equivalences on finite words, presented as a complete DFA
// whose states carry class ids: u ~ u' iff the states reached on u and u'
// carry the same id.
//
// Text format: the automaton header without an `accepting` line, one
// transition per line, and one `class q c` line per state:
//   alphabet a b
//   states 2
//   initial 0
//   0 a 1
//   0 b 0
//   1 a 0
//   1 b 1
//   class 0 0
//   class 1 1

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegaext/buchi.hpp"
#include "omegaext/monoid.hpp"
#include "omegaext/random.hpp"
#include "omegaext/words.hpp"

namespace omegaext {

using ClassId = std::uint32_t;

class Classifier {
 public:
  /// `next[q * |Σ| + x]` is the successor of q under the x-th letter.
  /// Throws `InvalidArgument` when the machine is not total or some class id
  /// labels only unreachable states.
  Classifier(Alphabet alphabet, State initial, std::vector<State> next,
             std::vector<ClassId> class_of_state);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return class_of_state_.size(); }
  State initial() const noexcept { return initial_; }
  State next(State q, std::size_t letter_index) const {
    return next_[q * alphabet_.size() + letter_index];
  }
  const std::vector<State>& transition_table() const noexcept { return next_; }
  ClassId class_of_state(State q) const { return class_of_state_.at(q); }
  const std::vector<ClassId>& classes() const noexcept { return class_of_state_; }

  State run(std::string_view w) const { return run_from(initial_, w); }
  State run_from(State q, std::string_view w) const;
  /// Throws `AlphabetMismatch` on foreign letters.
  ClassId class_of(std::string_view w) const { return class_of_state(run(w)); }

  const std::vector<std::uint8_t>& reachable() const noexcept { return reachable_; }
  /// Shortlex-least word reaching each state (empty string if unreachable).
  const std::vector<FiniteWord>& access_words() const noexcept { return access_; }
  /// Number of distinct class ids on reachable states.
  std::size_t index() const noexcept { return class_list_.size(); }
  /// Class ids on reachable states, ascending.
  const std::vector<ClassId>& class_ids() const noexcept { return class_list_; }
  /// Shortlex-least word of each class.
  std::map<ClassId, FiniteWord> representatives() const;
  /// Shortlex-least nonempty word of each class that has one.
  std::map<ClassId, FiniteWord> nonempty_representatives() const;

  /// Same machine with class ids replaced by `relabel[old id]`.
  Classifier relabelled(const std::map<ClassId, ClassId>& relabel) const;

  friend bool operator==(const Classifier&, const Classifier&) = default;

 private:
  Alphabet alphabet_;
  State initial_;
  std::vector<State> next_;
  std::vector<ClassId> class_of_state_;
  std::vector<std::uint8_t> reachable_;
  std::vector<FiniteWord> access_;
  std::vector<ClassId> class_list_;
};

/// True iff the two classifiers induce the same partition of Σ*.
bool same_partition(const Classifier& a, const Classifier& b);

enum class Side { kLeft, kRight };

/// u ~ u' but the extension on `side` by w separates them:
/// right: uw ≁ u'w; left: wu ≁ wu'.
struct Condition1Violation {
  FiniteWord u;
  FiniteWord u_prime;
  FiniteWord w;
  Side side;
  friend bool operator==(const Condition1Violation&,
                         const Condition1Violation&) = default;
};

struct Condition1Options {
  /// Cap on the transformation monoid used for left extensions.
  std::size_t max_monoid_elements = 1'000'000;
};

/// Exact decision of compatibility with concatenation.  Returns the least
/// violation under (|u|+|u'|, u, u', |w|, w, right before left), or nothing.
std::optional<Condition1Violation> check_condition1(
    const Classifier& c, const Condition1Options& options = {});

/// True iff `v` really is a violation for `c`.
bool verify_violation(const Classifier& c, const Condition1Violation& v);

struct RepairResult {
  Classifier classifier;
  std::vector<Condition1Violation> merges;
};

/// Merges the classes of the two extended words of the least violation until
/// none remain (the smaller class id survives).
RepairResult lemma_repair(const Classifier& c,
                          const Condition1Options& options = {});

/// Right Cayley machine of the transition monoid; the class of a word is its
/// monoid element.
Classifier monoid_kernel_classifier(const TransitionMonoid& m);

/// 1..max_states states, complete random transitions, classes drawn from
/// 0..max_classes-1, restricted to the reachable part.
Classifier random_classifier(const Alphabet& alphabet, std::size_t max_states,
                             std::size_t max_classes, Rng& rng);

Classifier single_class_classifier(const Alphabet& alphabet);

Classifier parse_classifier(std::string_view text);
std::string format_classifier(const Classifier& c);

}  // namespace omegaext
