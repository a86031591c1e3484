#pragma once

// Transition monoid of a Büchi automaton.  An element records, for every
// ordered state pair (p, q), whether some word of the element's class leads
// from p to q, and whether it can do so visiting an accepting state after
// the first letter.  Element 0 is the identity (the class of ε).

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "omegaext/buchi.hpp"

namespace omegaext {

class TransitionMonoid {
 public:
  using Element = std::uint32_t;
  static constexpr Element kIdentity = 0;
  static constexpr std::size_t kDefaultMaxElements = 200'000;

  /// Enumerates the monoid breadth first; throws `BudgetExceeded` past
  /// `max_elements`.
  explicit TransitionMonoid(const BuchiAutomaton& a,
                            std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const noexcept { return witnesses_.size(); }
  std::size_t num_states() const noexcept { return n_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Shortest word of the element (ε for the identity).
  const FiniteWord& witness(Element e) const { return witnesses_.at(e); }
  /// True iff some nonempty word maps to `e`.
  bool reached_by_nonempty(Element e) const { return nonempty_.at(e) != 0; }
  /// Shortest nonempty word mapping to `e`; requires `reached_by_nonempty`.
  const FiniteWord& nonempty_witness(Element e) const;

  /// e·letter, by alphabet index.
  Element step(Element e, std::size_t letter_index) const {
    return table_[static_cast<std::size_t>(e) * alphabet_.size() + letter_index];
  }
  Element of_word(std::string_view w) const;
  Element multiply(Element x, Element y) const;
  bool is_idempotent(Element e) const { return multiply(e, e) == e; }

  bool path(Element e, State p, State q) const;
  bool accepting_path(Element e, State p, State q) const;

  /// States reachable from `from` (a state set) by a word of class `e`.
  std::vector<std::uint8_t> image(Element e,
                                  const std::vector<std::uint8_t>& from) const;
  /// States q with an accepting q→q path for class `e`.
  std::vector<std::uint8_t> accepting_loops(Element e) const;

 private:
  using Row = std::uint64_t;
  const Row* reach_row(Element e, State p) const {
    return data_.data() + (static_cast<std::size_t>(e) * 2 * n_ + p) * words_;
  }
  const Row* acc_row(Element e, State p) const {
    return data_.data() + (static_cast<std::size_t>(e) * 2 * n_ + n_ + p) * words_;
  }
  std::vector<Row> product(const Row* x, const Row* y) const;
  Element lookup(const std::vector<Row>& m) const;

  Alphabet alphabet_;
  std::size_t n_;
  std::size_t words_;
  std::vector<Row> data_;
  std::vector<FiniteWord> witnesses_;
  std::vector<std::uint8_t> nonempty_;
  FiniteWord identity_nonempty_witness_;
  std::vector<Element> table_;
  std::unordered_map<std::string, Element> index_;
};

}  // namespace omegaext
