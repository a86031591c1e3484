#pragma once

// Seeded generators and exhaustive enumerators used by property tests,
// benchmarks and the CLI.

#include <random>
#include <vector>

#include "omegaext/buchi.hpp"
#include "omegaext/words.hpp"

namespace omegaext {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

FiniteWord random_word(const Alphabet& alphabet, std::size_t length, Rng& rng);

/// Prefix length in [0, max_prefix], period length in [1, max_period].
UPWord random_up_word(const Alphabet& alphabet, std::size_t max_prefix,
                      std::size_t max_period, Rng& rng);

/// Every presentation with |prefix| <= max_prefix and
/// 1 <= |period| <= max_period.
std::vector<UPWord> all_up_words(const Alphabet& alphabet,
                                 std::size_t max_prefix,
                                 std::size_t max_period);

/// 1..max_states states; each possible transition present with probability
/// `density`; each state initial / accepting with probability 1/2 (at least
/// one initial state).
BuchiAutomaton random_buchi(const Alphabet& alphabet, std::size_t max_states,
                            Rng& rng, double density = 0.35);

}  // namespace omegaext
