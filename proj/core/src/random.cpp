#include "omegaext/random.hpp"

namespace omegaext {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FiniteWord random_word(const Alphabet& alphabet, std::size_t length, Rng& rng) {
  FiniteWord w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
  }
  return w;
}

UPWord random_up_word(const Alphabet& alphabet, std::size_t max_prefix,
                      std::size_t max_period, Rng& rng) {
  FiniteWord prefix = random_word(alphabet, uniform(rng, 0, max_prefix), rng);
  FiniteWord period = random_word(alphabet, uniform(rng, 1, max_period), rng);
  return UPWord(std::move(prefix), std::move(period));
}

std::vector<UPWord> all_up_words(const Alphabet& alphabet,
                                 std::size_t max_prefix,
                                 std::size_t max_period) {
  std::vector<UPWord> out;
  const auto prefixes = words_up_to(alphabet, max_prefix);
  const auto periods = words_up_to(alphabet, max_period);
  for (const auto& u : prefixes) {
    for (const auto& v : periods) {
      if (!v.empty()) out.emplace_back(u, v);
    }
  }
  return out;
}

BuchiAutomaton random_buchi(const Alphabet& alphabet, std::size_t max_states,
                            Rng& rng, double density) {
  const std::size_t n = uniform(rng, 1, max_states);
  BuchiAutomaton a(alphabet, n);
  std::bernoulli_distribution coin(0.5), edge(density);
  for (State q = 0; q < n; ++q) {
    a.set_initial(q, coin(rng));
    a.set_accepting(q, coin(rng));
    for (Symbol s : alphabet.letters()) {
      for (State r = 0; r < n; ++r) {
        if (edge(rng)) a.add_transition(q, s, r);
      }
    }
  }
  if (a.initial_states().empty()) a.set_initial(0);
  return a;
}

}  // namespace omegaext
