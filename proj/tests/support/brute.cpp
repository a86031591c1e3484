#include "brute.hpp"

#include <algorithm>
#include <vector>

namespace omegaext::testing {

bool brute_accepts(const BuchiAutomaton& a, const UPWord& w) {
  const std::size_t n = a.num_states();
  const Alphabet& sigma = a.alphabet();
  std::vector<bool> current(n, false);
  for (State q : a.initial_states()) current[q] = true;
  for (Symbol s : w.prefix()) {
    std::vector<bool> next(n, false);
    for (State q = 0; q < n; ++q) {
      if (!current[q]) continue;
      for (State r : a.successors(q, sigma.index(s))) next[r] = true;
    }
    current = next;
  }

  // rel[p][q]: 0 none, 1 path, 2 path visiting an accepting state.
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
  for (State p = 0; p < n; ++p) {
    std::vector<int> frontier(n, 0);
    frontier[p] = 1;
    for (Symbol s : w.period()) {
      std::vector<int> next(n, 0);
      for (State q = 0; q < n; ++q) {
        if (!frontier[q]) continue;
        for (State r : a.successors(q, sigma.index(s))) {
          const int flag = (frontier[q] == 2 || a.is_accepting(r)) ? 2 : 1;
          next[r] = std::max(next[r], flag);
        }
      }
      frontier = next;
    }
    rel[p] = frontier;
  }

  // Closure of rel under composition (Floyd-Warshall on the max-flag lattice).
  auto closure = rel;
  for (State k = 0; k < n; ++k) {
    for (State i = 0; i < n; ++i) {
      if (!closure[i][k]) continue;
      for (State j = 0; j < n; ++j) {
        if (!closure[k][j]) continue;
        const int flag = std::max(closure[i][k], closure[k][j]);
        closure[i][j] = std::max(closure[i][j], flag);
      }
    }
  }
  for (State q = 0; q < n; ++q) {
    bool reach = current[q];
    for (State p = 0; p < n && !reach; ++p) reach = current[p] && closure[p][q];
    if (reach && closure[q][q] == 2) return true;
  }
  return false;
}

bool brute_up_equal(const UPWord& x, const UPWord& y) {
  const std::size_t horizon =
      4 * (x.presentation_size() + y.presentation_size()) *
          (x.period().size() * y.period().size()) +
      8;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (x.letter_at(i) != y.letter_at(i)) return false;
  }
  return true;
}

}  // namespace omegaext::testing
