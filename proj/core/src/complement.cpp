// Ramsey-style complementation.
//
// Every ω-word factors as u·v₁·v₂⋯ with all vᵢ in one idempotent class e and
// u in a class s with s·e = s; the pair (s, e) decides membership.  The
// complement is the union of [s]·[e]^ω over the rejecting pairs.  Phase 1
// runs the Cayley DFA of the monoid on u; each phase-2 copy checks [e]^ω by
// tracking the class of the current factor and resetting when it equals e.
// Both DFAs are Moore-minimised before the copies are wired together.

#include <map>

#include "graph.hpp"
#include "omegaext/buchi.hpp"
#include "omegaext/error.hpp"
#include "omegaext/monoid.hpp"

namespace omegaext {

BuchiAutomaton complement(const BuchiAutomaton& input,
                          const ComplementOptions& options) {
  const BuchiAutomaton a = trim(input);
  const Alphabet& sigma = a.alphabet();
  const std::size_t k = sigma.size();
  if (a.num_states() == 0) return universal_automaton(sigma);

  const TransitionMonoid monoid(a, options.max_monoid_elements);
  const std::size_t m = monoid.size();
  using Element = TransitionMonoid::Element;

  std::vector<Element> idempotents;
  for (Element e = 0; e < m; ++e) {
    if (monoid.reached_by_nonempty(e) && monoid.is_idempotent(e)) {
      idempotents.push_back(e);
    }
  }
  std::vector<std::vector<std::uint8_t>> loops;
  for (Element e : idempotents) loops.push_back(monoid.accepting_loops(e));

  std::vector<std::uint8_t> init(a.num_states(), 0);
  for (State q : a.initial_states()) init[q] = 1;

  // allowed[s][i]: from class s, the rest of the word may be [eᵢ]^ω.
  std::vector<std::vector<std::uint8_t>> allowed(
      m, std::vector<std::uint8_t>(idempotents.size(), 0));
  std::vector<std::uint8_t> copy_used(idempotents.size(), 0);
  for (Element s = 0; s < m; ++s) {
    const auto from_init = monoid.image(s, init);
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
      const auto after = monoid.image(idempotents[i], from_init);
      bool accepting = false;
      for (State q = 0; q < a.num_states() && !accepting; ++q) {
        accepting = after[q] && loops[i][q];
      }
      if (!accepting) {
        allowed[s][i] = 1;
        copy_used[i] = 1;
      }
    }
  }

  // Phase 1: Cayley DFA labelled by the allowed jumps.
  std::vector<std::uint32_t> cayley(m * k);
  for (Element s = 0; s < m; ++s) {
    for (std::size_t x = 0; x < k; ++x) cayley[s * k + x] = monoid.step(s, x);
  }
  std::map<std::vector<std::uint8_t>, std::uint32_t> label_ids;
  std::vector<std::uint32_t> labels(m);
  for (Element s = 0; s < m; ++s) {
    labels[s] = label_ids.emplace(allowed[s], label_ids.size()).first->second;
  }
  const auto phase1 = detail::refine_partition(cayley, k, labels);
  std::uint32_t phase1_count = 0;
  for (auto b : phase1) phase1_count = std::max(phase1_count, b + 1);

  BuchiAutomaton out(sigma, phase1_count);
  out.set_initial(phase1[TransitionMonoid::kIdentity]);
  std::vector<std::uint8_t> wired(phase1_count, 0);
  for (Element s = 0; s < m; ++s) {
    if (wired[phase1[s]]) continue;
    wired[phase1[s]] = 1;
    for (std::size_t x = 0; x < k; ++x) {
      out.add_transition(phase1[s], sigma[x], phase1[monoid.step(s, x)]);
    }
  }

  // Phase 2: one tracker per used idempotent.  Tracker state 0 is the reset
  // state (empty factor); state 1 + s is "current factor has class s".
  const std::size_t t = m + 1;
  std::vector<std::uint32_t> tracker(t * k);
  for (std::size_t x = 0; x < k; ++x) {
    tracker[x] = 1 + monoid.step(TransitionMonoid::kIdentity, x);
  }
  for (Element s = 0; s < m; ++s) {
    for (std::size_t x = 0; x < k; ++x) {
      tracker[(1 + s) * k + x] = 1 + monoid.step(s, x);
    }
  }
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (!copy_used[i]) continue;
    std::vector<std::uint32_t> out_labels(t, 2);
    out_labels[0] = 0;
    out_labels[1 + idempotents[i]] = 1;
    const auto blocks = detail::refine_partition(tracker, k, out_labels);
    std::uint32_t count = 0;
    for (auto b : blocks) count = std::max(count, b + 1);
    if (out.num_states() + count > options.max_states) {
      throw BudgetExceeded("complement state", options.max_states);
    }
    const auto base = static_cast<State>(out.num_states());
    for (std::uint32_t b = 0; b < count; ++b) out.add_state(false, b == blocks[0]);
    const State reset = base + blocks[0];
    std::vector<std::uint8_t> done(count, 0);
    for (std::size_t q = 0; q < t; ++q) {
      if (done[blocks[q]]) continue;
      done[blocks[q]] = 1;
      for (std::size_t x = 0; x < k; ++x) {
        const std::uint32_t r = tracker[q * k + x];
        out.add_transition(base + blocks[q], sigma[x], base + blocks[r]);
        if (out_labels[r] == 1) out.add_transition(base + blocks[q], sigma[x], reset);
      }
    }
    // Jumps: phase-1 blocks whose label allows eᵢ behave like the reset
    // state on their next letter.
    std::vector<std::uint8_t> jumped(phase1_count, 0);
    for (Element s = 0; s < m; ++s) {
      if (!allowed[s][i] || jumped[phase1[s]]) continue;
      jumped[phase1[s]] = 1;
      for (std::size_t x = 0; x < k; ++x) {
        const std::uint32_t r = tracker[x];
        out.add_transition(phase1[s], sigma[x], base + blocks[r]);
        if (out_labels[r] == 1) out.add_transition(phase1[s], sigma[x], reset);
      }
    }
  }
  if (out.num_states() > options.max_states) {
    throw BudgetExceeded("complement state", options.max_states);
  }
  return trim(out);
}

}  // namespace omegaext
