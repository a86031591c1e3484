#include "omegaext/oracles.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "omegaext/congruence.hpp"
#include "omegaext/error.hpp"
#include "omegaext/text.hpp"

namespace omegaext {
namespace {

bool all_a(std::string_view w) {
  return !w.empty() && w.find_first_not_of('a') == std::string_view::npos;
}

bool u_member_up(const UPWord& w) { return all_a(w.period()); }

bool u_member_block(const BlockWord& w) {
  if (w.unbounded_blocks()) return w.block_letter() == 'a';
  return u_member_up(*w.to_up());
}

// Shortlex-least word containing b for every class reachable that way.
std::map<ClassId, FiniteWord> b_representatives(const Classifier& c) {
  const std::size_t n = c.num_states();
  const std::size_t k = c.alphabet().size();
  const std::size_t b = c.alphabet().index('b');
  std::vector<std::uint8_t> seen(2 * n, 0);
  std::vector<FiniteWord> word(2 * n);
  std::deque<std::size_t> todo{c.initial()};
  seen[c.initial()] = 1;
  while (!todo.empty()) {
    const std::size_t node = todo.front();
    todo.pop_front();
    const State q = static_cast<State>(node % n);
    const bool flag = node >= n;
    for (std::size_t x = 0; x < k; ++x) {
      const std::size_t next = c.next(q, x) + ((flag || x == b) ? n : 0);
      if (seen[next]) continue;
      seen[next] = 1;
      word[next] = word[node] + c.alphabet()[x];
      todo.push_back(next);
    }
  }
  std::map<ClassId, FiniteWord> out;
  for (State q = 0; q < n; ++q) {
    if (!seen[n + q]) continue;
    auto [it, fresh] = out.emplace(c.class_of_state(q), word[n + q]);
    if (!fresh && shortlex_less(word[n + q], it->second, c.alphabet())) {
      it->second = word[n + q];
    }
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

LanguageOracle oracle_U() {
  LanguageOracle o("U", Alphabet("ab"), u_member_up);
  o.with_block_membership(u_member_block);
  return o;
}

LanguageOracle oracle_Uprime() {
  const Alphabet sigma("ab1");
  const auto erase = Homomorphism::erasing(sigma, '1');
  LanguageOracle o("Uprime", sigma, [erase](const UPWord& w) {
    const auto image = apply_hom(erase, w);
    if (const auto* up = std::get_if<UPWord>(&image)) return u_member_up(*up);
    throw NotAnOmegaWord("erasing 1 from " + format_word(w) +
                         " leaves the finite word " +
                         format_word(std::get<FiniteWord>(image)));
  });
  o.with_block_membership([erase](const BlockWord& w) {
    if (auto up = w.to_up()) {
      const auto image = apply_hom(erase, *up);
      if (const auto* x = std::get_if<UPWord>(&image)) return u_member_up(*x);
      throw NotAnOmegaWord("erasing 1 from " + format_word(w) +
                           " leaves a finite word");
    }
    const auto image = apply_hom(erase, w);
    if (const auto* x = std::get_if<BlockWord>(&image)) return u_member_block(*x);
    return u_member_up(std::get<UPWord>(image));
  });
  o.with_neutral_letter('1');
  o.with_violation_finder(
      [](const Classifier& c, const LanguageOracle::Replacements* r) {
        return violation_finder_Uprime(c, r);
      });
  return o;
}

LanguageOracle oracle_P() {
  LanguageOracle o("P", Alphabet("ab"), [](const UPWord&) { return true; });
  o.with_block_membership([](const BlockWord& w) { return !w.unbounded_blocks(); });
  return o;
}

LanguageOracle oracle_prime_blocks() {
  auto member_up = [](const UPWord& w) {
    const FiniteWord root = primitive_root(w.period());
    const std::size_t b = root.find('b');
    if (b == FiniteWord::npos || root.find('b', b + 1) != FiniteWord::npos) {
      return false;
    }
    // A single b: the rotation ending in b is a^{|root|-1} b.
    return is_prime(root.size() - 1);
  };
  LanguageOracle o("primes", Alphabet("ab"), member_up);
  o.with_block_membership([member_up](const BlockWord& w) {
    if (w.unbounded_blocks()) return false;
    return member_up(*w.to_up());
  });
  return o;
}

LanguageOracle oracle_singleton(const UPWord& w0) {
  std::string letters = "ab";
  for (Symbol s : w0.prefix() + w0.period()) {
    if (letters.find(s) == std::string::npos) letters.push_back(s);
  }
  return LanguageOracle("singleton:" + format_word(w0), Alphabet(letters),
                        [w0](const UPWord& w) { return up_equal(w, w0); });
}

LanguageOracle oracle_regular(const BuchiAutomaton& a, std::string name) {
  return LanguageOracle(std::move(name), a.alphabet(),
                        [a](const UPWord& w) { return accepts_up(a, w); });
}

LanguageOracle make_oracle(std::string_view name) {
  if (name == "U") return oracle_U();
  if (name == "Uprime") return oracle_Uprime();
  if (name == "P") return oracle_P();
  if (name == "primes") return oracle_prime_blocks();
  constexpr std::string_view kSingleton = "singleton:";
  constexpr std::string_view kRegular = "regular:";
  if (name.rfind(kSingleton, 0) == 0) {
    return oracle_singleton(parse_up_word(name.substr(kSingleton.size())));
  }
  if (name.rfind(kRegular, 0) == 0) {
    const std::string path(name.substr(kRegular.size()));
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read automaton file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return oracle_regular(parse_buchi(buffer.str()), std::string(name));
  }
  throw InvalidArgument("unknown oracle '" + std::string(name) +
                        "' (expected U, Uprime, P, primes, singleton:<word> or "
                        "regular:<file>)");
}

// ------------------------------------------------------------ Neutral letter

NeutralTestResult neutral_letter_property_test(const LanguageOracle& oracle,
                                               std::size_t samples,
                                               std::uint64_t seed) {
  if (!oracle.neutral_letter()) {
    throw InvalidArgument("oracle " + oracle.name() + " has no neutral letter");
  }
  const Symbol one = *oracle.neutral_letter();
  const Alphabet& sigma = oracle.alphabet();
  Rng rng(seed);
  NeutralTestResult result;
  auto insert_random = [&](FiniteWord w, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, w.size())), one);
    }
    return w;
  };
  auto erase_all = [one](FiniteWord w) {
    w.erase(std::remove(w.begin(), w.end(), one), w.end());
    return w;
  };
  const std::size_t max_attempts = 100 * samples + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && result.tested < samples;
       ++attempt) {
    const UPWord w = random_up_word(sigma, 4, 4, rng);
    std::optional<UPWord> modified;
    switch (uniform(rng, 0, 3)) {
      case 0:  // finitely many insertions
        modified.emplace(insert_random(w.prefix(), uniform(rng, 1, 3)), w.period());
        break;
      case 1:  // one or two insertions per period: infinitely many
        modified.emplace(w.prefix(), insert_random(w.period(), uniform(rng, 1, 2)));
        break;
      case 2:  // finitely many deletions
        modified.emplace(erase_all(w.prefix()), w.period());
        break;
      default:  // infinitely many deletions
        if (!erase_all(w.period()).empty()) {
          modified.emplace(w.prefix(), erase_all(w.period()));
        }
        break;
    }
    if (!modified) {
      ++result.skipped;
      continue;
    }
    bool a, b;
    try {
      a = oracle.contains(w);
      b = oracle.contains(*modified);
    } catch (const NotAnOmegaWord&) {
      ++result.skipped;
      continue;
    }
    ++result.tested;
    if (a != b) {
      result.counterexample = NeutralCounterexample{w, *modified, a, b};
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------- U′ witnesses

std::optional<Condition2ViolationWitness> violation_finder_Uprime(
    const Classifier& c, const LanguageOracle::Replacements* replacements) {
  const LanguageOracle oracle = oracle_Uprime();
  if (c.alphabet().size() != 3 || !c.alphabet().contains('a') ||
      !c.alphabet().contains('b') || !c.alphabet().contains('1')) {
    throw AlphabetMismatch("U' violation finder needs a classifier over {a,b,1}");
  }
  const auto canonical = b_representatives(c);
  auto rep = [&](ClassId id) {
    if (replacements != nullptr) {
      auto it = replacements->find(id);
      if (it != replacements->end()) return it->second;
    }
    return canonical.at(id);
  };

  // States after a^i are eventually periodic: s_{i+p} = s_i for i >= t.
  const std::size_t a = c.alphabet().index('a');
  const std::size_t b = c.alphabet().index('b');
  std::map<State, std::size_t> first_seen;
  std::vector<State> states;
  State s = c.initial();
  while (!first_seen.count(s)) {
    first_seen.emplace(s, states.size());
    states.push_back(s);
    s = c.next(s, a);
  }
  const std::size_t t = first_seen.at(s);
  const std::size_t p = states.size() - t;
  auto class_at = [&](std::size_t i) {
    const std::size_t idx = i < states.size() ? i : t + (i - t) % p;
    return c.class_of_state(c.next(states[idx], b));
  };
  const std::size_t h0 = std::max<std::size_t>(t, 1);
  std::vector<FiniteWord> head, cycle;
  for (std::size_t i = 1; i < h0; ++i) head.push_back(rep(class_at(i)));
  for (std::size_t i = h0; i < h0 + p; ++i) cycle.push_back(rep(class_at(i)));

  const OmegaWord original = BlockWord('a', 'b', AffineLengths{1, 0});
  const bool original_member = oracle.contains(original);
  FiniteWord cycle_text;
  for (const auto& w : cycle) cycle_text += w;
  if (!cycle_text.empty()) {
    const UPWord replaced = omega_product(head, cycle);
    try {
      const bool replaced_member = oracle.contains(replaced);
      if (replaced_member != original_member) {
        return Condition2ViolationWitness{{}, {}, "a^i b", head, cycle, original,
                                          replaced, original_member,
                                          replaced_member};
      }
    } catch (const NotAnOmegaWord&) {
    }
  }
  if (replacements == nullptr) return std::nullopt;
  return check_condition2_bounded(c, oracle, Condition2Options{}, replacements)
      .witness;
}

}  // namespace omegaext
