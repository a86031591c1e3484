// Acceptance criteria.  One PASS/FAIL line per criterion; the exit status is
// nonzero when any criterion fails.  `--only N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omegaext/buchi.hpp"
#include "omegaext/classifier.hpp"
#include "omegaext/congruence.hpp"
#include "omegaext/error.hpp"
#include "omegaext/game.hpp"
#include "omegaext/monoid.hpp"
#include "omegaext/mso.hpp"
#include "omegaext/oracles.hpp"
#include "omegaext/random.hpp"
#include "omegaext/text.hpp"
#include "omegaext/trio.hpp"
#include "brute.hpp"

namespace {

using namespace omegaext;
using Clock = std::chrono::steady_clock;

const Alphabet kAB("ab");

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. U has two bounded Arnold classes, told apart by containing b.
Outcome arnold_classes_of_U() {
  const auto t0 = Clock::now();
  const auto r = arnold_classes_bounded(oracle_U(), 4, 3);
  const double secs = seconds_since(t0);
  bool split = r.classes.size() == 2;
  for (const auto& cls : r.classes) {
    const bool first_has_b = cls.front().find('b') != std::string::npos;
    for (const auto& u : cls) {
      split = split && (u.find('b') != std::string::npos) == first_has_b;
    }
  }
  std::size_t total = 0;
  for (const auto& cls : r.classes) total += cls.size();
  split = split && total == words_up_to(kAB, 4).size();
  return {split && r.transitive && secs < 60,
          std::to_string(r.classes.size()) + " classes over " + std::to_string(total) +
              " words, split by b: " + (split ? "yes" : "no") + ", " + fmt_seconds(secs)};
}

// 2. The prime-blocks language has one right-congruence class on Σ^{<=4}.
Outcome prime_blocks_right_congruence() {
  const auto t0 = Clock::now();
  const auto oracle = oracle_prime_blocks();
  const auto words = words_up_to(oracle.alphabet(), 4);
  std::size_t pairs = 0, separated = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      ++pairs;
      if (!right_congruence_bounded(oracle, words[i], words[j], 3).equivalent) ++separated;
    }
  }
  const double secs = seconds_since(t0);
  return {separated == 0 && secs < 60,
          std::to_string(pairs) + " pairs, " + std::to_string(separated) + " separated, " +
              fmt_seconds(secs)};
}

// 3. The transition-monoid classifier of a Büchi automaton satisfies both
// ω-congruence conditions.
Outcome monoid_classifiers_are_congruences() {
  Rng rng(3);
  std::size_t c1_fail = 0, c2_fail = 0, tested = 0;
  for (int i = 0; i < 10; ++i) {
    const auto a = random_buchi(kAB, 4, rng);
    const auto c = monoid_kernel_classifier(TransitionMonoid(a));
    if (check_condition1(c)) ++c1_fail;
    const auto r = check_condition2_bounded(c, oracle_regular(a), {2, 2, 2});
    tested += r.tested;
    if (r.witness) ++c2_fail;
  }
  return {c1_fail == 0 && c2_fail == 0,
          "10 automata, condition 1 failures " + std::to_string(c1_fail) +
              ", condition 2 violations " + std::to_string(c2_fail) + " over " +
              std::to_string(tested) + " pairs"};
}

// 4. Repair merges at most index-1 times, each merge lowers the index by
// one, and the result satisfies condition 1.
Outcome repair_bounds() {
  Rng rng(4);
  std::size_t bad = 0, total_merges = 0;
  for (int i = 0; i < 50; ++i) {
    const auto c = random_classifier(kAB, 6, 4, rng);
    const auto r = lemma_repair(c);
    total_merges += r.merges.size();
    const bool ok = r.merges.size() + 1 <= std::max<std::size_t>(c.index(), 1) &&
                    r.classifier.index() + r.merges.size() == c.index() &&
                    r.classifier.index() <= c.index() && !check_condition1(r.classifier);
    if (!ok) ++bad;
  }
  return {bad == 0, "50 classifiers, " + std::to_string(total_merges) + " merges, " +
                        std::to_string(bad) + " out of bounds"};
}

std::size_t count_wins(const OmegaWord& w, const LanguageOracle& oracle,
                       const std::function<SpoilerStrategy(std::uint64_t)>& spoiler,
                       const std::function<DuplicatorStrategy(std::uint64_t)>& duplicator,
                       Winner expected) {
  std::size_t wins = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto t = play_bounded(w, oracle, spoiler(seed), duplicator(seed), {10});
    const auto a = adjudicate(t, oracle);
    if (t.winner == expected && a.winner == expected) ++wins;
  }
  return wins;
}

// 5. Copying wins on a word with unbounded a-blocks.
Outcome copy_wins_on_affine_blocks() {
  const OmegaWord w = BlockWord('a', 'b', AffineLengths{1, 0});
  const auto copy = [](std::uint64_t) { return duplicator_copy_strategy(); };
  std::ostringstream out;
  bool pass = true;
  for (const auto& oracle : {oracle_U(), oracle_Uprime()}) {
    const auto random = count_wins(w, oracle, spoiler_random_strategy, copy, Winner::kDuplicator);
    const auto diverging = count_wins(
        w, oracle, [](std::uint64_t) { return spoiler_diverging_strategy(); }, copy,
        Winner::kDuplicator);
    pass = pass && random == 100 && diverging == 100;
    out << oracle.name() << ": " << random << "/100 vs random, " << diverging
        << "/100 vs diverging; ";
  }
  std::string detail = out.str();
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

// 6. The diverging Spoiler beats copying on words with bounded a-blocks.
Outcome diverging_wins_on_bounded_blocks() {
  const std::vector<std::pair<std::string, OmegaWord>> words = {
      {"(aab)^w", UPWord("", "aab")},
      {"(aaaaab)^w", UPWord("", "aaaaab")},
      {"blocks(constant 3)", BlockWord('a', 'b', ConstantLengths{3})}};
  const auto oracle = oracle_Uprime();
  std::ostringstream out;
  bool pass = true;
  for (const auto& [name, w] : words) {
    const auto wins = count_wins(
        w, oracle, [](std::uint64_t) { return spoiler_diverging_strategy(); },
        [](std::uint64_t) { return duplicator_copy_strategy(); }, Winner::kSpoiler);
    pass = pass && wins == 100;
    out << name << " " << wins << "/100" << (&w == &words.back().second ? "" : ", ");
  }
  return {pass, out.str()};
}

// 7. The neutral letter of U′ is neutral.
Outcome uprime_neutral_letter() {
  const auto r = neutral_letter_property_test(oracle_Uprime(), 200, 7);
  return {!r.counterexample && r.tested == 200,
          std::to_string(r.tested) + " comparisons, " +
              (r.counterexample ? "counterexample " + format_word(r.counterexample->original) +
                                      " vs " + format_word(r.counterexample->modified)
                                : std::string("no counterexample"))};
}

// 8. Boolean operations and emptiness against lasso-by-lasso brute force.
Outcome buchi_algebra() {
  Rng rng(8);
  const auto words = all_up_words(kAB, 3, 3);
  std::vector<BuchiAutomaton> autos;
  for (int i = 0; i < 20; ++i) autos.push_back(random_buchi(kAB, 3, rng));
  std::size_t checks = 0, mismatches = 0, witness_failures = 0;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const auto& a = autos[i];
    const auto& b = autos[(i + 1) % autos.size()];
    const auto comp = complement(a);
    const auto uni = unite(a, b);
    const auto inter = intersect(a, b);
    for (const auto& w : words) {
      const bool in_a = testing::brute_accepts(a, w);
      const bool in_b = testing::brute_accepts(b, w);
      checks += 3;
      if (accepts_up(comp, w) == in_a) ++mismatches;
      if (accepts_up(uni, w) != (in_a || in_b)) ++mismatches;
      if (accepts_up(inter, w) != (in_a && in_b)) ++mismatches;
    }
    for (const auto* x : {&a, &comp, &uni, &inter}) {
      const auto e = is_empty(*x);
      if (e.empty != !e.witness.has_value()) {
        ++witness_failures;
      } else if (e.witness) {
        if (!accepts_up(*x, *e.witness) || !testing::brute_accepts(*x, *e.witness)) {
          ++witness_failures;
        }
      } else if (std::any_of(words.begin(), words.end(),
                             [&](const UPWord& w) { return testing::brute_accepts(*x, w); })) {
        ++witness_failures;
      }
    }
  }
  return {mismatches == 0 && witness_failures == 0,
          std::to_string(checks) + " verdicts, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(witness_failures) + " emptiness failures"};
}

// 9. Compilation agrees with direct evaluation.
Outcome mso_compile_vs_evaluate() {
  Rng rng(9);
  std::size_t agree = 0, total = 0, errors = 0;
  for (int i = 0; i < 50; ++i) {
    const auto f = random_formula(kAB, {"X", "Y"}, 4, rng);
    try {
      const auto c = compile_to_buchi(f, kAB);
      for (int j = 0; j < 20; ++j) {
        const auto val = random_valuation(f, kAB, rng);
        ++total;
        if (accepts_up(c.automaton, encode_valuation(val, c.coding)) == evaluate(f, kAB, val)) {
          ++agree;
        }
      }
    } catch (const Error&) {
      ++errors;
      total += 20;
    }
  }
  return {agree == total && total == 1000,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, " +
              std::to_string(errors) + " formulas errored"};
}

// 10. Every short member of the ρ#-language has balanced separators.
Outcome l2_census() {
  const auto t0 = Clock::now();
  const auto c = census_L2(oracle_anbn(), 14);
  const double secs = seconds_since(t0);
  const bool attained = c.attained.count(1) && c.attained.count(2) && c.attained.count(3);
  std::ostringstream out;
  out << c.members << " members of " << c.examined << " examined, " << c.unequal.size()
      << " unequal, n attained {";
  for (auto it = c.attained.begin(); it != c.attained.end(); ++it) {
    out << (it == c.attained.begin() ? "" : ",") << *it;
  }
  out << "}, " << fmt_seconds(secs);
  return {c.unequal.empty() && attained && c.members > 0 && secs < 300, out.str()};
}

// 11. Random lasso words are outside U and outside U′.
Outcome up_words_outside_U() {
  Rng rng(11);
  const auto u = oracle_U();
  const auto uprime = oracle_Uprime();
  std::size_t outside_u = 0, outside_uprime = 0;
  std::optional<UPWord> first_member;
  for (int i = 0; i < 200; ++i) {
    const auto w = random_up_word(kAB, 3, 3, rng);
    const bool in_u = u.contains(w);
    const bool in_uprime = uprime.contains(w);
    if (!in_u) ++outside_u;
    if (!in_uprime) ++outside_uprime;
    if ((in_u || in_uprime) && !first_member) first_member = w;
  }
  std::string detail = std::to_string(outside_u) + "/200 outside U, " +
                       std::to_string(outside_uprime) + "/200 outside U'";
  if (first_member) detail += ", e.g. " + format_word(*first_member) + " is a member";
  return {outside_u == 200 && outside_uprime == 200, detail};
}

// 12. The game sentence is closed, uses L once, and grows linearly in |Σ|.
Outcome game_sentence_shape() {
  std::vector<double> ks, sizes;
  bool closed = true, one_atom = true;
  for (std::size_t k = 2; k <= 6; ++k) {
    std::string letters = std::string("abcde").substr(0, k - 1) + "1";
    const auto f = encode_congruence_game(Alphabet(letters), '1');
    closed = closed && free_variables(f).empty() && scope_errors(f).empty();
    one_atom = one_atom && count_language_atoms(f) == 1;
    ks.push_back(static_cast<double>(k));
    sizes.push_back(static_cast<double>(formula_size(f)));
  }
  const double n = static_cast<double>(ks.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    sx += ks[i];
    sy += sizes[i];
    sxx += ks[i] * ks[i];
    sxy += ks[i] * sizes[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double residual = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    residual = std::max(residual, std::abs(sizes[i] - (slope * ks[i] + intercept)));
  }
  std::ostringstream out;
  out << "sizes";
  for (double s : sizes) out << " " << static_cast<long>(s);
  out << ", fit " << slope << "k+" << intercept << ", max residual " << residual
      << (closed ? ", closed" : ", not closed") << (one_atom ? ", one L-atom" : ", L-atoms != 1");
  return {closed && one_atom && residual < 1e-9, out.str()};
}

struct Criterion {
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"Arnold classes of U", arnold_classes_of_U},
    {"right congruence of prime blocks", prime_blocks_right_congruence},
    {"monoid classifiers satisfy both conditions", monoid_classifiers_are_congruences},
    {"repair merge bound", repair_bounds},
    {"copy strategy on affine blocks", copy_wins_on_affine_blocks},
    {"diverging Spoiler on bounded blocks", diverging_wins_on_bounded_blocks},
    {"neutral letter of U'", uprime_neutral_letter},
    {"Buchi algebra against brute force", buchi_algebra},
    {"MSO compile vs evaluate", mso_compile_vs_evaluate},
    {"census of the separator language", l2_census},
    {"lasso words outside U and U'", up_words_outside_U},
    {"game sentence shape", game_sentence_shape},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
  int failures = 0;
  for (int i = 0; i < static_cast<int>(std::size(kCriteria)); ++i) {
    if (only != 0 && only != i + 1) continue;
    Outcome o;
    try {
      o = kCriteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, kCriteria[i].title,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
