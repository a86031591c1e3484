#include <gtest/gtest.h>

#include "brute.hpp"
#include "omegaext/buchi.hpp"
#include "omegaext/error.hpp"
#include "omegaext/monoid.hpp"
#include "omegaext/random.hpp"

namespace omegaext {
namespace {

const Alphabet kAB("ab");

TEST(Buchi, AcceptsUpExamples) {
  const auto inf_a = infinitely_many(kAB, 'a');
  EXPECT_TRUE(accepts_up(inf_a, UPWord("", "ab")));
  EXPECT_FALSE(accepts_up(inf_a, UPWord("a", "b")));
  BuchiAutomaton no_acc = universal_automaton(kAB);
  no_acc.set_accepting(0, false);
  EXPECT_FALSE(accepts_up(no_acc, UPWord("", "a")));
  EXPECT_THROW(accepts_up(inf_a, UPWord("", "c")), AlphabetMismatch);
}

TEST(Buchi, BooleanExamples) {
  const auto inf_a = infinitely_many(kAB, 'a');
  const auto inf_b = infinitely_many(kAB, 'b');
  const auto both = intersect(inf_a, inf_b);
  EXPECT_TRUE(accepts_up(both, UPWord("", "ab")));
  EXPECT_FALSE(accepts_up(both, UPWord("", "a")));

  const auto co = complement(inf_a);
  EXPECT_TRUE(accepts_up(co, UPWord("a", "b")));
  EXPECT_TRUE(is_empty(complement(universal_automaton(kAB))).empty);

  const auto only = unite(only_letter(kAB, 'a'), only_letter(kAB, 'b'));
  EXPECT_TRUE(accepts_up(only, UPWord("", "a")));
  EXPECT_TRUE(accepts_up(only, UPWord("", "b")));
  EXPECT_FALSE(accepts_up(only, UPWord("", "ab")));
  EXPECT_THROW(intersect(inf_a, infinitely_many(Alphabet("abc"), 'a')),
               AlphabetMismatch);
}

TEST(Buchi, Emptiness) {
  BuchiAutomaton unreachable(kAB, 2);
  unreachable.set_initial(0);
  unreachable.set_accepting(1);
  unreachable.add_transition(1, 'a', 1);
  unreachable.add_transition(0, 'a', 0);
  EXPECT_TRUE(is_empty(unreachable).empty);

  const auto r = is_empty(infinitely_many(kAB, 'a'));
  ASSERT_FALSE(r.empty);
  EXPECT_TRUE(accepts_up(infinitely_many(kAB, 'a'), *r.witness));
}

TEST(Buchi, Homomorphisms) {
  const auto inf_a = infinitely_many(kAB, 'a');
  Homomorphism id(kAB, kAB, {{'a', "a"}, {'b', "b"}});
  const auto same = map_letters(inf_a, id);
  for (const auto& w : all_up_words(kAB, 3, 3)) {
    EXPECT_EQ(accepts_up(same, w), accepts_up(inf_a, w));
  }
  Homomorphism collapse(kAB, Alphabet("a"), {{'a', "a"}, {'b', "a"}});
  EXPECT_TRUE(accepts_up(map_letters(inf_a, collapse), UPWord("", "a")));
  Homomorphism c_to_b(Alphabet("abc"), kAB, {{'a', "a"}, {'b', "b"}, {'c', "b"}});
  EXPECT_TRUE(accepts_up(inverse_map_letters(inf_a, c_to_b), UPWord("", "ac")));
  EXPECT_FALSE(accepts_up(inverse_map_letters(inf_a, c_to_b), UPWord("a", "c")));
  Homomorphism erase(kAB, Alphabet("a"), {{'a', "a"}, {'b', ""}});
  EXPECT_THROW(map_letters(inf_a, erase), InvalidArgument);
}

TEST(Buchi, TextRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_buchi(kAB, 4, rng);
    const auto text = format_buchi(a);
    EXPECT_EQ(format_buchi(parse_buchi(text)), text);
  }
  EXPECT_THROW(parse_buchi("alphabet a\nstates 1\ninitial 0\naccepting\n0 b 0\n"),
               ParseError);
  EXPECT_THROW(parse_buchi("states 1\n"), ParseError);
}

TEST(Buchi, MembershipMatchesReference) {
  Rng rng(17);
  const auto words = all_up_words(kAB, 2, 3);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_buchi(kAB, 5, rng);
    for (const auto& w : words) {
      ASSERT_EQ(accepts_up(a, w), testing::brute_accepts(a, w)) << format_buchi(a);
    }
  }
}

TEST(Buchi, ComplementMatchesReference) {
  Rng rng(23);
  const auto words = all_up_words(kAB, 3, 3);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_buchi(kAB, 3, rng);
    const auto co = complement(a);
    for (const auto& w : words) {
      ASSERT_NE(accepts_up(co, w), testing::brute_accepts(a, w))
          << format_buchi(a) << " on " << w.prefix() << "|" << w.period();
    }
  }
}

TEST(Buchi, DeMorganAndWitnesses) {
  Rng rng(29);
  const auto words = all_up_words(kAB, 3, 3);
  for (int i = 0; i < 15; ++i) {
    const auto a = random_buchi(kAB, 3, rng);
    const auto b = random_buchi(kAB, 3, rng);
    const auto lhs = complement(unite(a, b));
    const auto rhs = intersect(complement(a), complement(b));
    for (const auto& w : words) EXPECT_EQ(accepts_up(lhs, w), accepts_up(rhs, w));
    const auto e = is_empty(a);
    if (!e.empty) EXPECT_TRUE(accepts_up(a, *e.witness));
    EXPECT_TRUE(is_empty(intersect(a, complement(a))).empty);
    EXPECT_TRUE(equivalent(a, a));
    EXPECT_EQ(equivalent(a, b), equivalent(b, a));
  }
}

TEST(Buchi, TrimPreservesLanguage) {
  Rng rng(31);
  const auto words = all_up_words(kAB, 2, 3);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_buchi(kAB, 5, rng);
    const auto t = trim(a);
    EXPECT_LE(t.num_states(), a.num_states());
    for (const auto& w : words) EXPECT_EQ(accepts_up(t, w), accepts_up(a, w));
  }
}

TEST(TransitionMonoid, WitnessesAndClosure) {
  Rng rng(37);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_buchi(kAB, 4, rng);
    const TransitionMonoid m(a);
    EXPECT_EQ(m.witness(TransitionMonoid::kIdentity), "");
    for (TransitionMonoid::Element x = 0; x < m.size(); ++x) {
      EXPECT_EQ(m.of_word(m.witness(x)), x);
      for (TransitionMonoid::Element y = 0; y < m.size(); ++y) {
        const auto xy = m.multiply(x, y);
        EXPECT_EQ(m.of_word(m.witness(x) + m.witness(y)), xy);
      }
    }
  }
}

}  // namespace
}  // namespace omegaext
