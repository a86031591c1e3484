#include <gtest/gtest.h>

#include "omegaext/error.hpp"
#include "omegaext/oracles.hpp"

namespace omegaext {
namespace {

const Alphabet kAB1("ab1");

// Second route for U′: the period has a non-neutral letter and all of them
// are a.
std::optional<bool> uprime_by_letters(const UPWord& w) {
  bool seen = false;
  for (Symbol s : w.period()) {
    if (s == '1') continue;
    if (s != 'a') return false;
    seen = true;
  }
  if (!seen) return std::nullopt;
  return true;
}

TEST(OracleU, Examples) {
  const auto u = oracle_U();
  EXPECT_TRUE(u.contains(BlockWord('a', 'b', AffineLengths{1, 0})));
  EXPECT_FALSE(u.contains(BlockWord('a', 'b', ConstantLengths{3})));
  EXPECT_FALSE(u.contains(UPWord("", "aab")));
  EXPECT_TRUE(u.contains(UPWord("b", "a")));
  EXPECT_THROW(u.contains(UPWord("", "c")), AlphabetMismatch);
}

TEST(OracleUprime, MatchesLetterRoute) {
  const auto o = oracle_Uprime();
  for (const auto& w : all_up_words(kAB1, 2, 3)) {
    const auto expected = uprime_by_letters(w);
    if (!expected) {
      EXPECT_THROW(o.contains(w), NotAnOmegaWord) << w.prefix() << "|" << w.period();
    } else {
      EXPECT_EQ(o.contains(w), *expected) << w.prefix() << "|" << w.period();
    }
  }
  EXPECT_TRUE(o.contains(BlockWord('a', 'b', AffineLengths{2, 1})));
}

TEST(OracleUprime, NeutralLetter) {
  const auto r = neutral_letter_property_test(oracle_Uprime(), 200, 1);
  EXPECT_FALSE(r.counterexample.has_value());
  EXPECT_EQ(r.tested, 200u);
  EXPECT_THROW(neutral_letter_property_test(oracle_U(), 10, 1), InvalidArgument);
}

TEST(OracleUprime, ViolationFinder) {
  const auto o = oracle_Uprime();
  Rng rng(17);
  for (int round = 0; round < 50; ++round) {
    const auto c = random_classifier(kAB1, 5, 3, rng);
    const auto w = o.find_violation(c);
    EXPECT_TRUE(verify_witness(o, w));
    EXPECT_TRUE(w.original_member);
    EXPECT_FALSE(w.replaced_member);
  }
  EXPECT_THROW(oracle_U().find_violation(single_class_classifier(Alphabet("ab"))),
               UnsupportedInput);
}

TEST(OraclePrimes, MatchesDefinition) {
  const auto o = oracle_prime_blocks();
  for (std::size_t n = 0; n < 12; ++n) {
    const FiniteWord block = FiniteWord(n, 'a') + "b";
    EXPECT_EQ(o.contains(UPWord("ab", block)), is_prime(n)) << n;
    EXPECT_EQ(o.contains(UPWord("", block + block)), is_prime(n)) << n;
  }
  EXPECT_FALSE(o.contains(UPWord("", "abaab")));
  EXPECT_FALSE(o.contains(UPWord("", "a")));
  EXPECT_FALSE(o.contains(BlockWord('a', 'b', AffineLengths{1, 0})));
}

TEST(OraclePrimes, IsPrimeAgainstSieve) {
  std::vector<bool> composite(200, false);
  for (std::size_t i = 2; i < 200; ++i) {
    for (std::size_t j = 2 * i; j < 200; j += i) composite[j] = true;
  }
  for (std::size_t i = 0; i < 200; ++i) EXPECT_EQ(is_prime(i), i >= 2 && !composite[i]);
}

TEST(Registry, Names) {
  EXPECT_EQ(make_oracle("U").name(), "U");
  EXPECT_EQ(make_oracle("Uprime").neutral_letter(), std::optional<Symbol>('1'));
  EXPECT_TRUE(make_oracle("P").contains(UPWord("", "ab")));
  const auto s = make_oracle("singleton:(ab)^w");
  EXPECT_TRUE(s.contains(UPWord("a", "ba")));
  EXPECT_FALSE(s.contains(UPWord("", "a")));
  EXPECT_THROW(make_oracle("nope"), InvalidArgument);
  EXPECT_THROW(make_oracle("regular:/nonexistent/file"), InvalidArgument);
}

}  // namespace
}  // namespace omegaext
