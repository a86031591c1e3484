#include <gtest/gtest.h>

#include "brute.hpp"
#include "omegaext/error.hpp"
#include "omegaext/random.hpp"
#include "omegaext/text.hpp"
#include "omegaext/words.hpp"

namespace omegaext {
namespace {

TEST(Alphabet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Alphabet(""), InvalidArgument);
  EXPECT_THROW(Alphabet("aba"), InvalidArgument);
  Alphabet ab("ab");
  EXPECT_EQ(ab.index('b'), 1u);
  EXPECT_THROW(ab.index('c'), AlphabetMismatch);
}

TEST(UPWord, LetterAt) {
  EXPECT_EQ(UPWord("a", "ba").letter_at(0), 'a');
  EXPECT_EQ(UPWord("", "ab").letter_at(5), 'b');
  EXPECT_EQ(UPWord("", "a").letter_at(1'000'000), 'a');
  EXPECT_THROW(UPWord("a", ""), InvalidArgument);
}

TEST(UPWord, Equality) {
  EXPECT_TRUE(up_equal(UPWord("", "ab"), UPWord("a", "ba")));
  EXPECT_TRUE(up_equal(UPWord("", "a"), UPWord("", "aa")));
  EXPECT_FALSE(up_equal(UPWord("", "a"), UPWord("", "b")));
}

TEST(UPWord, CanonicalIsShortestEqualPresentation) {
  const UPWord w("abab", "abab");
  const UPWord c = w.canonical();
  EXPECT_TRUE(up_equal(w, c));
  EXPECT_EQ(c.prefix(), "");
  EXPECT_EQ(c.period(), "ab");
  EXPECT_EQ(UPWord("ab", "aab").canonical(), UPWord("", "aba"));
}

TEST(UPWord, EqualityProperties) {
  Alphabet ab("ab");
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto u = random_word(ab, uniform(rng, 0, 3), rng);
    const auto v = random_word(ab, uniform(rng, 1, 3), rng);
    const UPWord x(u, v);
    EXPECT_TRUE(up_equal(x, x));
    EXPECT_TRUE(up_equal(x, UPWord(u, v + v)));
    EXPECT_TRUE(up_equal(x, UPWord(u + v, v)));
    const auto y = random_up_word(ab, 2, 2, rng);
    const auto z = random_up_word(ab, 2, 2, rng);
    EXPECT_EQ(up_equal(x, y), up_equal(y, x));
    EXPECT_EQ(up_equal(x, y), testing::brute_up_equal(x, y));
    if (up_equal(x, y) && up_equal(y, z)) EXPECT_TRUE(up_equal(x, z));
    if (up_equal(x, y)) {
      const std::size_t bound =
          3 * std::max(x.presentation_size(), y.presentation_size());
      for (std::size_t p = 0; p < bound; ++p) {
        EXPECT_EQ(x.letter_at(p), y.letter_at(p));
      }
    }
  }
}

TEST(Products, ConcatAndOmegaProduct) {
  EXPECT_EQ(concat("a", UPWord("", "b")), UPWord("a", "b"));
  EXPECT_EQ(concat("", UPWord("u", "v")), UPWord("u", "v"));
  EXPECT_EQ(concat("ab", UPWord("c", "d")), UPWord("abc", "d"));
  EXPECT_EQ(omega_product({"a"}, {"b"}), UPWord("a", "b"));
  EXPECT_EQ(omega_product({}, {"ab", "b"}), UPWord("", "abb"));
  EXPECT_EQ(omega_product({"aa", "b"}, {"ab"}), UPWord("aab", "ab"));
  EXPECT_THROW(omega_product({"a"}, {"", ""}), InvalidArgument);
}

TEST(BlockWord, LengthsAndLetters) {
  const BlockWord w('a', 'b', AffineLengths{1, 0});
  EXPECT_EQ(w.block_length(1), 1u);
  EXPECT_EQ(w.block_length(4), 4u);
  EXPECT_TRUE(w.unbounded_blocks());
  std::string prefix;
  for (Position i = 0; i < 10; ++i) prefix.push_back(w.letter_at(i));
  EXPECT_EQ(prefix, "abaabaaaba");
  const OmegaWord ow = w;
  LetterStream stream(ow);
  for (Position i = 0; i < 200; ++i) EXPECT_EQ(stream.next(), w.letter_at(i));

  const BlockWord c('a', 'b', ConstantLengths{2});
  ASSERT_TRUE(c.to_up().has_value());
  EXPECT_TRUE(up_equal(*c.to_up(), UPWord("", "aab")));
  EXPECT_THROW(BlockWord('a', 'a', ConstantLengths{1}), InvalidArgument);
  EXPECT_THROW(BlockWord('a', 'b', AffineLengths{0, 3}), InvalidArgument);
  EXPECT_THROW(BlockWord('a', 'b', EventuallyPeriodicLengths{{1}, {}}),
               InvalidArgument);
}

TEST(Homomorphism, Examples) {
  Alphabet ab1("ab1");
  const auto erase = Homomorphism::erasing(ab1, '1');
  EXPECT_EQ(std::get<UPWord>(apply_hom(erase, UPWord("1a1", "1b"))),
            UPWord("a", "b"));

  Alphabet ab("ab");
  Homomorphism drop_b(ab, Alphabet("a"), {{'a', "a"}, {'b', ""}});
  EXPECT_EQ(std::get<UPWord>(apply_hom(drop_b, UPWord("", "ab"))),
            UPWord("", "a"));
  Homomorphism drop_all(ab, Alphabet("a"), {{'a', ""}, {'b', ""}});
  EXPECT_EQ(std::get<FiniteWord>(apply_hom(drop_all, UPWord("ab", "ab"))), "");
  EXPECT_THROW(apply_hom(drop_b, BlockWord('a', 'b', AffineLengths{1, 0})),
               UnsupportedInput);
}

TEST(Homomorphism, CommutesWithConcat) {
  Alphabet ab1("ab1");
  Rng rng(5);
  const auto h = Homomorphism::erasing(ab1, '1');
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(ab1, uniform(rng, 0, 4), rng);
    const auto x = random_up_word(ab1, 3, 3, rng);
    const auto lhs = apply_hom(h, concat(w, x));
    const auto hx = apply_hom(h, x);
    const auto hw = apply_hom(h, w);
    if (const auto* up = std::get_if<UPWord>(&hx)) {
      EXPECT_TRUE(up_equal(std::get<UPWord>(lhs), concat(hw, *up)));
    } else {
      EXPECT_EQ(std::get<FiniteWord>(lhs), hw + std::get<FiniteWord>(hx));
    }
  }
}

TEST(Text, RoundTrip) {
  for (const char* s : {"ab1a", "ε", "ab(ba)^w", "(ab)^w", "blocks(a,b;affine 1 0)",
                        "blocks(a,b;constant 3)", "blocks(a,b;periodic 2 5 | 3 1)",
                        "blocks(a,b;periodic | 4)"}) {
    EXPECT_EQ(format_word(parse_any_word(s)), s);
  }
  EXPECT_THROW(parse_up_word("ab()^w"), ParseError);
  EXPECT_THROW(parse_up_word("ab(ba)"), ParseError);
  EXPECT_THROW(parse_block_word("blocks(a,a;constant 1)"), ParseError);
  EXPECT_THROW(parse_block_word("blocks(a,b;affine 0 1)"), ParseError);
}

TEST(Enumeration, ShortlexOrder) {
  Alphabet ba("ba");
  const auto words = words_up_to(ba, 2);
  ASSERT_EQ(words.size(), 7u);
  EXPECT_EQ(words[1], "b");
  EXPECT_EQ(words[2], "a");
  for (std::size_t i = 1; i < words.size(); ++i) {
    EXPECT_TRUE(shortlex_less(words[i - 1], words[i], ba));
  }
}

}  // namespace
}  // namespace omegaext
