#include <gtest/gtest.h>

#include "omegaext/error.hpp"
#include "omegaext/game.hpp"
#include "omegaext/oracles.hpp"
#include "omegaext/text.hpp"

namespace omegaext {
namespace {

const OmegaWord kAffine = BlockWord('a', 'b', AffineLengths{1, 0});

bool has_violation(const std::vector<std::string>& v, std::string_view tag) {
  for (const auto& s : v) {
    if (s.rfind(tag, 0) == 0) return true;
  }
  return false;
}

// Second route for round 6: rebuild both products letter by letter from the
// recorded words and ask the oracle again.
Winner replay_round6(const GameTranscript& t, const LanguageOracle& oracle) {
  auto product = [&](const std::vector<FiniteWord>& words) {
    FiniteWord head, cycle;
    for (auto i : t.indices->head) head += words[i];
    for (auto i : t.indices->cycle) cycle += words[i];
    return UPWord(head, cycle);
  };
  const bool a = oracle.contains(product(t.w_words));
  const bool b = oracle.contains(product(t.v_words));
  return a == b ? Winner::kDuplicator : Winner::kSpoiler;
}

GameTranscript legal_transcript() {
  GameTranscript t{.word = kAffine, .oracle = "U", .alphabet = "ab", .horizon = 3};
  // a b aa b aaa b aaaa b ...: a-runs at 0, 2-3, 5-7, 9-12.
  t.family = {{1, 1}, {4, 4}, {8, 9}};
  t.chosen = {0, 1, 2};
  t.v_intervals = {{2, 3}, {5, 7}, {10, 12}};
  t.w_words = {"", "", "b"};
  t.v_words = {"a", "aa", "b"};
  t.indices = IndexScheme{{0}, {1, 2}};
  return t;
}

TEST(Game, ValidateExamples) {
  EXPECT_TRUE(validate_transcript(legal_transcript()).empty());

  auto overlapping = legal_transcript();
  overlapping.family[1] = {1, 4};
  EXPECT_TRUE(has_violation(validate_transcript(overlapping), "round1 disjointness"));

  auto long_word = legal_transcript();
  long_word.w_words[2] = "ab";  // |W3| = 2
  EXPECT_TRUE(has_violation(validate_transcript(long_word), "round3 length bound"));

  auto b_label = legal_transcript();
  b_label.v_intervals[0] = {2, 4};  // position 4 is b
  EXPECT_TRUE(has_violation(validate_transcript(b_label), "round2 labels"));

  auto order = legal_transcript();
  order.indices = IndexScheme{{1}, {1}};
  EXPECT_TRUE(has_violation(validate_transcript(order), "round5 order"));

  auto chain = legal_transcript();
  chain.v_intervals[0] = {0, 0};  // V1 before W1
  EXPECT_TRUE(has_violation(validate_transcript(chain), "round2 order"));
}

TEST(Game, CopyWinsOnAffineAgainstRandom) {
  const auto u = oracle_U();
  const auto t = play_bounded(kAffine, u, spoiler_random_strategy(7),
                              duplicator_copy_strategy());
  EXPECT_EQ(t.winner, Winner::kDuplicator);
  EXPECT_EQ(replay_round6(t, u), Winner::kDuplicator);
  EXPECT_EQ(t.v_words, t.w_words);
}

TEST(Game, DivergingBeatsCopyOnBoundedBlocks) {
  const auto t = play_bounded(UPWord("", "aab"), oracle_U(),
                              spoiler_diverging_strategy(), duplicator_copy_strategy());
  EXPECT_EQ(t.winner, Winner::kSpoiler);
  ASSERT_TRUE(t.forfeit.has_value());
  EXPECT_EQ(t.forfeit->player, Player::kDuplicator);
  // Family sizes are 1, 2, 3, ….
  for (std::size_t k = 0; k < t.family.size(); ++k) EXPECT_EQ(t.family[k].size(), k + 1);
}

TEST(Game, IllegalDuplicatorForfeits) {
  DuplicatorStrategy cheat{
      "cheat",
      [](const GameContext& ctx, const IntervalFamily& family, const GameTranscript&) {
        Round2Move m;
        Position pos = 0;
        std::size_t k = 0;
        for (std::size_t i = 0; i < ctx.horizon; ++i) {
          while (family.member(k).first < pos) ++k;
          const Interval w = family.member(k);
          m.chosen.push_back(k++);
          m.v_intervals.push_back({w.last + 1, w.last + 3});
          pos = w.last + 4;
        }
        return m;
      },
      [](const GameContext&, const GameTranscript& t) { return t.w_words; }};
  const auto t = play_bounded(UPWord("", "ab"), oracle_U(), spoiler_diverging_strategy(),
                              cheat);
  EXPECT_EQ(t.winner, Winner::kSpoiler);
  ASSERT_TRUE(t.forfeit.has_value());
  EXPECT_EQ(t.forfeit->round, 2);
  EXPECT_NE(t.forfeit->reason.find("round2 labels"), std::string::npos);
  EXPECT_TRUE(validate_transcript(t).empty());
}

TEST(Game, ConstantResponderLosesOnUprime) {
  const auto o = oracle_Uprime();
  for (const OmegaWord& w : {OmegaWord(kAffine), OmegaWord(UPWord("", "aab")),
                             OmegaWord(BlockWord('a', 'b', ConstantLengths{3}))}) {
    const auto t = play_bounded(w, o, spoiler_diverging_strategy(),
                                duplicator_constant_strategy("a"));
    EXPECT_EQ(t.winner, Winner::kSpoiler) << format_word(w);
    EXPECT_FALSE(t.forfeit.has_value());
  }
}

TEST(Game, TranscriptsAreLegalAndReadjudicate) {
  const std::vector<OmegaWord> words{kAffine, UPWord("", "aab"),
                                     BlockWord('a', 'b', ConstantLengths{3}),
                                     BlockWord('a', 'b', AffineLengths{2, 1})};
  for (const auto* name : {"U", "Uprime"}) {
    const auto oracle = make_oracle(name);
    for (const auto& w : words) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::vector<std::pair<SpoilerStrategy, DuplicatorStrategy>> games{
            {spoiler_random_strategy(seed), duplicator_copy_strategy()},
            {spoiler_random_strategy(seed), duplicator_random_strategy(seed)},
            {spoiler_diverging_strategy(), duplicator_random_strategy(seed)},
            {spoiler_random_strategy(seed), duplicator_constant_strategy("a")}};
        for (const auto& [s, d] : games) {
          const auto t = play_bounded(w, oracle, s, d);
          ASSERT_TRUE(validate_transcript(t).empty())
              << to_json(t).dump() << "\n" << validate_transcript(t).front();
          const auto a = adjudicate(t, oracle);
          EXPECT_EQ(a.winner, t.winner);
          const auto back = transcript_from_json(to_json(t));
          EXPECT_EQ(adjudicate(back, oracle).winner, t.winner);
          EXPECT_EQ(to_json(back), to_json(t));
          if (!t.forfeit && !t.adjudication_failure) {
            EXPECT_EQ(replay_round6(t, oracle), t.winner);
          }
        }
      }
    }
  }
}

TEST(Game, CopySoundOnUnboundedWords) {
  for (const auto* name : {"U", "Uprime"}) {
    const auto oracle = make_oracle(name);
    for (std::uint64_t slope = 1; slope <= 3; ++slope) {
      const OmegaWord w = BlockWord('a', 'b', AffineLengths{slope, 2});
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        EXPECT_EQ(play_bounded(w, oracle, spoiler_random_strategy(seed),
                               duplicator_copy_strategy())
                      .winner,
                  Winner::kDuplicator);
      }
      EXPECT_EQ(play_bounded(w, oracle, spoiler_diverging_strategy(),
                             duplicator_copy_strategy())
                    .winner,
                Winner::kDuplicator);
    }
  }
}

TEST(Game, DivergingAgainstRandomDuplicators) {
  // At horizon 10 a random Duplicator on a word with bounded a-blocks may
  // survive; every such play must be flagged.
  const auto oracle = oracle_Uprime();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = play_bounded(BlockWord('a', 'b', ConstantLengths{2}), oracle,
                                spoiler_diverging_strategy(),
                                duplicator_random_strategy(seed));
    if (t.winner != Winner::kSpoiler) {
      EXPECT_TRUE(t.horizon_insufficient || t.adjudication_failure) << to_json(t).dump();
    }
  }
}

TEST(Game, ResponseClassifier) {
  const Alphabet sigma("ab");
  const auto rc = response_classifier(sigma, {"", "a", "b", "a"}, {"x", "y", "x", "z"});
  ASSERT_EQ(rc.responses.size(), 2u);
  EXPECT_EQ(rc.responses[rc.classifier.class_of("a")], "y");
  EXPECT_EQ(rc.responses[rc.classifier.class_of("b")], "x");
  // Unseen words follow the longest observed prefix.
  EXPECT_EQ(rc.responses[rc.classifier.class_of("aab")], "y");
  EXPECT_EQ(rc.responses[rc.classifier.class_of("")], "x");
}

TEST(Game, StrategyNames) {
  EXPECT_EQ(make_spoiler("random:4").name, "random:4");
  EXPECT_EQ(make_duplicator("constant:ab").name, "constant:ab");
  EXPECT_THROW(make_spoiler("copy"), InvalidArgument);
  EXPECT_THROW(make_duplicator("random:x"), InvalidArgument);
  EXPECT_THROW(transcript_from_json(nlohmann::json::object()), ParseError);
}

}  // namespace
}  // namespace omegaext
