#pragma once

// The congruence game for an ω-word u over {a,b} and a language L:
//   1. Spoiler picks an infinite family of pairwise disjoint intervals.
//   2. Duplicator picks W₁ < V₁ < W₂ < V₂ < ⋯ with Wᵢ from the family and
//      every position of every Vᵢ labelled a in u.
//   3. Spoiler picks words wᵢ with |wᵢ| < |Wᵢ|.
//   4. Duplicator picks words vᵢ with |vᵢ| < |Vᵢ|.
//   5. Spoiler picks indices i₁ < i₂ < ⋯.
//   6. Duplicator wins iff w_{i₁}w_{i₂}⋯ ∈ L ⟺ v_{i₁}v_{i₂}⋯ ∈ L.
//
// Bounded play materialises `horizon` pairs in rounds 2 to 4.  Round 5 is an
// eventually periodic scheme over the materialised indices: the strictly
// increasing index list head·cycle, whose products are
// head-words·(cycle-words)^ω.  Illegal moves forfeit.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "omegaext/language.hpp"
#include "omegaext/words.hpp"

namespace omegaext {

/// The positions first..last.
struct Interval {
  Position first = 0;
  Position last = 0;
  std::uint64_t size() const noexcept { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// W < V: W ends strictly before V starts.
inline bool before(const Interval& w, const Interval& v) { return w.last < v.first; }

/// Spoiler's round-1 move: member(k) is the k-th interval (k from 0).
/// Members are memoised, so stateful generators are queried once per index
/// in increasing order.
class IntervalFamily {
 public:
  explicit IntervalFamily(std::function<Interval(std::size_t)> generator);

  const Interval& member(std::size_t k) const;
  /// Members generated so far.
  const std::vector<Interval>& materialised() const noexcept { return cache_->members; }

 private:
  struct Cache {
    std::function<Interval(std::size_t)> generator;
    std::vector<Interval> members;
  };
  std::shared_ptr<Cache> cache_;
};

enum class Player { kSpoiler, kDuplicator };
enum class Winner { kSpoiler, kDuplicator, kNone };

std::string to_string(Player p);
std::string to_string(Winner w);

struct Forfeit {
  Player player;
  int round;
  std::string reason;
};

struct IndexScheme {
  std::vector<std::size_t> head;
  std::vector<std::size_t> cycle;
};

struct GameTranscript {
  OmegaWord word;
  std::string oracle{};
  /// Letters the words of rounds 3 and 4 are drawn from.
  std::string alphabet{};
  std::size_t horizon = 0;
  std::string spoiler{};
  std::string duplicator{};

  /// Materialised prefix of the round-1 family.
  std::vector<Interval> family{};
  /// Round 2: Wᵢ = family[chosen[i]].
  std::vector<std::size_t> chosen{};
  std::vector<Interval> v_intervals{};
  std::vector<FiniteWord> w_words{};
  std::vector<FiniteWord> v_words{};
  std::optional<IndexScheme> indices{};

  std::optional<bool> w_member{};
  std::optional<bool> v_member{};
  Winner winner = Winner::kNone;
  std::optional<Forfeit> forfeit{};
  /// The oracle could not decide a round-6 product.
  std::optional<std::string> adjudication_failure{};
  /// Spoiler could not realise its intended round-5 sequence.
  bool horizon_insufficient = false;
  std::vector<std::string> notes{};

  Interval w_interval(std::size_t i) const { return family.at(chosen.at(i)); }
};

/// Rule violations of the transcript's moves, such as "round1 disjointness"
/// or "round3 length bound"; empty when every recorded move is legal.
std::vector<std::string> validate_transcript(const GameTranscript& t);

struct GameContext {
  const OmegaWord& word;
  const LanguageOracle& oracle;
  std::size_t horizon;
};

struct Round2Move {
  std::vector<std::size_t> chosen;
  std::vector<Interval> v_intervals;
  /// Set when the strategy gives up (no legal move found).
  std::optional<std::string> resign;
};

struct SpoilerStrategy {
  std::string name;
  std::function<IntervalFamily(const GameContext&)> round1;
  std::function<std::vector<FiniteWord>(const GameContext&, const GameTranscript&)>
      round3;
  /// May append to `notes` and set `horizon_insufficient`.
  std::function<IndexScheme(const GameContext&, GameTranscript&)> round5;
};

struct DuplicatorStrategy {
  std::string name;
  std::function<Round2Move(const GameContext&, const IntervalFamily&,
                           const GameTranscript&)>
      round2;
  std::function<std::vector<FiniteWord>(const GameContext&, const GameTranscript&)>
      round4;
};

struct PlayConfig {
  std::size_t horizon = 10;
};

/// Plays one bounded game.  Illegal moves forfeit; oracle errors on the
/// round-6 products leave the winner at `kNone` with the failure recorded.
GameTranscript play_bounded(const OmegaWord& word, const LanguageOracle& oracle,
                            const SpoilerStrategy& spoiler,
                            const DuplicatorStrategy& duplicator,
                            const PlayConfig& config = {});

struct Adjudication {
  std::optional<bool> w_member;
  std::optional<bool> v_member;
  Winner winner = Winner::kNone;
  std::optional<std::string> failure;
};

/// Round 6 from the recorded moves alone.  A forfeit decides the winner
/// without oracle calls.
Adjudication adjudicate(const GameTranscript& t, const LanguageOracle& oracle);

/// The round-6 products of a scheme; throws `InvalidArgument` when the
/// cycle words concatenate to ε.
UPWord scheme_product(const std::vector<FiniteWord>& words, const IndexScheme& s);

nlohmann::json to_json(const GameTranscript& t);
/// Throws `ParseError` on malformed records.
GameTranscript transcript_from_json(const nlohmann::json& j);

// ----------------------------------------------------------------- Strategies

/// Round 2 takes, after each Vᵢ₋₁, the next family member Wᵢ and the first
/// |Wᵢ| positions of the first a-run of length ≥ |Wᵢ| after it; round 4
/// copies vᵢ = wᵢ.  Resigns when no such run starts within `scan_budget`
/// positions (or provably none exists, for eventually periodic words).
DuplicatorStrategy duplicator_copy_strategy(std::uint64_t scan_budget = 1'000'000);

/// Round 2 picks a random a-interval of length at most 3 after each Wᵢ;
/// round 4 picks random words short enough for their intervals.
DuplicatorStrategy duplicator_random_strategy(std::uint64_t seed,
                                              std::uint64_t scan_budget = 1'000'000);

/// Like the copy strategy in round 2 (runs of length ≥ |response| + 1) but
/// always answers `response` in round 4.
DuplicatorStrategy duplicator_constant_strategy(FiniteWord response = "a",
                                                std::uint64_t scan_budget = 1'000'000);

/// Round 1: contiguous intervals of sizes 1, 2, 3, ….  Round 3: Σ* in
/// shortlex order, wrapping to ε whenever the next word does not fit.
/// Round 5: builds f from the observed pairs (wᵢ, vᵢ), asks the oracle's
/// violation finder (or the bounded condition (2) search) for a witness
/// against f and realises it among the materialised indices; otherwise
/// searches small schemes directly and marks the horizon insufficient.
SpoilerStrategy spoiler_diverging_strategy();

/// Random family (sizes 1..5, gaps 0..3), random words, and a random scheme
/// resampled until both round-6 products are defined.
SpoilerStrategy spoiler_random_strategy(std::uint64_t seed);

/// The classifier of the diverging strategy: the prefix tree of the observed
/// words wᵢ, where missing edges stay put, labelled by the class of vᵢ for
/// the first i with wᵢ = the longest observed prefix (class 0 for none).
/// `responses[c]` is the word of class c.
struct ResponseClassifier {
  Classifier classifier;
  std::vector<FiniteWord> responses;
};
ResponseClassifier response_classifier(const Alphabet& sigma,
                                       const std::vector<FiniteWord>& w_words,
                                       const std::vector<FiniteWord>& v_words);

/// Builds a strategy from its CLI name: copy, random[:seed], constant[:word]
/// for Duplicator; diverging, random[:seed] for Spoiler.
SpoilerStrategy make_spoiler(std::string_view name);
DuplicatorStrategy make_duplicator(std::string_view name);

}  // namespace omegaext
