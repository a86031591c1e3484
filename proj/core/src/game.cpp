#include "omegaext/game.hpp"

#include <algorithm>

#include "omegaext/error.hpp"
#include "omegaext/text.hpp"

namespace omegaext {
namespace {

std::string pos_str(std::size_t i) { return std::to_string(i + 1); }

std::string describe(const Interval& x) {
  return "[" + std::to_string(x.first) + "," + std::to_string(x.last) + "]";
}

bool overlap(const Interval& x, const Interval& y) {
  return std::max(x.first, y.first) <= std::min(x.last, y.last);
}

void check_words(const std::vector<FiniteWord>& words,
                 const std::vector<Interval>& intervals, const std::string& round,
                 const std::string& name, const std::string& alphabet,
                 std::vector<std::string>& out) {
  if (words.size() > intervals.size()) {
    out.push_back(round + " count: " + std::to_string(words.size()) +
                  " words for " + std::to_string(intervals.size()) + " intervals");
  }
  for (std::size_t i = 0; i < std::min(words.size(), intervals.size()); ++i) {
    if (words[i].size() >= intervals[i].size()) {
      out.push_back(round + " length bound: |" + name + pos_str(i) +
                    "| = " + std::to_string(words[i].size()) + " is not below " +
                    std::to_string(intervals[i].size()));
    }
    if (words[i].find_first_not_of(alphabet) != FiniteWord::npos) {
      out.push_back(round + " alphabet: " + name + pos_str(i) + " = " +
                    format_word(words[i]) + " uses a letter outside {" + alphabet +
                    "}");
    }
  }
}

std::vector<FiniteWord> pick(const std::vector<FiniteWord>& words,
                             const std::vector<std::size_t>& idx) {
  std::vector<FiniteWord> out;
  for (auto i : idx) out.push_back(words.at(i));
  return out;
}

Player other(Player p) {
  return p == Player::kSpoiler ? Player::kDuplicator : Player::kSpoiler;
}

Winner winner_of(Player p) {
  return p == Player::kSpoiler ? Winner::kSpoiler : Winner::kDuplicator;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

IntervalFamily::IntervalFamily(std::function<Interval(std::size_t)> generator)
    : cache_(std::make_shared<Cache>(Cache{std::move(generator), {}})) {}

const Interval& IntervalFamily::member(std::size_t k) const {
  while (cache_->members.size() <= k) {
    cache_->members.push_back(cache_->generator(cache_->members.size()));
  }
  return cache_->members[k];
}

std::string to_string(Player p) {
  return p == Player::kSpoiler ? "Spoiler" : "Duplicator";
}

std::string to_string(Winner w) {
  switch (w) {
    case Winner::kSpoiler: return "Spoiler";
    case Winner::kDuplicator: return "Duplicator";
    default: return "none";
  }
}

UPWord scheme_product(const std::vector<FiniteWord>& words, const IndexScheme& s) {
  return omega_product(pick(words, s.head), pick(words, s.cycle));
}

std::vector<std::string> validate_transcript(const GameTranscript& t) {
  std::vector<std::string> out;
  // Round 1.
  for (std::size_t k = 0; k < t.family.size(); ++k) {
    const auto& x = t.family[k];
    if (x.first > x.last) {
      out.push_back("round1 interval: member " + pos_str(k) + " " + describe(x) +
                    " is empty");
    }
    if (k == 0) continue;
    const auto& prev = t.family[k - 1];
    if (overlap(prev, x)) {
      out.push_back("round1 disjointness: members " + pos_str(k - 1) + " " +
                    describe(prev) + " and " + pos_str(k) + " " + describe(x) +
                    " overlap");
    } else if (!before(prev, x)) {
      out.push_back("round1 order: member " + pos_str(k) + " " + describe(x) +
                    " precedes member " + pos_str(k - 1));
    }
  }
  // Round 2.
  if (t.chosen.size() != t.v_intervals.size()) {
    out.push_back("round2 count: " + std::to_string(t.chosen.size()) +
                  " W intervals and " + std::to_string(t.v_intervals.size()) +
                  " V intervals");
  }
  std::vector<Interval> ws;
  for (std::size_t i = 0; i < t.chosen.size(); ++i) {
    if (t.chosen[i] >= t.family.size()) {
      out.push_back("round2 family membership: W" + pos_str(i) +
                    " is not a recorded family member");
      return out;
    }
    ws.push_back(t.family[t.chosen[i]]);
  }
  std::optional<Interval> last;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (last && !before(*last, ws[i])) {
      out.push_back("round2 order: W" + pos_str(i) + " " + describe(ws[i]) +
                    " does not follow " + describe(*last));
    }
    last = ws[i];
    if (i >= t.v_intervals.size()) continue;
    const auto& v = t.v_intervals[i];
    if (v.first > v.last) {
      out.push_back("round2 interval: V" + pos_str(i) + " is empty");
      continue;
    }
    if (!before(*last, v)) {
      out.push_back("round2 order: V" + pos_str(i) + " " + describe(v) +
                    " does not follow " + describe(*last));
    }
    last = v;
    for (Position p = v.first; p <= v.last; ++p) {
      if (letter_at(t.word, p) != 'a') {
        out.push_back("round2 labels: position " + std::to_string(p) + " of V" +
                      pos_str(i) + " is not labelled a");
        break;
      }
    }
  }
  // Rounds 3 and 4.
  check_words(t.w_words, ws, "round3", "w", t.alphabet, out);
  check_words(t.v_words, t.v_intervals, "round4", "v", t.alphabet, out);
  // Round 5.
  if (t.indices) {
    std::vector<std::size_t> all = t.indices->head;
    all.insert(all.end(), t.indices->cycle.begin(), t.indices->cycle.end());
    if (t.indices->cycle.empty()) out.push_back("round5 empty cycle");
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (all[k] >= t.w_words.size() || all[k] >= t.v_words.size()) {
        out.push_back("round5 range: index " + pos_str(all[k]) +
                      " was not played");
      }
      if (k > 0 && all[k] <= all[k - 1]) {
        out.push_back("round5 order: indices are not strictly increasing");
      }
    }
  }
  return out;
}

Adjudication adjudicate(const GameTranscript& t, const LanguageOracle& oracle) {
  Adjudication a;
  if (t.forfeit) {
    a.winner = winner_of(other(t.forfeit->player));
    return a;
  }
  if (!t.indices) {
    a.failure = "the play ended before round 5";
    return a;
  }
  try {
    a.w_member = oracle.contains(scheme_product(t.w_words, *t.indices));
    a.v_member = oracle.contains(scheme_product(t.v_words, *t.indices));
  } catch (const InvalidArgument& e) {
    a.failure = e.what();
    return a;
  } catch (const UnsupportedInput& e) {
    a.failure = e.what();
    return a;
  }
  a.winner = *a.w_member == *a.v_member ? Winner::kDuplicator : Winner::kSpoiler;
  return a;
}

GameTranscript play_bounded(const OmegaWord& word, const LanguageOracle& oracle,
                            const SpoilerStrategy& spoiler,
                            const DuplicatorStrategy& duplicator,
                            const PlayConfig& config) {
  if (config.horizon == 0) throw InvalidArgument("horizon must be positive");
  GameTranscript t{.word = word,
                   .oracle = oracle.name(),
                   .alphabet = oracle.alphabet().letters(),
                   .horizon = config.horizon,
                   .spoiler = spoiler.name,
                   .duplicator = duplicator.name};
  const GameContext ctx{t.word, oracle, config.horizon};
  auto forfeit = [&](Player p, int round, std::string reason) {
    t.forfeit = Forfeit{p, round, std::move(reason)};
    t.winner = winner_of(other(p));
    return t;
  };

  const IntervalFamily family = spoiler.round1(ctx);
  Round2Move move = duplicator.round2(ctx, family, t);

  // Spoiler's family is judged on the members Duplicator looked at.
  t.family = family.materialised();
  auto problems = validate_transcript(t);
  if (!problems.empty()) {
    const std::string reason = join(problems);
    std::size_t keep = 1;
    while (keep < t.family.size() && !overlap(t.family[keep - 1], t.family[keep]) &&
           before(t.family[keep - 1], t.family[keep])) {
      ++keep;
    }
    t.family.resize(std::min(keep, t.family.size()));
    return forfeit(Player::kSpoiler, 1, reason);
  }

  t.chosen = move.chosen;
  t.v_intervals = move.v_intervals;
  problems = validate_transcript(t);
  if (!problems.empty() || move.resign) {
    std::string reason = move.resign.value_or("");
    if (!problems.empty()) {
      reason = join(problems);
      t.chosen.clear();
      t.v_intervals.clear();
    }
    return forfeit(Player::kDuplicator, 2, reason);
  }
  if (t.chosen.size() != config.horizon) {
    const auto n = t.chosen.size();
    t.chosen.clear();
    t.v_intervals.clear();
    return forfeit(Player::kDuplicator, 2,
                   "round2 count: " + std::to_string(n) + " pairs for horizon " +
                       std::to_string(config.horizon));
  }

  t.w_words = spoiler.round3(ctx, t);
  problems = validate_transcript(t);
  if (!problems.empty() || t.w_words.size() != config.horizon) {
    if (problems.empty()) problems.push_back("round3 count");
    t.w_words.clear();
    return forfeit(Player::kSpoiler, 3, join(problems));
  }

  t.v_words = duplicator.round4(ctx, t);
  problems = validate_transcript(t);
  if (!problems.empty() || t.v_words.size() != config.horizon) {
    if (problems.empty()) problems.push_back("round4 count");
    t.v_words.clear();
    return forfeit(Player::kDuplicator, 4, join(problems));
  }

  t.indices = spoiler.round5(ctx, t);
  problems = validate_transcript(t);
  if (!problems.empty()) {
    t.indices.reset();
    return forfeit(Player::kSpoiler, 5, join(problems));
  }

  const Adjudication a = adjudicate(t, oracle);
  t.w_member = a.w_member;
  t.v_member = a.v_member;
  t.winner = a.winner;
  t.adjudication_failure = a.failure;
  return t;
}

// ------------------------------------------------------------------- JSON

namespace {

nlohmann::json intervals_json(const std::vector<Interval>& xs) {
  auto out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back({x.first, x.last});
  return out;
}

std::vector<Interval> intervals_from(const nlohmann::json& j) {
  std::vector<Interval> out;
  for (const auto& x : j) out.push_back({x.at(0).get<Position>(), x.at(1).get<Position>()});
  return out;
}

nlohmann::json words_json(const std::vector<FiniteWord>& ws) {
  auto out = nlohmann::json::array();
  for (const auto& w : ws) out.push_back(w);
  return out;
}

Winner winner_from(const std::string& s) {
  if (s == "Spoiler") return Winner::kSpoiler;
  if (s == "Duplicator") return Winner::kDuplicator;
  if (s == "none") return Winner::kNone;
  throw ParseError("unknown winner '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const GameTranscript& t) {
  nlohmann::json j;
  j["word"] = format_word(t.word);
  j["oracle"] = t.oracle;
  j["alphabet"] = t.alphabet;
  j["horizon"] = t.horizon;
  j["spoiler"] = t.spoiler;
  j["duplicator"] = t.duplicator;
  j["round1"] = intervals_json(t.family);
  j["round2"] = {{"chosen", t.chosen}, {"V", intervals_json(t.v_intervals)}};
  j["round3"] = words_json(t.w_words);
  j["round4"] = words_json(t.v_words);
  j["round5"] = t.indices ? nlohmann::json{{"head", t.indices->head},
                                           {"cycle", t.indices->cycle}}
                          : nlohmann::json(nullptr);
  j["w_member"] = t.w_member ? nlohmann::json(*t.w_member) : nlohmann::json(nullptr);
  j["v_member"] = t.v_member ? nlohmann::json(*t.v_member) : nlohmann::json(nullptr);
  j["winner"] = to_string(t.winner);
  j["forfeit"] = t.forfeit ? nlohmann::json{{"player", to_string(t.forfeit->player)},
                                            {"round", t.forfeit->round},
                                            {"reason", t.forfeit->reason}}
                           : nlohmann::json(nullptr);
  j["adjudication_failure"] = t.adjudication_failure
                                  ? nlohmann::json(*t.adjudication_failure)
                                  : nlohmann::json(nullptr);
  j["horizon_insufficient"] = t.horizon_insufficient;
  j["notes"] = t.notes;
  j["violations"] = validate_transcript(t);
  return j;
}

GameTranscript transcript_from_json(const nlohmann::json& j) {
  try {
    GameTranscript t{.word = parse_omega_word(j.at("word").get<std::string>()),
                     .oracle = j.at("oracle").get<std::string>(),
                     .alphabet = j.at("alphabet").get<std::string>(),
                     .horizon = j.at("horizon").get<std::size_t>(),
                     .spoiler = j.at("spoiler").get<std::string>(),
                     .duplicator = j.at("duplicator").get<std::string>()};
    t.family = intervals_from(j.at("round1"));
    t.chosen = j.at("round2").at("chosen").get<std::vector<std::size_t>>();
    t.v_intervals = intervals_from(j.at("round2").at("V"));
    t.w_words = j.at("round3").get<std::vector<FiniteWord>>();
    t.v_words = j.at("round4").get<std::vector<FiniteWord>>();
    if (!j.at("round5").is_null()) {
      t.indices = IndexScheme{j["round5"].at("head").get<std::vector<std::size_t>>(),
                              j["round5"].at("cycle").get<std::vector<std::size_t>>()};
    }
    if (!j.at("w_member").is_null()) t.w_member = j["w_member"].get<bool>();
    if (!j.at("v_member").is_null()) t.v_member = j["v_member"].get<bool>();
    t.winner = winner_from(j.at("winner").get<std::string>());
    if (!j.at("forfeit").is_null()) {
      const auto& f = j["forfeit"];
      const auto who = f.at("player").get<std::string>();
      if (who != "Spoiler" && who != "Duplicator") {
        throw ParseError("unknown player '" + who + "'");
      }
      t.forfeit = Forfeit{who == "Spoiler" ? Player::kSpoiler : Player::kDuplicator,
                          f.at("round").get<int>(), f.at("reason").get<std::string>()};
    }
    if (!j.at("adjudication_failure").is_null()) {
      t.adjudication_failure = j["adjudication_failure"].get<std::string>();
    }
    t.horizon_insufficient = j.value("horizon_insufficient", false);
    t.notes = j.value("notes", std::vector<std::string>{});
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed transcript: ") + e.what());
  }
}

}  // namespace omegaext
