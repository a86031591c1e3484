#include <algorithm>
#include <map>

#include "omegaext/congruence.hpp"
#include "omegaext/error.hpp"
#include "omegaext/game.hpp"
#include "omegaext/random.hpp"
#include "omegaext/text.hpp"

namespace omegaext {
namespace {

// Lasso form of the game word, when it has one.
std::optional<UPWord> lasso_of(const OmegaWord& w) {
  if (const auto* up = std::get_if<UPWord>(&w)) return *up;
  return std::get<BlockWord>(w).to_up();
}

// First `length` positions of the first a-run of length >= `length` that
// starts at or after `start`.  Gives up after `budget` positions, or earlier
// once a lasso word provably has no such run.
std::optional<Interval> find_a_run(const OmegaWord& w, Position start,
                                   std::uint64_t length, std::uint64_t budget) {
  Position limit = start + budget;
  if (auto up = lasso_of(w)) {
    const Position periodic = std::max<Position>(start, up->prefix().size());
    limit = std::min(limit, periodic + 2 * up->period().size() + length);
  }
  LetterStream stream(w);
  for (Position p = 0; p < start; ++p) stream.next();
  Position run_start = start;
  std::uint64_t run = 0;
  for (Position p = start; p < limit; ++p) {
    if (stream.next() == 'a') {
      if (run++ == 0) run_start = p;
      if (run >= length) return Interval{run_start, run_start + length - 1};
    } else {
      run = 0;
    }
  }
  return std::nullopt;
}

// Number of consecutive a's from `start`, capped at `cap`.
std::uint64_t a_run_from(const OmegaWord& w, Position start, std::uint64_t cap) {
  std::uint64_t n = 0;
  while (n < cap && letter_at(w, start + n) == 'a') ++n;
  return n;
}

// Index of the first family member starting at or after `pos`.
std::size_t next_member(const IntervalFamily& family, std::size_t k, Position pos) {
  while (family.member(k).first < pos) ++k;
  return k;
}

// Round 2 shared by copy and constant: runs of length `need(|W|)`.
template <typename Need>
Round2Move round2_runs(const GameContext& ctx, const IntervalFamily& family,
                       std::uint64_t budget, Need need) {
  Round2Move move;
  Position pos = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ctx.horizon; ++i) {
    k = next_member(family, k, pos);
    const Interval w = family.member(k);
    const std::uint64_t length = need(w.size());
    const auto v = find_a_run(ctx.word, w.last + 1, length, budget);
    if (!v) {
      move.resign = "no a-interval of length " + std::to_string(length) +
                    " after position " + std::to_string(w.last) + " for W" +
                    std::to_string(i + 1) + " of size " + std::to_string(w.size());
      return move;
    }
    move.chosen.push_back(k);
    move.v_intervals.push_back(*v);
    pos = v->last + 1;
    ++k;
  }
  return move;
}

// Next word of Σ* in shortlex order.
FiniteWord shortlex_next(FiniteWord w, const Alphabet& sigma) {
  for (std::size_t i = w.size(); i-- > 0;) {
    const std::size_t x = sigma.index(w[i]);
    if (x + 1 < sigma.size()) {
      w[i] = sigma[x + 1];
      return w;
    }
    w[i] = sigma[0];
  }
  return FiniteWord(w.size() + 1, sigma[0]);
}

// Both products defined and, when `separate`, judged differently.
bool scheme_ok(const GameTranscript& t, const LanguageOracle& oracle,
               const IndexScheme& s, bool separate) {
  try {
    const bool a = oracle.contains(scheme_product(t.w_words, s));
    const bool b = oracle.contains(scheme_product(t.v_words, s));
    return !separate || a != b;
  } catch (const InvalidArgument&) {
    return false;
  } catch (const UnsupportedInput&) {
    return false;
  }
}

// Strictly increasing index tuples below n, in lexicographic order.
template <typename Visit>
bool for_each_increasing(std::size_t length, std::size_t n, Visit&& visit) {
  if (length > n) return false;
  std::vector<std::size_t> idx(length);
  for (std::size_t i = 0; i < length; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = length;
    while (i > 0 && idx[i - 1] == n - length + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < length; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<IndexScheme> search_schemes(const GameTranscript& t,
                                          const LanguageOracle& oracle,
                                          bool separate) {
  const std::size_t n = std::min(t.w_words.size(), t.v_words.size());
  std::optional<IndexScheme> found;
  for (std::size_t c = 1; c <= 2 && !found; ++c) {
    for (std::size_t h = 0; h <= 1 && !found; ++h) {
      for_each_increasing(h + c, n, [&](const std::vector<std::size_t>& idx) {
        IndexScheme s{{idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(h)},
                      {idx.begin() + static_cast<std::ptrdiff_t>(h), idx.end()}};
        if (!scheme_ok(t, oracle, s, separate)) return false;
        found = std::move(s);
        return true;
      });
    }
  }
  return found;
}

IndexScheme diverging_round5(const GameContext& ctx, GameTranscript& t) {
  const LanguageOracle& oracle = ctx.oracle;
  const auto rc = response_classifier(oracle.alphabet(), t.w_words, t.v_words);
  LanguageOracle::Replacements rep;
  for (ClassId c = 0; c < rc.responses.size(); ++c) rep[c] = rc.responses[c];

  std::optional<Condition2ViolationWitness> witness;
  try {
    witness = oracle.has_violation_finder()
                  ? oracle.find_violation(rc.classifier, rep)
                  : check_condition2_bounded(rc.classifier, oracle, {}, &rep).witness;
  } catch (const UnsupportedInput& e) {
    t.notes.push_back(std::string("violation search failed: ") + e.what());
  }

  if (witness && witness->scheme.empty()) {
    // u_n = w_{i_n} and f(u_n) = v_{i_n} at increasing indices.
    std::vector<FiniteWord> sequence = witness->head;
    sequence.insert(sequence.end(), witness->cycle.begin(), witness->cycle.end());
    std::vector<std::size_t> idx;
    std::size_t j = 0;
    for (const auto& u : sequence) {
      const FiniteWord& fu = rc.responses.at(rc.classifier.class_of(u));
      while (j < t.w_words.size() && !(t.w_words[j] == u && t.v_words[j] == fu)) ++j;
      if (j == t.w_words.size()) break;
      idx.push_back(j++);
    }
    if (idx.size() == sequence.size()) {
      const auto h = static_cast<std::ptrdiff_t>(witness->head.size());
      IndexScheme s{{idx.begin(), idx.begin() + h}, {idx.begin() + h, idx.end()}};
      if (scheme_ok(t, oracle, s, true)) {
        t.notes.push_back("round 5 realises the violation witness");
        return s;
      }
    }
    t.notes.push_back("violation witness " + format_word(witness->original) +
                      " not realisable within the horizon");
  } else if (witness) {
    t.notes.push_back("violation witness uses the scheme " + witness->scheme +
                      ", which the horizon cannot realise");
  } else {
    t.notes.push_back("no violation witness against the observed responses");
  }
  t.horizon_insufficient = true;
  if (auto s = search_schemes(t, oracle, true)) {
    t.notes.push_back("round 5 uses a best-effort separating scheme");
    return *s;
  }
  t.notes.push_back("no separating scheme among small index schemes");
  if (auto s = search_schemes(t, oracle, false)) return *s;
  return IndexScheme{{}, {t.w_words.size() - 1}};
}

std::pair<std::string, std::string> split_name(std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) return {std::string(name), ""};
  return {std::string(name.substr(0, colon)), std::string(name.substr(colon + 1))};
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("bad seed '" + text + "'");
}

}  // namespace

ResponseClassifier response_classifier(const Alphabet& sigma,
                                       const std::vector<FiniteWord>& w_words,
                                       const std::vector<FiniteWord>& v_words) {
  if (w_words.size() != v_words.size() || w_words.empty()) {
    throw InvalidArgument("response classifier needs matching nonempty rounds");
  }
  // f(w) = the response at the first occurrence of w.
  std::map<FiniteWord, FiniteWord> f;
  ResponseClassifier out{single_class_classifier(sigma), {}};
  std::map<FiniteWord, ClassId> class_of_response;
  for (std::size_t i = 0; i < w_words.size(); ++i) {
    sigma.require_word(w_words[i], "response classifier");
    if (!f.emplace(w_words[i], v_words[i]).second) continue;
    if (class_of_response.emplace(v_words[i], out.responses.size()).second) {
      out.responses.push_back(v_words[i]);
    }
  }

  // Prefix tree of the observed words.
  const std::size_t k = sigma.size();
  std::vector<FiniteWord> node_word{""};
  std::map<FiniteWord, State> node_of{{"", 0}};
  for (const auto& [w, v] : f) {
    for (std::size_t len = 1; len <= w.size(); ++len) {
      const FiniteWord p = w.substr(0, len);
      if (node_of.emplace(p, static_cast<State>(node_word.size())).second) {
        node_word.push_back(p);
      }
    }
  }
  std::vector<State> next(node_word.size() * k);
  std::vector<ClassId> cls(node_word.size());
  for (State q = 0; q < node_word.size(); ++q) {
    for (std::size_t x = 0; x < k; ++x) {
      auto it = node_of.find(node_word[q] + sigma[x]);
      next[q * k + x] = it == node_of.end() ? q : it->second;
    }
    ClassId c = 0;
    for (std::size_t len = node_word[q].size() + 1; len-- > 0;) {
      auto it = f.find(node_word[q].substr(0, len));
      if (it != f.end()) {
        c = class_of_response.at(it->second);
        break;
      }
    }
    cls[q] = c;
  }
  out.classifier = Classifier(sigma, 0, std::move(next), std::move(cls));
  return out;
}

DuplicatorStrategy duplicator_copy_strategy(std::uint64_t scan_budget) {
  return DuplicatorStrategy{
      "copy",
      [scan_budget](const GameContext& ctx, const IntervalFamily& family,
                    const GameTranscript&) {
        return round2_runs(ctx, family, scan_budget,
                           [](std::uint64_t size) { return size; });
      },
      [](const GameContext&, const GameTranscript& t) { return t.w_words; }};
}

DuplicatorStrategy duplicator_constant_strategy(FiniteWord response,
                                                std::uint64_t scan_budget) {
  const std::uint64_t need = response.size() + 1;
  return DuplicatorStrategy{
      "constant:" + (response.empty() ? std::string(kEpsilon) : response),
      [scan_budget, need](const GameContext& ctx, const IntervalFamily& family,
                          const GameTranscript&) {
        return round2_runs(ctx, family, scan_budget,
                           [need](std::uint64_t) { return need; });
      },
      [response](const GameContext& ctx, const GameTranscript&) {
        return std::vector<FiniteWord>(ctx.horizon, response);
      }};
}

DuplicatorStrategy duplicator_random_strategy(std::uint64_t seed,
                                              std::uint64_t scan_budget) {
  auto rng = std::make_shared<Rng>(seed);
  return DuplicatorStrategy{
      "random:" + std::to_string(seed),
      [rng, scan_budget](const GameContext& ctx, const IntervalFamily& family,
                         const GameTranscript&) {
        Round2Move move;
        Position pos = 0;
        std::size_t k = 0;
        for (std::size_t i = 0; i < ctx.horizon; ++i) {
          k = next_member(family, k, pos);
          const Interval w = family.member(k);
          const auto start = find_a_run(ctx.word, w.last + 1, 1, scan_budget);
          if (!start) {
            move.resign = "no a-position after " + std::to_string(w.last);
            return move;
          }
          const auto avail = a_run_from(ctx.word, start->first, 3);
          const Interval v{start->first, start->first + uniform(*rng, 1, avail) - 1};
          move.chosen.push_back(k);
          move.v_intervals.push_back(v);
          pos = v.last + 1;
          ++k;
        }
        return move;
      },
      [rng](const GameContext& ctx, const GameTranscript& t) {
        std::vector<FiniteWord> out;
        for (const auto& v : t.v_intervals) {
          out.push_back(random_word(ctx.oracle.alphabet(),
                                    uniform(*rng, 0, v.size() - 1), *rng));
        }
        return out;
      }};
}

SpoilerStrategy spoiler_diverging_strategy() {
  return SpoilerStrategy{
      "diverging",
      [](const GameContext&) {
        // Member k is [k(k+1)/2, k(k+1)/2 + k]: sizes 1, 2, 3, ….
        return IntervalFamily([](std::size_t k) {
          const Position first = static_cast<Position>(k) * (k + 1) / 2;
          return Interval{first, first + k};
        });
      },
      [](const GameContext& ctx, const GameTranscript& t) {
        const Alphabet& sigma = ctx.oracle.alphabet();
        std::vector<FiniteWord> out;
        FiniteWord next;
        for (std::size_t i = 0; i < t.chosen.size(); ++i) {
          if (next.size() >= t.w_interval(i).size()) next.clear();
          out.push_back(next);
          next = shortlex_next(next, sigma);
        }
        return out;
      },
      diverging_round5};
}

SpoilerStrategy spoiler_random_strategy(std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return SpoilerStrategy{
      "random:" + std::to_string(seed),
      [rng](const GameContext&) {
        auto last = std::make_shared<std::optional<Interval>>();
        return IntervalFamily([rng, last](std::size_t) {
          const Position first =
              (*last ? (*last)->last + 1 : 0) + uniform(*rng, 0, 3);
          const Interval x{first, first + uniform(*rng, 1, 5) - 1};
          *last = x;
          return x;
        });
      },
      [rng](const GameContext& ctx, const GameTranscript& t) {
        std::vector<FiniteWord> out;
        for (std::size_t i = 0; i < t.chosen.size(); ++i) {
          out.push_back(random_word(ctx.oracle.alphabet(),
                                    uniform(*rng, 0, t.w_interval(i).size() - 1),
                                    *rng));
        }
        return out;
      },
      [rng](const GameContext& ctx, GameTranscript& t) {
        const std::size_t n = t.w_words.size();
        IndexScheme s;
        for (int attempt = 0; attempt < 200; ++attempt) {
          const std::size_t c = uniform(*rng, 1, std::min<std::size_t>(2, n));
          const std::size_t h = uniform(*rng, 0, std::min<std::size_t>(2, n - c));
          std::vector<std::size_t> all(n);
          for (std::size_t i = 0; i < n; ++i) all[i] = i;
          std::shuffle(all.begin(), all.end(), *rng);
          all.resize(h + c);
          std::sort(all.begin(), all.end());
          s = IndexScheme{{all.begin(), all.begin() + static_cast<std::ptrdiff_t>(h)},
                          {all.begin() + static_cast<std::ptrdiff_t>(h), all.end()}};
          if (scheme_ok(t, ctx.oracle, s, false)) return s;
        }
        t.notes.push_back("no scheme with defined products after 200 samples");
        return s;
      }};
}

SpoilerStrategy make_spoiler(std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "diverging" && arg.empty()) return spoiler_diverging_strategy();
  if (kind == "random") return spoiler_random_strategy(parse_seed(arg));
  throw InvalidArgument("unknown Spoiler strategy '" + std::string(name) +
                        "' (expected diverging or random[:seed])");
}

DuplicatorStrategy make_duplicator(std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "copy" && arg.empty()) return duplicator_copy_strategy();
  if (kind == "random") return duplicator_random_strategy(parse_seed(arg));
  if (kind == "constant") {
    return duplicator_constant_strategy(arg.empty() ? "a" : parse_finite_word(arg));
  }
  throw InvalidArgument("unknown Duplicator strategy '" + std::string(name) +
                        "' (expected copy, random[:seed] or constant[:word])");
}

}  // namespace omegaext
