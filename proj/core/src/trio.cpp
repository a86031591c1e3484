#include "omegaext/trio.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "omegaext/error.hpp"

namespace omegaext {

// ---------------------------------------------------------------- Transducers

RationalTransducer::RationalTransducer(Alphabet input, Alphabet output, std::size_t num_states)
    : input_(std::move(input)), output_(std::move(output)), finals_(num_states, 0) {}

State RationalTransducer::add_state() {
  finals_.push_back(0);
  return static_cast<State>(finals_.size() - 1);
}

void RationalTransducer::add_edge(State from, State to, FiniteWord input, FiniteWord output) {
  if (from >= num_states() || to >= num_states()) {
    throw InvalidArgument("transducer edge between unknown states");
  }
  input_.require_word(input, "transducer input label");
  output_.require_word(output, "transducer output label");
  edges_.push_back({from, to, std::move(input), std::move(output)});
}

void RationalTransducer::set_initial(State q) {
  if (q >= num_states()) throw InvalidArgument("unknown initial state");
  if (std::find(initial_.begin(), initial_.end(), q) == initial_.end()) initial_.push_back(q);
}

void RationalTransducer::set_final(State q) { finals_.at(q) = 1; }

TransducerImage apply_transducer(const RationalTransducer& t, const FiniteWord& w,
                                 std::size_t output_cap) {
  t.input_alphabet().require_word(w, "transducer input");
  std::vector<std::vector<const TransducerEdge*>> out_edges(t.num_states());
  for (const auto& e : t.edges()) out_edges[e.from].push_back(&e);

  using Config = std::tuple<State, std::size_t, FiniteWord>;
  std::set<Config> seen;
  std::deque<Config> queue;
  for (State q : t.initial_states()) {
    if (seen.emplace(q, 0, FiniteWord{}).second) queue.emplace_back(q, 0, FiniteWord{});
  }
  TransducerImage image;
  while (!queue.empty()) {
    auto [q, pos, out] = std::move(queue.front());
    queue.pop_front();
    if (pos == w.size() && t.is_final(q)) image.outputs.insert(out);
    for (const auto* e : out_edges[q]) {
      if (w.compare(pos, e->input.size(), e->input) != 0) continue;
      if (out.size() + e->output.size() > output_cap) {
        image.truncated = true;
        continue;
      }
      Config next{e->to, pos + e->input.size(), out + e->output};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return image;
}

RationalTransducer identity_transducer(const Alphabet& sigma) {
  RationalTransducer t(sigma, sigma, 1);
  t.set_initial(0);
  t.set_final(0);
  for (Symbol x : sigma.letters()) t.add_edge(0, 0, FiniteWord(1, x), FiniteWord(1, x));
  return t;
}

RationalTransducer erasing_transducer(const Alphabet& sigma, const Alphabet& output) {
  RationalTransducer t(sigma, output, 1);
  t.set_initial(0);
  t.set_final(0);
  for (Symbol x : sigma.letters()) t.add_edge(0, 0, FiniteWord(1, x), {});
  return t;
}

RationalTransducer copy_transducer(const Alphabet& sigma, std::size_t max_length) {
  if (sigma.contains(kHash)) throw InvalidArgument("the alphabet already contains #");
  RationalTransducer t(sigma, Alphabet(sigma.letters() + kHash), 1);
  const State done = 0;
  t.set_final(done);
  // One state per word read so far; from u, ε/#u finishes.
  std::vector<std::pair<FiniteWord, State>> layer{{FiniteWord{}, t.add_state()}};
  t.set_initial(layer.front().second);
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<std::pair<FiniteWord, State>> next;
    for (const auto& [u, q] : layer) {
      t.add_edge(q, done, {}, FiniteWord(1, kHash) + u);
      if (len == max_length) continue;
      for (Symbol x : sigma.letters()) {
        const State r = t.add_state();
        t.add_edge(q, r, FiniteWord(1, x), FiniteWord(1, x));
        next.emplace_back(u + x, r);
      }
    }
    layer = std::move(next);
  }
  return t;
}

// --------------------------------------------------------- Finite languages

namespace {

/// The ∼-class of a word for aⁿbⁿ: (0, i) for aⁱ, (1, i − j) for aⁱbʲ with
/// 1 ≤ j ≤ i, and (2, 0) for the rest.
std::pair<int, std::size_t> anbn_class(const FiniteWord& w) {
  const std::size_t i = w.find_first_not_of('a');
  if (i == FiniteWord::npos) return {0, w.size()};
  const std::size_t j = w.size() - i;
  if (w.find_first_not_of('b', i) != FiniteWord::npos || j > i) return {2, 0};
  return {1, i - j};
}

bool anbn_member(const FiniteWord& w) {
  const auto c = anbn_class(w);
  return c.first == 1 && c.second == 0;
}

}  // namespace

FiniteLanguageOracle oracle_anbn() {
  FiniteLanguageOracle L{"anbn", Alphabet("ab"), [](const FiniteWord& w) {
                           Alphabet("ab").require_word(w, "anbn input");
                           return anbn_member(w);
                         }};
  L.equivalent = [](const FiniteWord& u, const FiniteWord& v) {
    return anbn_class(u) == anbn_class(v);
  };
  return L;
}

FiniteLanguageOracle make_finite_oracle(std::string_view name) {
  if (name == "anbn") return oracle_anbn();
  if (name == "anbn-bounded") {
    auto L = oracle_anbn();
    L.name = "anbn-bounded";
    L.equivalent = nullptr;
    return L;
  }
  throw InvalidArgument("unknown finite-word language '" + std::string(name) + "'");
}

CongruenceVerdict right_congruence_bounded(const FiniteLanguageOracle& L, const FiniteWord& u,
                                           const FiniteWord& u2, std::size_t suffix_bound) {
  for (const auto& v : words_up_to(L.alphabet, suffix_bound)) {
    if (L.contains(u + v) != L.contains(u2 + v)) return {false, false, v};
  }
  return {true, false, std::nullopt};
}

CongruenceVerdict right_congruence_finite(const FiniteLanguageOracle& L, const FiniteWord& u,
                                          const FiniteWord& u2, std::size_t suffix_bound) {
  if (!L.equivalent) return right_congruence_bounded(L, u, u2, suffix_bound);
  L.alphabet.require_word(u + u2, "congruence input");
  return {L.equivalent(u, u2), true, std::nullopt};
}

// --------------------------------------------------------- Separated words

FiniteWord parse_separator_text(std::string_view text) {
  FiniteWord out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == kRhoHash) {
      if (i + 1 >= text.size() || text[i + 1] != kHash) {
        throw ParseError("'%' must be followed by '#' at offset " + std::to_string(i));
      }
      out.push_back(kRhoHash);
      ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::string format_separator_text(const FiniteWord& s) {
  std::string out;
  for (Symbol x : s) {
    out.push_back(x);
    if (x == kRhoHash) out.push_back(kHash);
  }
  return out;
}

SeparatedWord parse_separated(const FiniteWord& s) {
  SeparatedWord out;
  FiniteWord segment;
  for (Symbol x : s) {
    if (x == kHash) {
      if (!out.v.empty()) throw ParseError("# after ρ# in '" + format_separator_text(s) + "'");
      out.w.push_back(std::move(segment));
      segment.clear();
    } else if (x == kRhoHash) {
      out.v.push_back(std::move(segment));
      segment.clear();
    } else {
      segment.push_back(x);
    }
  }
  if (!segment.empty() || out.w.empty() || out.v.empty()) {
    throw ParseError("'" + format_separator_text(s) +
                     "' is not of the form w#…#w#vρ#…vρ#");
  }
  return out;
}

FiniteWord format_separated(const SeparatedWord& s) {
  FiniteWord out;
  for (const auto& w : s.w) out += w + kHash;
  for (const auto& v : s.v) out += v + kRhoHash;
  return out;
}

namespace {

struct Congruence {
  const FiniteLanguageOracle& L;
  std::size_t bound;
  bool exact = true;

  bool operator()(const FiniteWord& u, const FiniteWord& v) {
    const auto r = right_congruence_finite(L, u, v, bound);
    exact = exact && r.exact;
    return r.equivalent;
  }
};

bool pairwise_distinct(const std::vector<FiniteWord>& ws, Congruence& sim) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (sim(ws[i], ws[j])) return false;
    }
  }
  return true;
}

bool chain_holds(const SeparatedWord& s, Congruence& sim) {
  for (std::size_t i = 0; i + 1 < s.w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < s.v.size(); ++j) {
      if (sim(s.w[i], s.v[j]) && !sim(s.w[i + 1], s.v[j + 1])) return false;
    }
  }
  return true;
}

}  // namespace

MembershipVerdict member_L1(const FiniteLanguageOracle& L, const FiniteWord& s,
                            std::size_t suffix_bound) {
  const auto n = std::count(s.begin(), s.end(), kHash);
  if (n != 1) {
    throw InvalidArgument("an L1 word has exactly one #, '" + s + "' has " +
                          std::to_string(n));
  }
  const auto at = s.find(kHash);
  Congruence sim{L, suffix_bound};
  const bool member = sim(s.substr(0, at), s.substr(at + 1));
  return {member, sim.exact};
}

MembershipVerdict member_L2(const FiniteLanguageOracle& L, const FiniteWord& s,
                            std::size_t suffix_bound) {
  const auto sep = parse_separated(s);
  Congruence sim{L, suffix_bound};
  const bool member = sim(sep.w.front(), sep.v.front()) && sim(sep.w.back(), sep.v.back()) &&
                      pairwise_distinct(sep.w, sim) && pairwise_distinct(sep.v, sim) &&
                      chain_holds(sep, sim);
  return {member, sim.exact};
}

FiniteWord project_to_separators(const FiniteWord& s) {
  FiniteWord out;
  for (Symbol x : s) {
    if (x == kHash || x == kRhoHash) out.push_back(x);
  }
  return out;
}

namespace {

class L2Search {
 public:
  L2Search(const FiniteLanguageOracle& L, std::size_t max_length, std::size_t bound)
      : L_(L), sim_{L, bound}, bound_(bound) {
    census_.max_length = max_length;
  }

  L2Census run() {
    extend(0);
    census_.exact = sim_.exact;
    return census_;
  }

 private:
  // Current prefix: completed segments in w_/v_, the open segment in seg_.
  void extend(std::size_t length) {
    if (!v_.empty() && seg_.empty()) visit();
    if (length == census_.max_length) return;
    for (Symbol x : L_.alphabet.letters()) {
      seg_.push_back(x);
      extend(length + 1);
      seg_.pop_back();
    }
    if (v_.empty()) close(w_, length, [&] { return distinct_last(w_); });
    if (!w_.empty()) {
      close(v_, length, [&] {
        const std::size_t j = v_.size() - 1;
        if (!distinct_last(v_)) return false;
        if (j == 0) return sim_(w_.front(), v_.front());
        for (std::size_t i = 0; i + 1 < w_.size(); ++i) {
          if (sim_(w_[i], v_[j - 1]) && !sim_(w_[i + 1], v_[j])) return false;
        }
        return true;
      });
    }
  }

  template <typename Check>
  void close(std::vector<FiniteWord>& segments, std::size_t length, Check ok) {
    FiniteWord saved = seg_;
    segments.push_back(seg_);
    seg_.clear();
    if (ok()) extend(length + 1);
    seg_ = std::move(saved);
    segments.pop_back();
  }

  bool distinct_last(const std::vector<FiniteWord>& segments) {
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
      if (sim_(segments[i], segments.back())) return false;
    }
    return true;
  }

  void visit() {
    SeparatedWord s{w_, v_};
    const FiniteWord word = format_separated(s);
    ++census_.examined;
    const auto verdict = member_L2(L_, word, bound_);
    if (!verdict.member) return;
    ++census_.members;
    if (w_.size() != v_.size()) {
      census_.unequal.push_back(word);
    } else {
      census_.attained.insert(w_.size());
    }
  }

  const FiniteLanguageOracle& L_;
  Congruence sim_;
  std::size_t bound_;
  L2Census census_;
  std::vector<FiniteWord> w_, v_;
  FiniteWord seg_;
};

}  // namespace

L2Census census_L2(const FiniteLanguageOracle& L, std::size_t max_length,
                   std::size_t suffix_bound) {
  return L2Search(L, max_length, suffix_bound).run();
}

LanguageOracle loop_representation(const FiniteLanguageOracle& L, std::size_t power_bound) {
  const std::string name = "loop(" + L.name + ",K=" + std::to_string(power_bound) + ")";
  return LanguageOracle(name, L.alphabet, [L, power_bound](const UPWord& w) {
    const FiniteWord root = primitive_root(w.period());
    for (std::size_t r = 0; r < root.size(); ++r) {
      const FiniteWord rotation = root.substr(r) + root.substr(0, r);
      FiniteWord power;
      for (std::size_t k = 1; k <= power_bound; ++k) {
        power += rotation;
        if (L.contains(power)) return true;
      }
    }
    return false;
  });
}

}  // namespace omegaext
