#include "omegaext/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "omegaext/error.hpp"

namespace omegaext {
namespace {

constexpr State kNone = std::numeric_limits<State>::max();

// (|u|+|u'|, u, u', |w|, w, right before left), words compared shortlex.
bool violation_less(const Condition1Violation& x, const Condition1Violation& y,
                    const Alphabet& alphabet) {
  const auto sx = x.u.size() + x.u_prime.size();
  const auto sy = y.u.size() + y.u_prime.size();
  if (sx != sy) return sx < sy;
  if (x.u != y.u) return shortlex_less(x.u, y.u, alphabet);
  if (x.u_prime != y.u_prime) return shortlex_less(x.u_prime, y.u_prime, alphabet);
  if (x.w != y.w) return shortlex_less(x.w, y.w, alphabet);
  return x.side == Side::kRight && y.side == Side::kLeft;
}

std::size_t parse_count(std::string_view tok, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected " + std::string(what) + ", got '" +
                     std::string(tok) + "'");
  }
  return v;
}

std::optional<Condition1Violation> least_right_violation(const Classifier& c) {
  const std::size_t n = c.num_states();
  const std::size_t k = c.alphabet().size();
  std::optional<Condition1Violation> best;
  for (State p = 0; p < n; ++p) {
    if (!c.reachable()[p]) continue;
    for (State q = p + 1; q < n; ++q) {
      if (!c.reachable()[q] || c.class_of_state(p) != c.class_of_state(q)) continue;
      // Shortest separating suffix, shortlex by BFS in letter order.
      std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Symbol>> parent;
      std::deque<std::uint64_t> todo;
      auto key = [n](State r, State s) { return std::uint64_t{r} * n + s; };
      const auto start = key(p, q);
      parent.emplace(start, std::make_pair(start, Symbol{0}));
      todo.push_back(start);
      std::optional<std::uint64_t> hit;
      while (!todo.empty() && !hit) {
        const auto cur = todo.front();
        todo.pop_front();
        const State r = static_cast<State>(cur / n), s = static_cast<State>(cur % n);
        if (c.class_of_state(r) != c.class_of_state(s)) {
          hit = cur;
          break;
        }
        for (std::size_t x = 0; x < k; ++x) {
          const auto nk = key(c.next(r, x), c.next(s, x));
          if (parent.emplace(nk, std::make_pair(cur, c.alphabet()[x])).second) {
            todo.push_back(nk);
          }
        }
      }
      if (!hit) continue;
      FiniteWord w;
      for (auto cur = *hit; cur != start; cur = parent[cur].first) {
        w.push_back(parent[cur].second);
      }
      std::reverse(w.begin(), w.end());
      FiniteWord u = c.access_words()[p], u2 = c.access_words()[q];
      if (shortlex_less(u2, u, c.alphabet())) std::swap(u, u2);
      Condition1Violation v{u, u2, w, Side::kRight};
      if (!best || violation_less(v, *best, c.alphabet())) best = v;
    }
  }
  return best;
}

std::optional<Condition1Violation> least_left_violation(
    const Classifier& c, const Condition1Options& options) {
  const std::size_t n = c.num_states();
  const std::size_t k = c.alphabet().size();
  std::vector<State> live;
  for (State r = 0; r < n; ++r) {
    if (c.reachable()[r]) live.push_back(r);
  }
  // Transformations of the state set, in shortlex order of their least
  // witnesses.
  std::map<std::vector<State>, std::size_t> index;
  std::vector<std::vector<State>> funcs;
  std::vector<FiniteWord> words;
  std::vector<State> id(n);
  for (State r = 0; r < n; ++r) id[r] = r;
  index.emplace(id, 0);
  funcs.push_back(id);
  words.emplace_back();
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      std::vector<State> g(n);
      for (State r = 0; r < n; ++r) g[r] = c.next(funcs[i][r], x);
      if (index.count(g)) continue;
      if (funcs.size() >= options.max_monoid_elements) {
        throw BudgetExceeded("transformation monoid", options.max_monoid_elements);
      }
      index.emplace(g, funcs.size());
      funcs.push_back(std::move(g));
      words.push_back(words[i] + c.alphabet()[x]);
    }
  }

  // Group by the class reached from the initial state.
  std::map<ClassId, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    groups[c.class_of_state(funcs[i][c.initial()])].push_back(i);
  }
  std::optional<Condition1Violation> best;
  for (const auto& [cls, members] : groups) {
    const auto& f0 = funcs[members.front()];
    for (std::size_t j = 1; j < members.size(); ++j) {
      const auto& g = funcs[members[j]];
      State witness_state = kNone;
      for (State r : live) {
        if (c.class_of_state(f0[r]) == c.class_of_state(g[r])) continue;
        if (witness_state == kNone ||
            shortlex_less(c.access_words()[r], c.access_words()[witness_state],
                          c.alphabet())) {
          witness_state = r;
        }
      }
      if (witness_state == kNone) continue;
      Condition1Violation v{words[members.front()], words[members[j]],
                            c.access_words()[witness_state], Side::kLeft};
      if (!best || violation_less(v, *best, c.alphabet())) best = v;
      break;
    }
  }
  return best;
}

}  // namespace

// --------------------------------------------------------------- Classifier

Classifier::Classifier(Alphabet alphabet, State initial, std::vector<State> next,
                       std::vector<ClassId> class_of_state)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      next_(std::move(next)),
      class_of_state_(std::move(class_of_state)) {
  const std::size_t n = class_of_state_.size();
  const std::size_t k = alphabet_.size();
  if (n == 0) throw InvalidArgument("classifier needs at least one state");
  if (initial_ >= n) throw InvalidArgument("classifier initial state undeclared");
  if (next_.size() != n * k) {
    throw InvalidArgument("classifier transition function is not total");
  }
  for (State q : next_) {
    if (q >= n) throw InvalidArgument("classifier transition to undeclared state");
  }
  reachable_.assign(n, 0);
  access_.assign(n, FiniteWord());
  std::deque<State> todo{initial_};
  reachable_[initial_] = 1;
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop_front();
    for (std::size_t x = 0; x < k; ++x) {
      const State r = next_[q * k + x];
      if (reachable_[r]) continue;
      reachable_[r] = 1;
      access_[r] = access_[q] + alphabet_[x];
      todo.push_back(r);
    }
  }
  std::set<ClassId> live, all(class_of_state_.begin(), class_of_state_.end());
  for (State q = 0; q < n; ++q) {
    if (reachable_[q]) live.insert(class_of_state_[q]);
  }
  if (live != all) {
    throw InvalidArgument("classifier has a class id on unreachable states only");
  }
  class_list_.assign(live.begin(), live.end());
}

State Classifier::run_from(State q, std::string_view w) const {
  for (Symbol s : w) q = next(q, alphabet_.index(s));
  return q;
}

std::map<ClassId, FiniteWord> Classifier::representatives() const {
  std::map<ClassId, FiniteWord> out;
  for (State q = 0; q < num_states(); ++q) {
    if (!reachable_[q]) continue;
    auto [it, fresh] = out.emplace(class_of_state_[q], access_[q]);
    if (!fresh && shortlex_less(access_[q], it->second, alphabet_)) {
      it->second = access_[q];
    }
  }
  return out;
}

std::map<ClassId, FiniteWord> Classifier::nonempty_representatives() const {
  const std::size_t n = num_states();
  const std::size_t k = alphabet_.size();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<FiniteWord> word(n);
  std::deque<State> todo;
  for (std::size_t x = 0; x < k; ++x) {
    const State r = next(initial_, x);
    if (seen[r]) continue;
    seen[r] = 1;
    word[r] = FiniteWord(1, alphabet_[x]);
    todo.push_back(r);
  }
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop_front();
    for (std::size_t x = 0; x < k; ++x) {
      const State r = next(q, x);
      if (seen[r]) continue;
      seen[r] = 1;
      word[r] = word[q] + alphabet_[x];
      todo.push_back(r);
    }
  }
  std::map<ClassId, FiniteWord> out;
  for (State q = 0; q < n; ++q) {
    if (!seen[q]) continue;
    auto [it, fresh] = out.emplace(class_of_state_[q], word[q]);
    if (!fresh && shortlex_less(word[q], it->second, alphabet_)) {
      it->second = word[q];
    }
  }
  return out;
}

Classifier Classifier::relabelled(const std::map<ClassId, ClassId>& relabel) const {
  auto classes = class_of_state_;
  for (auto& c : classes) {
    auto it = relabel.find(c);
    if (it != relabel.end()) c = it->second;
  }
  return Classifier(alphabet_, initial_, next_, std::move(classes));
}

bool same_partition(const Classifier& a, const Classifier& b) {
  if (!(a.alphabet() == b.alphabet())) return false;
  const std::size_t k = a.alphabet().size();
  std::map<ClassId, ClassId> ab, ba;
  std::set<std::pair<State, State>> seen{{a.initial(), b.initial()}};
  std::deque<std::pair<State, State>> todo{{a.initial(), b.initial()}};
  while (!todo.empty()) {
    const auto [p, q] = todo.front();
    todo.pop_front();
    const ClassId cp = a.class_of_state(p), cq = b.class_of_state(q);
    if (ab.emplace(cp, cq).first->second != cq) return false;
    if (ba.emplace(cq, cp).first->second != cp) return false;
    for (std::size_t x = 0; x < k; ++x) {
      std::pair<State, State> nx{a.next(p, x), b.next(q, x)};
      if (seen.insert(nx).second) todo.push_back(nx);
    }
  }
  return true;
}

// -------------------------------------------------------------- Condition 1

std::optional<Condition1Violation> check_condition1(
    const Classifier& c, const Condition1Options& options) {
  auto right = least_right_violation(c);
  auto left = least_left_violation(c, options);
  if (!right) return left;
  if (!left) return right;
  return violation_less(*left, *right, c.alphabet()) ? left : right;
}

bool verify_violation(const Classifier& c, const Condition1Violation& v) {
  if (c.class_of(v.u) != c.class_of(v.u_prime)) return false;
  if (v.side == Side::kRight) {
    return c.class_of(v.u + v.w) != c.class_of(v.u_prime + v.w);
  }
  return c.class_of(v.w + v.u) != c.class_of(v.w + v.u_prime);
}

RepairResult lemma_repair(const Classifier& c, const Condition1Options& options) {
  RepairResult result{c, {}};
  while (auto v = check_condition1(result.classifier, options)) {
    const auto& cur = result.classifier;
    const bool right = v->side == Side::kRight;
    const ClassId x = cur.class_of(right ? v->u + v->w : v->w + v->u);
    const ClassId y = cur.class_of(right ? v->u_prime + v->w : v->w + v->u_prime);
    result.merges.push_back(*v);
    result.classifier = cur.relabelled({{std::max(x, y), std::min(x, y)}});
  }
  return result;
}

// ------------------------------------------------------------- Constructors

Classifier monoid_kernel_classifier(const TransitionMonoid& m) {
  const std::size_t k = m.alphabet().size();
  std::vector<State> next(m.size() * k);
  std::vector<ClassId> classes(m.size());
  for (TransitionMonoid::Element e = 0; e < m.size(); ++e) {
    classes[e] = e;
    for (std::size_t x = 0; x < k; ++x) next[e * k + x] = m.step(e, x);
  }
  return Classifier(m.alphabet(), TransitionMonoid::kIdentity, std::move(next),
                    std::move(classes));
}

Classifier random_classifier(const Alphabet& alphabet, std::size_t max_states,
                             std::size_t max_classes, Rng& rng) {
  const std::size_t n = uniform(rng, 1, max_states);
  const std::size_t k = alphabet.size();
  std::vector<State> next(n * k);
  std::vector<ClassId> classes(n);
  for (auto& q : next) q = static_cast<State>(uniform(rng, 0, n - 1));
  for (auto& c : classes) c = static_cast<ClassId>(uniform(rng, 0, max_classes - 1));
  // Keep the reachable part, numbered in discovery order.
  std::vector<State> rename(n, kNone);
  std::vector<State> order{0};
  rename[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      const State r = next[order[i] * k + x];
      if (rename[r] == kNone) {
        rename[r] = static_cast<State>(order.size());
        order.push_back(r);
      }
    }
  }
  std::vector<State> next2(order.size() * k);
  std::vector<ClassId> classes2(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    classes2[i] = classes[order[i]];
    for (std::size_t x = 0; x < k; ++x) next2[i * k + x] = rename[next[order[i] * k + x]];
  }
  return Classifier(alphabet, 0, std::move(next2), std::move(classes2));
}

Classifier single_class_classifier(const Alphabet& alphabet) {
  return Classifier(alphabet, 0, std::vector<State>(alphabet.size(), 0), {0});
}

// ---------------------------------------------------------------- Text form

Classifier parse_classifier(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> n;
  std::optional<State> initial;
  std::vector<std::tuple<State, Symbol, State>> edges;
  std::vector<std::pair<State, ClassId>> class_lines;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fail = [&](const std::string& msg) {
      return ParseError("classifier line " + std::to_string(line_no) + ": " + msg);
    };
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0].rfind("//", 0) == 0) continue;
    if (toks[0] == "alphabet") {
      std::string letters;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) throw fail("letters are single characters");
        letters += toks[i];
      }
      try {
        alphabet.emplace(letters);
      } catch (const InvalidArgument& e) {
        throw fail(e.what());
      }
    } else if (toks[0] == "states") {
      if (toks.size() != 2) throw fail("states takes one count");
      n = parse_count(toks[1], "state count");
    } else if (toks[0] == "initial") {
      if (toks.size() != 2) throw fail("a classifier has one initial state");
      initial = static_cast<State>(parse_count(toks[1], "state"));
    } else if (toks[0] == "class") {
      if (toks.size() != 3) throw fail("expected 'class q c'");
      class_lines.emplace_back(static_cast<State>(parse_count(toks[1], "state")),
                               static_cast<ClassId>(parse_count(toks[2], "class")));
    } else {
      if (toks.size() != 3 || toks[1].size() != 1) {
        throw fail("expected a transition 'q a q2', got '" + line + "'");
      }
      edges.emplace_back(static_cast<State>(parse_count(toks[0], "state")),
                         toks[1][0],
                         static_cast<State>(parse_count(toks[2], "state")));
    }
  }
  if (!alphabet || !n || !initial) {
    throw ParseError("classifier needs alphabet, states and initial lines");
  }
  const std::size_t k = alphabet->size();
  std::vector<State> next(*n * k, kNone);
  std::vector<ClassId> classes(*n, std::numeric_limits<ClassId>::max());
  for (const auto& [p, s, q] : edges) {
    if (p >= *n || q >= *n) throw ParseError("classifier: undeclared state");
    const auto x = alphabet->find(s);
    if (!x) throw ParseError(std::string("classifier: foreign letter '") + s + "'");
    auto& slot = next[p * k + *x];
    if (slot != kNone && slot != q) {
      throw ParseError("classifier: two transitions from state " +
                       std::to_string(p) + " on '" + s + "'");
    }
    slot = q;
  }
  for (const auto& [q, c] : class_lines) {
    if (q >= *n) throw ParseError("classifier: class line for undeclared state");
    classes[q] = c;
  }
  for (State q : next) {
    if (q == kNone) throw ParseError("classifier: transition function is not total");
  }
  for (ClassId c : classes) {
    if (c == std::numeric_limits<ClassId>::max()) {
      throw ParseError("classifier: every state needs a class line");
    }
  }
  try {
    return Classifier(*alphabet, *initial, std::move(next), std::move(classes));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("classifier: ") + e.what());
  }
}

std::string format_classifier(const Classifier& c) {
  std::ostringstream os;
  os << "alphabet";
  for (Symbol s : c.alphabet().letters()) os << ' ' << s;
  os << "\nstates " << c.num_states() << "\ninitial " << c.initial() << '\n';
  for (State q = 0; q < c.num_states(); ++q) {
    for (std::size_t x = 0; x < c.alphabet().size(); ++x) {
      os << q << ' ' << c.alphabet()[x] << ' ' << c.next(q, x) << '\n';
    }
  }
  for (State q = 0; q < c.num_states(); ++q) {
    os << "class " << q << ' ' << c.class_of_state(q) << '\n';
  }
  return os.str();
}

}  // namespace omegaext
