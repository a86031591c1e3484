#include "omegaext/buchi.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "graph.hpp"
#include "omegaext/error.hpp"

namespace omegaext {
namespace {

constexpr State kNone = std::numeric_limits<State>::max();

std::vector<std::size_t> letter_indices(const Alphabet& alphabet,
                                        std::string_view w,
                                        std::string_view what) {
  alphabet.require_word(w, what);
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(alphabet.index(s));
  return out;
}

detail::Adjacency state_graph(const BuchiAutomaton& a) {
  detail::Adjacency adj(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
      for (State r : a.successors(q, x)) adj[q].push_back(r);
    }
    std::sort(adj[q].begin(), adj[q].end());
    adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
  }
  return adj;
}

bool same_letters(const Alphabet& x, const Alphabet& y) {
  if (x.size() != y.size()) return false;
  for (Symbol s : x.letters()) {
    if (!y.contains(s)) return false;
  }
  return true;
}

void require_same_alphabet(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetMismatch("automata over different alphabets {" +
                           a.alphabet().letters() + "} and {" +
                           b.alphabet().letters() + "}");
  }
}

// Shortest word labelling a path from any source to `target`.
FiniteWord path_word(const BuchiAutomaton& a, const std::vector<State>& sources,
                     State target) {
  const std::size_t n = a.num_states();
  std::vector<State> parent(n, kNone);
  std::vector<Symbol> via(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  std::deque<State> todo;
  for (State s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop_front();
    if (q == target) break;
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
      for (State r : a.successors(q, x)) {
        if (seen[r]) continue;
        seen[r] = 1;
        parent[r] = q;
        via[r] = a.alphabet()[x];
        todo.push_back(r);
      }
    }
  }
  FiniteWord w;
  for (State q = target; parent[q] != kNone; q = parent[q]) w.push_back(via[q]);
  std::reverse(w.begin(), w.end());
  return w;
}

// Shortest nonempty word labelling a cycle through `q`.
FiniteWord cycle_word(const BuchiAutomaton& a, State q) {
  std::vector<State> starts;
  std::map<State, Symbol> first_letter;
  for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
    for (State r : a.successors(q, x)) {
      if (first_letter.emplace(r, a.alphabet()[x]).second) starts.push_back(r);
    }
  }
  FiniteWord best;
  bool found = false;
  for (State r : starts) {
    FiniteWord rest = path_word(a, {r}, q);
    if (r != q && rest.empty()) continue;
    FiniteWord w = first_letter[r] + rest;
    if (!found || w.size() < best.size()) {
      best = std::move(w);
      found = true;
    }
  }
  return best;
}

std::size_t parse_index(std::string_view tok, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected " + std::string(what) + ", got '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

// ----------------------------------------------------------- BuchiAutomaton

BuchiAutomaton::BuchiAutomaton(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)),
      initial_(num_states, 0),
      accepting_(num_states, 0),
      succ_(num_states * alphabet_.size()) {}

State BuchiAutomaton::add_state(bool initial, bool accepting) {
  initial_.push_back(initial ? 1 : 0);
  accepting_.push_back(accepting ? 1 : 0);
  succ_.resize(succ_.size() + alphabet_.size());
  return static_cast<State>(initial_.size() - 1);
}

void BuchiAutomaton::check_state(State q) const {
  if (q >= num_states()) {
    throw InvalidArgument("state " + std::to_string(q) + " is not declared (" +
                          std::to_string(num_states()) + " states)");
  }
}

void BuchiAutomaton::add_transition(State from, Symbol letter, State to) {
  check_state(from);
  check_state(to);
  auto& out = succ_[from * alphabet_.size() + alphabet_.index(letter)];
  auto it = std::lower_bound(out.begin(), out.end(), to);
  if (it != out.end() && *it == to) return;
  out.insert(it, to);
  ++num_transitions_;
}

void BuchiAutomaton::set_initial(State q, bool value) {
  check_state(q);
  initial_[q] = value ? 1 : 0;
}

void BuchiAutomaton::set_accepting(State q, bool value) {
  check_state(q);
  accepting_[q] = value ? 1 : 0;
}

std::vector<State> BuchiAutomaton::initial_states() const {
  std::vector<State> out;
  for (State q = 0; q < num_states(); ++q) {
    if (initial_[q]) out.push_back(q);
  }
  return out;
}

std::vector<State> BuchiAutomaton::accepting_states() const {
  std::vector<State> out;
  for (State q = 0; q < num_states(); ++q) {
    if (accepting_[q]) out.push_back(q);
  }
  return out;
}

std::vector<Transition> BuchiAutomaton::transitions() const {
  std::vector<Transition> out;
  out.reserve(num_transitions_);
  for (State q = 0; q < num_states(); ++q) {
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      for (State r : successors(q, x)) out.push_back({q, alphabet_[x], r});
    }
  }
  return out;
}

// --------------------------------------------------------------- Membership

bool accepts_up(const BuchiAutomaton& a, const UPWord& w) {
  const auto prefix = letter_indices(a.alphabet(), w.prefix(), "lasso prefix");
  const auto period = letter_indices(a.alphabet(), w.period(), "lasso period");
  const std::size_t n = a.num_states();
  const std::size_t p = period.size();

  std::vector<std::uint8_t> current(n, 0);
  for (State q : a.initial_states()) current[q] = 1;
  for (std::size_t x : prefix) {
    std::vector<std::uint8_t> next(n, 0);
    for (State q = 0; q < n; ++q) {
      if (!current[q]) continue;
      for (State r : a.successors(q, x)) next[r] = 1;
    }
    current.swap(next);
  }

  // Product of states with positions in the period.
  detail::Adjacency adj(n * p);
  for (State q = 0; q < n; ++q) {
    for (std::size_t j = 0; j < p; ++j) {
      const std::size_t j2 = (j + 1) % p;
      for (State r : a.successors(q, period[j])) {
        adj[q * p + j].push_back(static_cast<std::uint32_t>(r * p + j2));
      }
    }
  }
  std::vector<std::uint32_t> sources;
  for (State q = 0; q < n; ++q) {
    if (current[q]) sources.push_back(static_cast<std::uint32_t>(q * p));
  }
  const auto live = detail::reachable(adj, sources);
  const auto scc = detail::strongly_connected(adj, live);
  for (State q = 0; q < n; ++q) {
    if (!a.is_accepting(q)) continue;
    for (std::size_t j = 0; j < p; ++j) {
      const std::size_t v = q * p + j;
      if (live[v] && scc.cyclic[scc.component[v]]) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------- Boolean algebra

BuchiAutomaton intersect(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  require_same_alphabet(a, b);
  const Alphabet& sigma = a.alphabet();
  BuchiAutomaton out(sigma, 0);
  using Key = std::tuple<State, State, int>;
  std::map<Key, State> ids;
  std::deque<Key> todo;
  auto id_of = [&](const Key& k) {
    auto [it, fresh] = ids.emplace(k, 0);
    if (fresh) {
      const auto [p, q, phase] = k;
      it->second = out.add_state(false, phase == 0 && a.is_accepting(p));
      todo.push_back(k);
    }
    return it->second;
  };
  for (State p : a.initial_states()) {
    for (State q : b.initial_states()) out.set_initial(id_of({p, q, 0}));
  }
  while (!todo.empty()) {
    const Key k = todo.front();
    todo.pop_front();
    const auto [p, q, phase] = k;
    int next_phase = phase;
    if (phase == 0 && a.is_accepting(p)) next_phase = 1;
    if (phase == 1 && b.is_accepting(q)) next_phase = 0;
    const State from = ids.at(k);
    for (std::size_t x = 0; x < sigma.size(); ++x) {
      for (State p2 : a.successors(p, x)) {
        for (State q2 : b.successors(q, x)) {
          out.add_transition(from, sigma[x], id_of({p2, q2, next_phase}));
        }
      }
    }
  }
  return out;
}

BuchiAutomaton unite(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  require_same_alphabet(a, b);
  const auto na = static_cast<State>(a.num_states());
  BuchiAutomaton out(a.alphabet(), a.num_states() + b.num_states());
  for (State q = 0; q < na; ++q) {
    out.set_initial(q, a.is_initial(q));
    out.set_accepting(q, a.is_accepting(q));
  }
  for (State q = 0; q < b.num_states(); ++q) {
    out.set_initial(na + q, b.is_initial(q));
    out.set_accepting(na + q, b.is_accepting(q));
  }
  for (const auto& t : a.transitions()) out.add_transition(t.from, t.letter, t.to);
  for (const auto& t : b.transitions()) {
    out.add_transition(na + t.from, t.letter, na + t.to);
  }
  return out;
}

// ----------------------------------------------------------------- Emptiness

EmptinessResult is_empty(const BuchiAutomaton& a) {
  const auto adj = state_graph(a);
  const auto init = a.initial_states();
  std::vector<std::uint32_t> sources(init.begin(), init.end());
  const auto live = detail::reachable(adj, sources);
  const auto scc = detail::strongly_connected(adj, live);

  // Accepting state on a cycle, nearest to the initial states.
  std::vector<std::uint32_t> dist(a.num_states(),
                                  std::numeric_limits<std::uint32_t>::max());
  std::deque<State> todo;
  for (State q : init) {
    if (dist[q] != 0) {
      dist[q] = 0;
      todo.push_back(q);
    }
  }
  State target = kNone;
  while (!todo.empty() && target == kNone) {
    const State q = todo.front();
    todo.pop_front();
    if (a.is_accepting(q) && scc.cyclic[scc.component[q]]) {
      target = q;
      break;
    }
    for (auto r : adj[q]) {
      if (dist[r] == std::numeric_limits<std::uint32_t>::max()) {
        dist[r] = dist[q] + 1;
        todo.push_back(r);
      }
    }
  }
  if (target == kNone) return {true, std::nullopt};
  return {false, UPWord(path_word(a, init, target), cycle_word(a, target))};
}

// ------------------------------------------------------------ Homomorphisms

BuchiAutomaton map_letters(const BuchiAutomaton& a, const Homomorphism& h) {
  if (!h.letter_to_letter()) {
    throw InvalidArgument("map_letters needs a letter-to-letter homomorphism");
  }
  if (!same_letters(h.source(), a.alphabet())) {
    throw AlphabetMismatch("homomorphism source {" + h.source().letters() +
                           "} differs from automaton alphabet {" +
                           a.alphabet().letters() + "}");
  }
  BuchiAutomaton out(h.target(), a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    out.set_initial(q, a.is_initial(q));
    out.set_accepting(q, a.is_accepting(q));
  }
  for (const auto& t : a.transitions()) {
    out.add_transition(t.from, h.image(t.letter)[0], t.to);
  }
  return out;
}

BuchiAutomaton inverse_map_letters(const BuchiAutomaton& a,
                                   const Homomorphism& h) {
  if (!h.letter_to_letter()) {
    throw InvalidArgument(
        "inverse_map_letters needs a letter-to-letter homomorphism");
  }
  for (Symbol c : h.source().letters()) {
    a.alphabet().require_word(h.image(c), "homomorphism image");
  }
  BuchiAutomaton out(h.source(), a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    out.set_initial(q, a.is_initial(q));
    out.set_accepting(q, a.is_accepting(q));
    for (Symbol c : h.source().letters()) {
      const std::size_t x = a.alphabet().index(h.image(c)[0]);
      for (State r : a.successors(q, x)) out.add_transition(q, c, r);
    }
  }
  return out;
}

// ---------------------------------------------------------------------- Trim

BuchiAutomaton trim(const BuchiAutomaton& a) {
  const auto adj = state_graph(a);
  const auto init = a.initial_states();
  const auto live =
      detail::reachable(adj, std::vector<std::uint32_t>(init.begin(), init.end()));
  const auto scc = detail::strongly_connected(adj, live);
  std::vector<std::uint32_t> good;
  for (State q = 0; q < a.num_states(); ++q) {
    if (live[q] && a.is_accepting(q) && scc.cyclic[scc.component[q]]) {
      good.push_back(q);
    }
  }
  const auto useful = detail::reachable(detail::reverse(adj), good);

  std::vector<State> rename(a.num_states(), kNone);
  BuchiAutomaton out(a.alphabet(), 0);
  for (State q = 0; q < a.num_states(); ++q) {
    if (live[q] && useful[q]) {
      rename[q] = out.add_state(a.is_initial(q), a.is_accepting(q));
    }
  }
  for (const auto& t : a.transitions()) {
    if (rename[t.from] != kNone && rename[t.to] != kNone) {
      out.add_transition(rename[t.from], t.letter, rename[t.to]);
    }
  }
  return out;
}

// --------------------------------------------------------------- Equivalence

std::optional<UPWord> distinguishing_word(const BuchiAutomaton& a,
                                          const BuchiAutomaton& b,
                                          const ComplementOptions& options) {
  require_same_alphabet(a, b);
  auto left = is_empty(intersect(a, complement(b, options)));
  if (!left.empty) return left.witness;
  auto right = is_empty(intersect(b, complement(a, options)));
  if (!right.empty) return right.witness;
  return std::nullopt;
}

bool equivalent(const BuchiAutomaton& a, const BuchiAutomaton& b,
                const ComplementOptions& options) {
  return !distinguishing_word(a, b, options).has_value();
}

// ------------------------------------------------------- Reference automata

BuchiAutomaton empty_automaton(const Alphabet& alphabet) {
  return BuchiAutomaton(alphabet, 0);
}

BuchiAutomaton universal_automaton(const Alphabet& alphabet) {
  BuchiAutomaton out(alphabet, 1);
  out.set_initial(0);
  out.set_accepting(0);
  for (Symbol s : alphabet.letters()) out.add_transition(0, s, 0);
  return out;
}

BuchiAutomaton infinitely_many(const Alphabet& alphabet, Symbol letter) {
  alphabet.index(letter);
  BuchiAutomaton out(alphabet, 2);
  out.set_initial(0);
  out.set_accepting(1);
  for (Symbol s : alphabet.letters()) {
    const State to = s == letter ? 1 : 0;
    out.add_transition(0, s, to);
    out.add_transition(1, s, to);
  }
  return out;
}

BuchiAutomaton only_letter(const Alphabet& alphabet, Symbol letter) {
  BuchiAutomaton out(alphabet, 1);
  out.set_initial(0);
  out.set_accepting(0);
  out.add_transition(0, letter, 0);
  return out;
}

// ---------------------------------------------------------------- Text form

BuchiAutomaton parse_buchi(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Alphabet> alphabet;
  std::optional<BuchiAutomaton> a;
  std::vector<State> initial, accepting;
  std::vector<std::tuple<State, Symbol, State>> edges;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("automaton line " + std::to_string(line_no) + ": " + msg);
  };
  std::optional<std::size_t> num_states;
  bool saw_initial = false, saw_accepting = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0].rfind("//", 0) == 0) continue;
    const std::string& head = toks[0];
    if (head == "alphabet") {
      if (alphabet) throw fail("duplicate alphabet line");
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
    } else if (head == "states") {
      if (num_states) throw fail("duplicate states line");
      if (toks.size() != 2) throw fail("states takes one count");
      num_states = parse_index(toks[1], "state count");
    } else if (head == "initial" || head == "accepting") {
      auto& target = head == "initial" ? initial : accepting;
      (head == "initial" ? saw_initial : saw_accepting) = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        target.push_back(static_cast<State>(parse_index(toks[i], "state")));
      }
    } else {
      if (toks.size() != 3 || toks[1].size() != 1) {
        throw fail("expected a transition 'q a q2', got '" + line + "'");
      }
      edges.emplace_back(static_cast<State>(parse_index(toks[0], "state")),
                         toks[1][0],
                         static_cast<State>(parse_index(toks[2], "state")));
    }
  }
  if (!alphabet) throw ParseError("automaton has no alphabet line");
  if (!num_states) throw ParseError("automaton has no states line");
  if (!saw_initial) throw ParseError("automaton has no initial line");
  if (!saw_accepting) throw ParseError("automaton has no accepting line");
  BuchiAutomaton out(*alphabet, *num_states);
  try {
    for (State q : initial) out.set_initial(q);
    for (State q : accepting) out.set_accepting(q);
    for (const auto& [p, s, q] : edges) out.add_transition(p, s, q);
  } catch (const Error& e) {
    throw ParseError(std::string("automaton: ") + e.what());
  }
  return out;
}

std::string format_buchi(const BuchiAutomaton& a) {
  std::ostringstream os;
  os << "alphabet";
  for (Symbol s : a.alphabet().letters()) os << ' ' << s;
  os << "\nstates " << a.num_states() << "\ninitial";
  for (State q : a.initial_states()) os << ' ' << q;
  os << "\naccepting";
  for (State q : a.accepting_states()) os << ' ' << q;
  os << '\n';
  for (const auto& t : a.transitions()) {
    os << t.from << ' ' << t.letter << ' ' << t.to << '\n';
  }
  return os.str();
}

}  // namespace omegaext
