#include "omegaext/mso.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "omegaext/error.hpp"
#include "omegaext/text.hpp"

namespace omegaext {
namespace {

using Kind = Formula::Kind;

const std::string& letter_pool() {
  static const std::string pool = [] {
    std::string out;
    for (int c = 33; c < 127; ++c) {
      if (is_letter_char(static_cast<char>(c))) out.push_back(static_cast<char>(c));
    }
    return out;
  }();
  return pool;
}

std::string coded_letters(const Alphabet& sigma, std::size_t m) {
  if (m == 0) return sigma.letters();
  if (m >= 16 || (sigma.size() << m) > letter_pool().size()) {
    throw UnsupportedInput("coded alphabet of " + std::to_string(sigma.size()) +
                           " letters and " + std::to_string(m) +
                           " variables exceeds the " +
                           std::to_string(letter_pool().size()) + "-letter pool");
  }
  return letter_pool().substr(0, sigma.size() << m);
}

// ------------------------------------------------------------ Compilation

struct Compiled {
  BuchiAutomaton automaton;
  std::vector<std::string> vars;  // sorted
};

template <typename Keep>
BuchiAutomaton one_state(const Coding& c, Keep keep) {
  BuchiAutomaton a(c.coded(), 1);
  a.set_initial(0);
  a.set_accepting(0);
  for (Symbol ch : c.coded().letters()) {
    const auto [letter, bits] = c.decode(ch);
    if (keep(letter, bits)) a.add_transition(0, ch, 0);
  }
  return a;
}

BuchiAutomaton singleton_automaton(const Coding& c, const std::string& v) {
  const std::size_t b = c.bit(v);
  BuchiAutomaton a(c.coded(), 2);
  a.set_initial(0);
  a.set_accepting(1);
  for (Symbol ch : c.coded().letters()) {
    const bool on = (c.decode(ch).second >> b) & 1;
    if (on) {
      a.add_transition(0, ch, 1);
    } else {
      a.add_transition(0, ch, 0);
      a.add_transition(1, ch, 1);
    }
  }
  return a;
}

class Compiler {
 public:
  Compiler(Alphabet sigma, CompileOptions options)
      : sigma_(std::move(sigma)), options_(options) {}

  /// Compiles f, or ¬f when `negated`; negations are pushed to the atoms so
  /// that only position and set quantifiers under an odd number of them need
  /// a complement.
  Compiled run(const Formula& f, bool negated = false) {
    const auto& c = f.children();
    switch (f.kind()) {
      case Kind::kTrue:
      case Kind::kFalse:
        return {(f.kind() == Kind::kTrue) != negated ? universal_automaton(sigma_)
                                                     : empty_automaton(sigma_),
                {}};
      case Kind::kLess:
      case Kind::kIn:
      case Kind::kLetter:
      case Kind::kLanguage: {
        auto a = atom(f);
        if (negated) a.automaton = complement(a.automaton, options_.complement);
        return a;
      }
      case Kind::kNot:
        return run(c[0], !negated);
      case Kind::kAnd:
      case Kind::kOr: {
        const bool is_and = (f.kind() == Kind::kAnd) != negated;
        if (c.empty()) return run(Formula::truth(f.kind() == Kind::kAnd), negated);
        Compiled acc = run(c[0], negated);
        for (std::size_t i = 1; i < c.size(); ++i) acc = combine(acc, run(c[i], negated), is_and);
        return acc;
      }
      case Kind::kImplies:
        return combine(run(c[0], !negated), run(c[1], negated), negated);
      case Kind::kIff: {
        // f ⇔ g is (f ∧ g) ∨ (¬f ∧ ¬g); its negation is (f ∧ ¬g) ∨ (¬f ∧ g).
        const auto pos0 = run(c[0]), neg0 = run(c[0], true);
        const auto pos1 = run(c[1]), neg1 = run(c[1], true);
        return combine(combine(pos0, negated ? neg1 : pos1, true),
                       combine(neg0, negated ? pos1 : neg1, true), false);
      }
      case Kind::kExists:
      case Kind::kForall: {
        const bool forall = f.kind() == Kind::kForall;
        auto p = project(run(c[0], forall), f.vars()[0], f.sort());
        if (forall != negated) p.automaton = complement(p.automaton, options_.complement);
        return p;
      }
    }
    throw InvalidArgument("unknown formula node");
  }

  Compiled atom(const Formula& f) const {
    switch (f.kind()) {
      case Kind::kLess: {
        const auto& x = f.vars()[0];
        const auto& y = f.vars()[1];
        if (x == y) return {empty_automaton(Coding(sigma_, {x}).coded()), {x}};
        std::vector<std::string> vars{x, y};
        std::sort(vars.begin(), vars.end());
        const Coding c(sigma_, vars);
        const std::size_t bx = c.bit(x), by = c.bit(y);
        BuchiAutomaton a(c.coded(), 3);
        a.set_initial(0);
        a.set_accepting(2);
        for (Symbol ch : c.coded().letters()) {
          const auto bits = c.decode(ch).second;
          const bool sx = (bits >> bx) & 1, sy = (bits >> by) & 1;
          if (!sx && !sy) {
            for (State q = 0; q < 3; ++q) a.add_transition(q, ch, q);
          } else if (sx && !sy) {
            a.add_transition(0, ch, 1);
          } else if (!sx && sy) {
            a.add_transition(1, ch, 2);
          }
        }
        return {std::move(a), vars};
      }
      case Kind::kIn: {
        const auto& x = f.vars()[0];
        const auto& set = f.vars()[1];
        std::vector<std::string> vars{x, set};
        std::sort(vars.begin(), vars.end());
        const Coding c(sigma_, vars);
        const std::size_t bx = c.bit(x), bs = c.bit(set);
        return {one_state(c,
                          [&](Symbol, std::uint32_t bits) {
                            return !((bits >> bx) & 1) || ((bits >> bs) & 1);
                          }),
                vars};
      }
      case Kind::kLetter: {
        const auto& x = f.vars()[0];
        if (!sigma_.contains(f.letter_value())) {
          throw AlphabetMismatch(std::string("letter ") + f.letter_value() +
                                 " is not in {" + sigma_.letters() + "}");
        }
        const Coding c(sigma_, {x});
        return {one_state(c,
                          [&](Symbol letter, std::uint32_t bits) {
                            return !(bits & 1) || letter == f.letter_value();
                          }),
                {x}};
      }
      default:
        throw UnsupportedInput("language atom " + f.name() +
                               " cannot be compiled to an automaton");
    }
  }

  /// Restricts coded letters over `to` to the variables `from` ⊆ `to`.
  Homomorphism restriction(const std::vector<std::string>& to,
                           const std::vector<std::string>& from) const {
    const Coding big(sigma_, to), small(sigma_, from);
    std::map<Symbol, FiniteWord> images;
    for (Symbol ch : big.coded().letters()) {
      const auto [letter, bits] = big.decode(ch);
      std::uint32_t out = 0;
      for (std::size_t i = 0; i < from.size(); ++i) {
        if ((bits >> big.bit(from[i])) & 1) out |= 1u << i;
      }
      images[ch] = FiniteWord(1, small.encode(letter, out));
    }
    return Homomorphism(big.coded(), small.coded(), std::move(images));
  }

  Compiled lift(const Compiled& c, const std::vector<std::string>& to) const {
    if (c.vars == to) return c;
    return {trim(inverse_map_letters(c.automaton, restriction(to, c.vars))), to};
  }

 private:
  Compiled combine(const Compiled& a, const Compiled& b, bool is_and) const {
    std::vector<std::string> vars;
    std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                   std::back_inserter(vars));
    const auto la = lift(a, vars), lb = lift(b, vars);
    return {trim(is_and ? intersect(la.automaton, lb.automaton)
                        : unite(la.automaton, lb.automaton)),
            vars};
  }

  Compiled project(const Compiled& body, const std::string& v, Sort sort) const {
    if (!std::binary_search(body.vars.begin(), body.vars.end(), v)) return body;
    BuchiAutomaton a = body.automaton;
    if (sort == Sort::kPosition) {
      a = trim(intersect(a, singleton_automaton(Coding(sigma_, body.vars), v)));
    }
    std::vector<std::string> rest;
    for (const auto& w : body.vars) {
      if (w != v) rest.push_back(w);
    }
    return {trim(map_letters(a, restriction(body.vars, rest))), rest};
  }

  Alphabet sigma_;
  CompileOptions options_;
};

// ------------------------------------------------------------ Miniscoping

bool mentions(const Formula& f, const std::string& v) {
  for (const auto& fv : free_variables(f)) {
    if (fv.name == v) return true;
  }
  return false;
}

/// Negation normal form without ⇒ and ⇔, with every quantifier pushed as
/// far in as the variable's occurrences allow.
Formula normalise(const Formula& f, bool negated) {
  const auto& c = f.children();
  switch (f.kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
      return Formula::truth((f.kind() == Kind::kTrue) != negated);
    case Kind::kNot:
      return normalise(c[0], !negated);
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> parts;
      for (const auto& g : c) parts.push_back(normalise(g, negated));
      return (f.kind() == Kind::kAnd) != negated ? Formula::conj(parts) : Formula::disj(parts);
    }
    case Kind::kImplies:
      return normalise(Formula::disj({Formula::negate(c[0]), c[1]}), negated);
    case Kind::kIff: {
      const Formula both = Formula::conj({c[0], c[1]});
      const Formula neither = Formula::conj({Formula::negate(c[0]), Formula::negate(c[1])});
      const Formula left_only = Formula::conj({c[0], Formula::negate(c[1])});
      const Formula right_only = Formula::conj({Formula::negate(c[0]), c[1]});
      return negated ? normalise(Formula::disj({left_only, right_only}), false)
                     : normalise(Formula::disj({both, neither}), false);
    }
    case Kind::kExists:
    case Kind::kForall: {
      const bool exists = (f.kind() == Kind::kExists) != negated;
      const auto& v = f.vars()[0];
      const Formula body = normalise(c[0], negated);
      auto quantify = [&](const Formula& g) {
        if (!mentions(g, v)) return g;
        return exists ? Formula::exists(v, f.sort(), g) : Formula::forall(v, f.sort(), g);
      };
      // ∃ distributes over ∨ and ∀ over ∧; the other connective lets the
      // operands without v move out.
      const Kind spread = exists ? Kind::kOr : Kind::kAnd;
      if (body.kind() == spread) {
        std::vector<Formula> parts;
        for (const auto& g : body.children()) parts.push_back(quantify(g));
        return exists ? Formula::disj(parts) : Formula::conj(parts);
      }
      const Kind split = exists ? Kind::kAnd : Kind::kOr;
      if (body.kind() == split) {
        std::vector<Formula> with, without;
        for (const auto& g : body.children()) (mentions(g, v) ? with : without).push_back(g);
        if (!without.empty()) {
          if (!with.empty()) {
            without.push_back(
                quantify(exists ? Formula::conj(with) : Formula::disj(with)));
          }
          return exists ? Formula::conj(without) : Formula::disj(without);
        }
      }
      return quantify(body);
    }
    default:
      return negated ? Formula::negate(f) : f;
  }
}

// ------------------------------------------------------------- Evaluation

std::size_t lcm_all(std::size_t a, std::size_t b) { return std::lcm(a, b); }

class Evaluator {
 public:
  Evaluator(const Alphabet& sigma, const UPValuation& val,
            const std::map<std::string, LanguageOracle>& oracles)
      : sigma_(sigma), val_(val), oracles_(oracles) {
    sigma_.require_word(val.word.prefix() + val.word.period(), "valuation word");
    prefix_ = val.word.prefix().size();
    period_ = val.word.period().size();
    for (const auto& [name, s] : val.sets) {
      Alphabet("01").require_word(s.prefix() + s.period(), "set " + name);
      prefix_ = std::max(prefix_, s.prefix().size());
      period_ = lcm_all(period_, s.period().size());
    }
  }

  bool eval(const Formula& f, std::map<std::string, Position>& env) {
    if (count_language_atoms(f) == 0 && has_set_quantifier(f)) return by_automaton(f, env);
    const auto& c = f.children();
    switch (f.kind()) {
      case Kind::kTrue: return true;
      case Kind::kFalse: return false;
      case Kind::kLess: return position(f.vars()[0], env) < position(f.vars()[1], env);
      case Kind::kIn:
        return set(f.vars()[1]).letter_at(position(f.vars()[0], env)) == '1';
      case Kind::kLetter:
        return val_.word.letter_at(position(f.vars()[0], env)) == f.letter_value();
      case Kind::kLanguage: return language(f);
      case Kind::kNot: return !eval(c[0], env);
      case Kind::kAnd:
        return std::all_of(c.begin(), c.end(), [&](const Formula& g) { return eval(g, env); });
      case Kind::kOr:
        return std::any_of(c.begin(), c.end(), [&](const Formula& g) { return eval(g, env); });
      case Kind::kImplies: return !eval(c[0], env) || eval(c[1], env);
      case Kind::kIff: return eval(c[0], env) == eval(c[1], env);
      case Kind::kExists:
      case Kind::kForall: return quantify(f, env);
    }
    return false;
  }

 private:
  Position position(const std::string& x, const std::map<std::string, Position>& env) const {
    auto it = env.find(x);
    if (it == env.end()) throw InvalidArgument("position variable " + x + " is unassigned");
    return it->second;
  }

  const UPWord& set(const std::string& name) const {
    auto it = val_.sets.find(name);
    if (it == val_.sets.end()) throw InvalidArgument("set variable " + name + " is unassigned");
    return it->second;
  }

  bool quantify(const Formula& f, std::map<std::string, Position>& env) {
    const bool exists = f.kind() == Kind::kExists;
    const auto& body = f.children()[0];
    if (f.sort() == Sort::kSet) {
      throw UnsupportedInput("set quantifier over a language atom cannot be evaluated");
    }
    if (has_set_quantifier(body)) {
      throw UnsupportedInput(
          "position quantifier over both language atoms and set quantifiers");
    }
    // Positions beyond the periodic start and every assigned position, more
    // than 2^r periods in, agree with one period earlier on rank-r bodies.
    Position start = prefix_;
    for (const auto& [name, p] : env) start = std::max<Position>(start, p + 1);
    const std::size_t r = position_quantifier_rank(body);
    const Position bound = start + period_ * ((Position{1} << std::min<std::size_t>(r, 40)) + 1);
    const auto& v = f.vars()[0];
    const auto saved = env.find(v) == env.end() ? std::optional<Position>{}
                                                : std::optional<Position>{env[v]};
    bool result = !exists;
    for (Position p = 0; p < bound; ++p) {
      env[v] = p;
      if (eval(body, env) == exists) {
        result = exists;
        break;
      }
    }
    if (saved) {
      env[v] = *saved;
    } else {
      env.erase(v);
    }
    return result;
  }

  bool language(const Formula& f) {
    auto it = oracles_.find(f.name());
    if (it == oracles_.end()) {
      throw UnsupportedInput("no oracle for language predicate " + f.name());
    }
    const LanguageOracle& oracle = it->second;
    if (oracle.alphabet().size() != f.vars().size()) {
      throw InvalidArgument("predicate " + f.name() + " takes " +
                            std::to_string(oracle.alphabet().size()) + " sets, not " +
                            std::to_string(f.vars().size()));
    }
    std::size_t p = 0, q = 1;
    for (const auto& name : f.vars()) {
      p = std::max(p, set(name).prefix().size());
      q = lcm_all(q, set(name).period().size());
    }
    FiniteWord coded;
    for (Position i = 0; i < p + q; ++i) {
      std::optional<Symbol> letter;
      for (std::size_t j = 0; j < f.vars().size(); ++j) {
        if (set(f.vars()[j]).letter_at(i) != '1') continue;
        if (letter) return false;  // overlapping sets
        letter = oracle.alphabet()[j];
      }
      if (!letter) return false;  // not covering
      coded.push_back(*letter);
    }
    return oracle.contains(UPWord(coded.substr(0, p), coded.substr(p)));
  }

  bool by_automaton(const Formula& f, const std::map<std::string, Position>& env) {
    const std::string key = format_formula(f);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, compile_to_buchi(f, sigma_)).first;
    UPValuation sub{val_.word, env, val_.sets};
    return accepts_up(it->second.automaton, encode_valuation(sub, it->second.coding));
  }

  const Alphabet& sigma_;
  const UPValuation& val_;
  const std::map<std::string, LanguageOracle>& oracles_;
  std::size_t prefix_ = 0;
  std::size_t period_ = 1;
  std::map<std::string, CompiledFormula> cache_;
};

}  // namespace

// ------------------------------------------------------------------ Coding

Coding::Coding(Alphabet sigma, std::vector<std::string> vars)
    : sigma_(std::move(sigma)),
      vars_(std::move(vars)),
      coded_(coded_letters(sigma_, vars_.size())) {}

Symbol Coding::encode(Symbol letter, std::uint32_t bits) const {
  const std::size_t x = sigma_.index(letter);
  if (vars_.empty()) return letter;
  return coded_[(x << vars_.size()) | bits];
}

std::pair<Symbol, std::uint32_t> Coding::decode(Symbol coded) const {
  const std::size_t i = coded_.index(coded);
  const std::size_t m = vars_.size();
  return {sigma_[i >> m], static_cast<std::uint32_t>(i & ((1u << m) - 1))};
}

std::size_t Coding::bit(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw InvalidArgument("variable " + var + " is not coded");
  return static_cast<std::size_t>(it - vars_.begin());
}

UPWord encode_valuation(const UPValuation& val, const Coding& coding) {
  std::size_t p = val.word.prefix().size();
  std::size_t q = val.word.period().size();
  for (const auto& v : coding.vars()) {
    if (auto it = val.sets.find(v); it != val.sets.end()) {
      p = std::max(p, it->second.prefix().size());
      q = std::lcm(q, it->second.period().size());
    } else if (auto jt = val.positions.find(v); jt != val.positions.end()) {
      p = std::max<std::size_t>(p, jt->second + 1);
    } else {
      throw InvalidArgument("variable " + v + " is unassigned");
    }
  }
  FiniteWord out;
  for (Position i = 0; i < p + q; ++i) {
    std::uint32_t bits = 0;
    for (std::size_t b = 0; b < coding.vars().size(); ++b) {
      const auto& v = coding.vars()[b];
      auto it = val.sets.find(v);
      const bool on = it != val.sets.end() ? it->second.letter_at(i) == '1'
                                           : val.positions.at(v) == i;
      if (on) bits |= 1u << b;
    }
    out.push_back(coding.encode(val.word.letter_at(i), bits));
  }
  return UPWord(out.substr(0, p), out.substr(p));
}

CompiledFormula compile_to_buchi(const Formula& f, const Alphabet& sigma,
                                 const CompileOptions& options) {
  const auto errors = scope_errors(f);
  if (!errors.empty()) throw InvalidArgument(errors.front());
  Compiler compiler(sigma, options);
  Compiled c = compiler.run(normalise(f, false));
  std::vector<std::string> vars;
  for (const auto& v : free_variables(f)) vars.push_back(v.name);
  c = compiler.lift(c, vars);
  const Coding coding(sigma, vars);
  BuchiAutomaton a = c.automaton;
  for (const auto& v : free_variables(f)) {
    if (v.sort == Sort::kPosition) a = trim(intersect(a, singleton_automaton(coding, v.name)));
  }
  return {trim(a), coding};
}

bool evaluate(const Formula& f, const Alphabet& sigma, const UPValuation& val,
              const std::map<std::string, LanguageOracle>& oracles) {
  const auto errors = scope_errors(f);
  if (!errors.empty()) throw InvalidArgument(errors.front());
  Evaluator e(sigma, val, oracles);
  auto env = val.positions;
  return e.eval(f, env);
}

SatResult mso_satisfiable(const Formula& f, const Alphabet& sigma,
                          const CompileOptions& options) {
  const auto compiled = compile_to_buchi(f, sigma, options);
  const auto r = is_empty(compiled.automaton);
  if (r.empty) return {};
  const Coding& c = compiled.coding;
  const UPWord& w = *r.witness;
  const std::size_t p = w.prefix().size(), n = p + w.period().size();
  auto decode_part = [&](std::size_t from, std::size_t to, auto pick) {
    FiniteWord out;
    for (std::size_t i = from; i < to; ++i) out.push_back(pick(c.decode(w.letter_at(i))));
    return out;
  };
  auto letter = [](const std::pair<Symbol, std::uint32_t>& d) { return d.first; };
  UPValuation model{UPWord(decode_part(0, p, letter), decode_part(p, n, letter)), {}, {}};
  for (const auto& v : free_variables(f)) {
    const std::size_t b = c.bit(v.name);
    auto bit = [b](const std::pair<Symbol, std::uint32_t>& d) {
      return ((d.second >> b) & 1) ? '1' : '0';
    };
    if (v.sort == Sort::kSet) {
      model.sets.emplace(v.name, UPWord(decode_part(0, p, bit), decode_part(p, n, bit)));
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if ((c.decode(w.letter_at(i)).second >> b) & 1) {
          model.positions[v.name] = i;
          break;
        }
      }
    }
  }
  return {true, model};
}

// ------------------------------------------------------------ Generators

Formula random_formula(const Alphabet& sigma, const std::vector<std::string>& sets,
                       std::size_t max_depth, Rng& rng) {
  std::vector<std::string> scope;
  std::function<Formula(std::size_t)> gen = [&](std::size_t depth) -> Formula {
    auto pick = [&](const std::vector<std::string>& v) { return v[uniform(rng, 0, v.size() - 1)]; };
    auto atom = [&]() -> Formula {
      if (scope.empty()) return Formula::truth(uniform(rng, 0, 1) == 1);
      const std::size_t kind = uniform(rng, 0, sets.empty() ? 1 : 2);
      if (kind == 0) return Formula::less(pick(scope), pick(scope));
      if (kind == 1) return Formula::letter(pick(scope), sigma[uniform(rng, 0, sigma.size() - 1)]);
      return Formula::in(pick(scope), pick(sets));
    };
    if (depth <= 1) return atom();
    const std::size_t choice = uniform(rng, 0, scope.empty() ? 1 : 7);
    if (choice <= 1 || (choice == 7 && scope.size() < 2)) {
      const std::string v = "x" + std::to_string(scope.size() + 1);
      scope.push_back(v);
      Formula body = gen(depth - 1);
      scope.pop_back();
      return choice == 0 ? Formula::exists(v, Sort::kPosition, body)
                         : Formula::forall(v, Sort::kPosition, body);
    }
    switch (choice) {
      case 2: return Formula::negate(gen(depth - 1));
      case 3: return Formula::conj({gen(depth - 1), gen(depth - 1)});
      case 4: return Formula::disj({gen(depth - 1), gen(depth - 1)});
      case 5: return Formula::implies(gen(depth - 1), gen(depth - 1));
      case 6: return Formula::iff(gen(depth - 1), gen(depth - 1));
      default: return atom();
    }
  };
  return gen(max_depth);
}

UPValuation random_valuation(const Formula& f, const Alphabet& sigma, Rng& rng) {
  UPValuation val{random_up_word(sigma, 3, 3, rng), {}, {}};
  const Alphabet bits("01");
  for (const auto& v : free_variables(f)) {
    if (v.sort == Sort::kSet) {
      val.sets.emplace(v.name, random_up_word(bits, 3, 3, rng));
    } else {
      val.positions[v.name] = uniform(rng, 0, 5);
    }
  }
  return val;
}

}  // namespace omegaext
