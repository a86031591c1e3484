#pragma once

// Compilation of language-free MSO[<] formulas to Büchi automata, direct
// evaluation on lasso-presented valuations, satisfiability of the pure
// fragment, and the congruence-game sentence.
//
// A formula with free variables V₁ < ⋯ < V_m (by name) over Σ is compiled
// to an automaton over coded letters (σ, bits), bit i saying whether the
// position belongs to Vᵢ; a free position variable is a singleton set.
// With no free variables the coded alphabet is Σ itself; otherwise coded
// letters are drawn from the printable ASCII characters usable as letters,
// which caps |Σ|·2^m.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegaext/buchi.hpp"
#include "omegaext/formula.hpp"
#include "omegaext/language.hpp"
#include "omegaext/random.hpp"

namespace omegaext {

class Coding {
 public:
  /// Throws `UnsupportedInput` when |Σ|·2^|vars| exceeds the letter pool.
  Coding(Alphabet sigma, std::vector<std::string> vars);

  const Alphabet& sigma() const noexcept { return sigma_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const Alphabet& coded() const noexcept { return coded_; }

  Symbol encode(Symbol letter, std::uint32_t bits) const;
  std::pair<Symbol, std::uint32_t> decode(Symbol coded) const;
  /// Bit index of `var`; throws `InvalidArgument` if absent.
  std::size_t bit(const std::string& var) const;

 private:
  Alphabet sigma_;
  std::vector<std::string> vars_;
  Alphabet coded_;
};

/// Positions for position variables and indicator lassos over {0,1} for set
/// variables, on top of the word itself.
struct UPValuation {
  UPWord word;
  std::map<std::string, Position> positions;
  std::map<std::string, UPWord> sets;
};

/// The coded lasso of a valuation; every variable of the coding must be
/// assigned.
UPWord encode_valuation(const UPValuation& val, const Coding& coding);

struct CompiledFormula {
  BuchiAutomaton automaton;
  Coding coding;
};

struct CompileOptions {
  ComplementOptions complement;
};

/// Throws `UnsupportedInput` on L-atoms, `InvalidArgument` on scoping
/// errors, and `BudgetExceeded` from complementation.
CompiledFormula compile_to_buchi(const Formula& f, const Alphabet& sigma,
                                 const CompileOptions& options = {});

/// Direct semantics.  Position quantifiers range over an initial segment
/// long enough for the rank of their body; language-free subformulas with
/// set quantifiers are compiled and run on the coded valuation; L-atoms
/// check that their sets partition ω and ask the named oracle about the
/// coded word.  Throws `UnsupportedInput` when an L-atom sits under a set
/// quantifier or when a position quantifier ranges over both kinds.
bool evaluate(const Formula& f, const Alphabet& sigma, const UPValuation& val,
              const std::map<std::string, LanguageOracle>& oracles = {});

struct SatResult {
  bool satisfiable = false;
  std::optional<UPValuation> model;
};

SatResult mso_satisfiable(const Formula& f, const Alphabet& sigma,
                          const CompileOptions& options = {});

/// Random language-free formula with every position variable bound, of
/// depth at most `max_depth`, over letters of `sigma` and the free set
/// variables `sets`.
Formula random_formula(const Alphabet& sigma, const std::vector<std::string>& sets,
                       std::size_t max_depth, Rng& rng);

/// Random valuation of the free variables of `f`, lasso parts up to 3.
UPValuation random_valuation(const Formula& f, const Alphabet& sigma, Rng& rng);

/// The closed MSO+L sentence saying that Duplicator wins the congruence
/// game over words in {a,b}^ω, for the language predicate `L` over `sigma`
/// with neutral letter `neutral`.  See the implementation notes in
/// game_sentence.cpp for the coding of the rounds.
Formula encode_congruence_game(const Alphabet& sigma, Symbol neutral);

}  // namespace omegaext
