#include <gtest/gtest.h>

#include "brute.hpp"
#include "omegaext/error.hpp"
#include "omegaext/mso.hpp"
#include "omegaext/oracles.hpp"

namespace omegaext {
namespace {

const Alphabet kAB("ab");

Formula parse(std::string_view s) { return parse_formula(s); }

TEST(Formula, ParseFormatRoundTrip) {
  const auto f = parse("(forall x pos (exists y pos (and (< x y) (letter y a)))) ; inf a");
  EXPECT_EQ(format_formula(f), "(forall x pos (exists y pos (and (< x y) (letter y a))))");
  EXPECT_EQ(parse_formula(format_formula(f)), f);
  EXPECT_EQ(pretty_formula(f), "∀x. ∃y. (x < y ∧ a(y))");
  EXPECT_THROW(parse("(and (< x y)"), ParseError);
  EXPECT_THROW(parse("(exists x thing true)"), ParseError);
}

TEST(Formula, ScopeErrors) {
  EXPECT_TRUE(scope_errors(parse("(exists X set (exists x pos (in x X)))")).empty());
  EXPECT_FALSE(scope_errors(parse("(exists x pos (exists x pos (< x x)))")).empty());
  EXPECT_FALSE(scope_errors(parse("(exists X set (< X X))")).empty());
  std::map<std::string, std::size_t> arities{{"L", 2}};
  EXPECT_TRUE(scope_errors(parse("(L L X Y)"), &arities).empty());
  EXPECT_FALSE(scope_errors(parse("(L L X)"), &arities).empty());
  EXPECT_FALSE(scope_errors(parse("(L K X)"), &arities).empty());
}

TEST(Formula, Measures) {
  const auto f = parse("(forall x pos (exists Y set (exists y pos (and (< x y) (in y Y)))))");
  EXPECT_EQ(formula_size(f), 6u);
  EXPECT_EQ(formula_depth(f), 5u);
  EXPECT_EQ(position_quantifier_rank(f), 2u);
  EXPECT_TRUE(has_set_quantifier(f));
  EXPECT_EQ(count_language_atoms(parse("(and (L L X) (not (L L Y)))")), 2u);
  const auto fv = free_variables(parse("(and (in x X) (< x y))"));
  ASSERT_EQ(fv.size(), 3u);
  EXPECT_EQ(fv[0], (FreeVariable{"X", Sort::kSet}));
  EXPECT_EQ(fv[1], (FreeVariable{"x", Sort::kPosition}));
}

TEST(Compile, Examples) {
  const auto inf_a = compile_to_buchi(
      parse("(forall x pos (exists y pos (and (< x y) (letter y a))))"), kAB);
  EXPECT_TRUE(accepts_up(inf_a.automaton, UPWord("", "ab")));
  EXPECT_FALSE(accepts_up(inf_a.automaton, UPWord("a", "b")));

  const auto some_a = compile_to_buchi(parse("(exists x pos (letter x a))"), kAB);
  EXPECT_TRUE(accepts_up(some_a.automaton, UPWord("bbbbba", "b")));
  EXPECT_FALSE(accepts_up(some_a.automaton, UPWord("", "b")));

  EXPECT_TRUE(is_empty(compile_to_buchi(parse("(exists x pos (< x x))"), kAB).automaton).empty);
  EXPECT_THROW(compile_to_buchi(parse("(L L X)"), kAB), UnsupportedInput);
}

TEST(Compile, FreeVariablesAreCoded) {
  const auto c = compile_to_buchi(parse("(and (in x X) (letter x b))"), kAB);
  EXPECT_EQ(c.coding.vars(), (std::vector<std::string>{"X", "x"}));
  EXPECT_EQ(c.coding.coded().size(), 8u);
  UPValuation val{UPWord("ab", "a"), {{"x", 1}}, {{"X", UPWord("", "01")}}};
  EXPECT_TRUE(accepts_up(c.automaton, encode_valuation(val, c.coding)));
  val.positions["x"] = 0;
  EXPECT_FALSE(accepts_up(c.automaton, encode_valuation(val, c.coding)));
}

TEST(Compile, CodingCap) {
  EXPECT_THROW(Coding(Alphabet("abc"), {"A", "B", "C", "D", "E", "F"}), UnsupportedInput);
  const Coding c(Alphabet("ab"), {"A", "B"});
  for (Symbol ch : c.coded().letters()) {
    const auto [letter, bits] = c.decode(ch);
    EXPECT_EQ(c.encode(letter, bits), ch);
  }
}

TEST(Evaluate, AgreesWithCompilation) {
  Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    const auto f = random_formula(kAB, {"X", "Y"}, 4, rng);
    const auto c = compile_to_buchi(f, kAB);
    for (int j = 0; j < 10; ++j) {
      const auto val = random_valuation(f, kAB, rng);
      const auto coded = encode_valuation(val, c.coding);
      EXPECT_EQ(evaluate(f, kAB, val), accepts_up(c.automaton, coded)) << format_formula(f);
      EXPECT_EQ(testing::brute_accepts(c.automaton, coded), accepts_up(c.automaton, coded));
    }
  }
}

TEST(Evaluate, SetQuantifiersGoThroughCompilation) {
  // Some set contains 0, is closed under successor-in-X pairs, and has an a.
  const auto f = parse(
      "(exists Z set (and (exists x pos (and (in x Z) (letter x a)))"
      " (forall y pos (implies (in y Z) (in y X)))))");
  UPValuation val{UPWord("ba", "b"), {}, {{"X", UPWord("01", "0")}}};
  EXPECT_TRUE(evaluate(f, kAB, val));
  val.sets.insert_or_assign("X", UPWord("10", "0"));
  EXPECT_FALSE(evaluate(f, kAB, val));
}

TEST(Evaluate, LanguageAtoms) {
  const auto inf_a = oracle_regular(infinitely_many(kAB, 'a'));
  const std::map<std::string, LanguageOracle> oracles{{"L", inf_a}, {"P", oracle_P()}};
  const auto atom = parse("(L L X Y)");
  UPValuation even_odd{UPWord("", "a"), {}, {{"X", UPWord("", "10")}, {"Y", UPWord("", "01")}}};
  EXPECT_TRUE(evaluate(atom, kAB, even_odd, oracles));

  UPValuation overlap{UPWord("", "a"), {}, {{"X", UPWord("", "1")}, {"Y", UPWord("", "01")}}};
  EXPECT_FALSE(evaluate(atom, kAB, overlap, oracles));
  UPValuation gap{UPWord("", "a"), {}, {{"X", UPWord("", "0")}, {"Y", UPWord("", "01")}}};
  EXPECT_FALSE(evaluate(atom, kAB, gap, oracles));

  UPValuation all_b{UPWord("", "a"), {}, {{"X", UPWord("1", "0")}, {"Y", UPWord("0", "1")}}};
  EXPECT_FALSE(evaluate(atom, kAB, all_b, oracles));

  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_up_word(Alphabet("01"), 3, 3, rng);
    FiniteWord yp, yq;
    for (Symbol s : x.prefix()) yp.push_back(s == '1' ? '0' : '1');
    for (Symbol s : x.period()) yq.push_back(s == '1' ? '0' : '1');
    UPValuation val{UPWord("", "a"), {}, {{"X", x}, {"Y", UPWord(yp, yq)}}};
    EXPECT_TRUE(evaluate(parse("(L P X Y)"), kAB, val, oracles));
  }

  EXPECT_THROW(evaluate(parse("(L L X)"), kAB, even_odd, oracles), InvalidArgument);
  EXPECT_THROW(evaluate(parse("(L Q X Y)"), kAB, even_odd, oracles), UnsupportedInput);
  EXPECT_THROW(evaluate(parse("(exists Z set (L L X Z))"), kAB, even_odd, oracles),
               UnsupportedInput);
}

TEST(Evaluate, PositionQuantifierOverLanguageAtom) {
  const std::map<std::string, LanguageOracle> oracles{
      {"L", oracle_regular(infinitely_many(kAB, 'a'))}};
  const auto f = parse("(exists x pos (and (in x X) (L L X Y)))");
  UPValuation val{UPWord("", "a"), {}, {{"X", UPWord("", "10")}, {"Y", UPWord("", "01")}}};
  EXPECT_TRUE(evaluate(f, kAB, val, oracles));
  val.sets.insert_or_assign("X", UPWord("", "0"));
  val.sets.insert_or_assign("Y", UPWord("", "1"));
  EXPECT_FALSE(evaluate(f, kAB, val, oracles));
}

TEST(Satisfiable, Examples) {
  const auto both = parse(
      "(and (forall x pos (exists y pos (and (< x y) (letter y a))))"
      " (forall x pos (exists y pos (and (< x y) (letter y b)))))");
  const auto r = mso_satisfiable(both, kAB);
  ASSERT_TRUE(r.satisfiable);
  ASSERT_TRUE(r.model);
  EXPECT_TRUE(evaluate(both, kAB, *r.model));

  EXPECT_FALSE(mso_satisfiable(
      parse("(and (forall x pos (letter x a)) (exists x pos (letter x b)))"), kAB)
                   .satisfiable);

  const auto taut = parse("(forall x pos (not (< x x)))");
  EXPECT_TRUE(mso_satisfiable(taut, kAB).satisfiable);
  for (const auto& w : all_up_words(kAB, 2, 2)) {
    EXPECT_TRUE(evaluate(taut, kAB, UPValuation{w, {}, {}}));
  }
}

TEST(Satisfiable, ModelsValidate) {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_formula(kAB, {"X"}, 4, rng);
    const auto r = mso_satisfiable(f, kAB);
    if (!r.satisfiable) continue;
    EXPECT_TRUE(evaluate(f, kAB, *r.model)) << format_formula(f);
  }
  const auto free_pos = parse("(and (letter x b) (exists y pos (and (< x y) (letter y a))))");
  const auto r = mso_satisfiable(free_pos, kAB);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_TRUE(evaluate(free_pos, kAB, *r.model));
}

TEST(Compile, QuantifierDuality) {
  Rng rng(17);
  const Coding coding(kAB, {"Y"});
  const auto words = all_up_words(coding.coded(), 3, 3);
  for (int i = 0; i < 4; ++i) {
    const auto phi = random_formula(kAB, {"X", "Y"}, 3, rng);
    const auto lhs = compile_to_buchi(
        Formula::negate(Formula::exists("X", Sort::kSet, phi)), kAB);
    const auto rhs = compile_to_buchi(
        Formula::forall("X", Sort::kSet, Formula::negate(phi)), kAB);
    if (lhs.coding.vars() != rhs.coding.vars()) continue;
    const auto& w = lhs.coding.vars().empty() ? all_up_words(kAB, 3, 3) : words;
    for (const auto& u : w) {
      EXPECT_EQ(accepts_up(lhs.automaton, u), accepts_up(rhs.automaton, u))
          << format_formula(phi);
    }
  }
}

TEST(GameSentence, Structure) {
  std::vector<std::size_t> sizes;
  for (std::size_t k = 2; k <= 6; ++k) {
    const std::string letters = std::string("abcde").substr(0, k - 1) + "1";
    const auto f = encode_congruence_game(Alphabet(letters), '1');
    EXPECT_TRUE(free_variables(f).empty());
    EXPECT_EQ(count_language_atoms(f), 1u);
    std::map<std::string, std::size_t> arities{{"L", k}};
    EXPECT_TRUE(scope_errors(f, &arities).empty());
    EXPECT_EQ(parse_formula(format_formula(f)), f);
    sizes.push_back(formula_size(f));
  }
  for (std::size_t i = 2; i < sizes.size(); ++i) {
    EXPECT_EQ(sizes[i] - sizes[i - 1], sizes[1] - sizes[0]);
  }
  EXPECT_GT(sizes[1], sizes[0]);
  EXPECT_THROW(encode_congruence_game(Alphabet("ab"), '1'), InvalidArgument);
}

TEST(GameSentence, NeutralPositionDoesNotMatter) {
  const auto f = encode_congruence_game(Alphabet("1ab"), '1');
  const auto g = encode_congruence_game(Alphabet("ab1"), '1');
  EXPECT_EQ(formula_size(f), formula_size(g));
}

}  // namespace
}  // namespace omegaext
