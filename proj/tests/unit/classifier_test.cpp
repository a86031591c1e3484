#include <gtest/gtest.h>

#include "omegaext/buchi.hpp"
#include "omegaext/classifier.hpp"
#include "omegaext/error.hpp"
#include "omegaext/monoid.hpp"
#include "omegaext/random.hpp"

namespace omegaext {
namespace {

const Alphabet kAB("ab");

// Parity of the number of a's: a congruence with two classes.
Classifier parity_of_a() {
  return Classifier(kAB, 0, {1, 0, 0, 1}, {0, 1});
}

// "Last letter is a" as classes: a right congruence that is not a left one.
Classifier last_letter() {
  // 0: ε, 1: ends in a, 2: ends in b.
  return Classifier(kAB, 0, {1, 2, 1, 2, 1, 2}, {0, 1, 0});
}

bool order_less(const Condition1Violation& x, const Condition1Violation& y) {
  const auto sx = x.u.size() + x.u_prime.size();
  const auto sy = y.u.size() + y.u_prime.size();
  if (sx != sy) return sx < sy;
  if (x.u != y.u) return shortlex_less(x.u, y.u, kAB);
  if (x.u_prime != y.u_prime) return shortlex_less(x.u_prime, y.u_prime, kAB);
  if (x.w != y.w) return shortlex_less(x.w, y.w, kAB);
  return x.side == Side::kRight && y.side == Side::kLeft;
}

// Enumerates every candidate within the bound and keeps the least.
std::optional<Condition1Violation> brute_condition1(const Classifier& c,
                                                    std::size_t bound) {
  const auto words = words_up_to(c.alphabet(), bound);
  std::optional<Condition1Violation> best;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto& u = words[i];
      const auto& v = words[j];
      if (c.class_of(u) != c.class_of(v)) continue;
      for (const auto& w : words) {
        for (Side side : {Side::kRight, Side::kLeft}) {
          const bool bad = side == Side::kRight
                               ? c.class_of(u + w) != c.class_of(v + w)
                               : c.class_of(w + u) != c.class_of(w + v);
          Condition1Violation cand{u, v, w, side};
          if (bad && (!best || order_less(cand, *best))) best = cand;
        }
      }
    }
  }
  return best;
}

TEST(Classifier, TextRoundTrip) {
  const auto c = last_letter();
  const auto back = parse_classifier(format_classifier(c));
  EXPECT_EQ(back, c);
  EXPECT_THROW(parse_classifier("alphabet a\nstates 1\ninitial 0\nclass 0 0\n"),
               ParseError);
}

TEST(Classifier, RejectsPartialMachines) {
  EXPECT_THROW(Classifier(kAB, 0, {0, 5}, {0}), InvalidArgument);
  EXPECT_THROW(Classifier(kAB, 0, {0}, {0}), InvalidArgument);
  // Class 1 only on an unreachable state.
  EXPECT_THROW(Classifier(kAB, 0, {0, 0, 1, 1}, {0, 1}), InvalidArgument);
}

TEST(Classifier, Representatives) {
  const auto c = last_letter();
  EXPECT_EQ(c.index(), 2u);
  EXPECT_EQ(c.representatives().at(0), "");
  EXPECT_EQ(c.nonempty_representatives().at(0), "b");
  EXPECT_EQ(c.nonempty_representatives().at(1), "a");
  EXPECT_TRUE(same_partition(c, c.relabelled({{0, 7}, {1, 3}})));
  EXPECT_FALSE(same_partition(c, parity_of_a()));
}

TEST(Condition1, Examples) {
  EXPECT_FALSE(check_condition1(parity_of_a()).has_value());
  EXPECT_FALSE(check_condition1(single_class_classifier(kAB)).has_value());
  const auto v = check_condition1(last_letter());
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(verify_violation(last_letter(), *v));
  // ε ~ b, but a·ε ends in a and a·b does not.
  EXPECT_EQ(*v, (Condition1Violation{"", "b", "a", Side::kLeft}));
}

TEST(Condition1, MatchesExhaustiveSearch) {
  Rng rng(7);
  constexpr std::size_t kBound = 4;
  for (int round = 0; round < 300; ++round) {
    const auto c = random_classifier(kAB, 4, 3, rng);
    const auto fast = check_condition1(c);
    const auto slow = brute_condition1(c, kBound);
    if (!fast) {
      EXPECT_FALSE(slow.has_value()) << format_classifier(c);
      continue;
    }
    EXPECT_TRUE(verify_violation(c, *fast)) << format_classifier(c);
    if (slow) EXPECT_FALSE(order_less(*slow, *fast)) << format_classifier(c);
    if (fast->u.size() <= kBound && fast->u_prime.size() <= kBound &&
        fast->w.size() <= kBound) {
      ASSERT_TRUE(slow.has_value());
      EXPECT_EQ(*slow, *fast) << format_classifier(c);
    }
  }
}

TEST(Condition1, RepairReachesCongruence) {
  Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    const auto c = random_classifier(kAB, 6, 4, rng);
    const auto r = lemma_repair(c);
    EXPECT_LE(r.merges.size() + 1, std::max<std::size_t>(c.index(), 1));
    EXPECT_LE(r.classifier.index(), c.index());
    EXPECT_FALSE(check_condition1(r.classifier).has_value());
    // Coarsening: words equivalent before stay equivalent.
    const auto words = words_up_to(kAB, 4);
    for (const auto& u : words) {
      for (const auto& v : words) {
        if (c.class_of(u) == c.class_of(v)) {
          EXPECT_EQ(r.classifier.class_of(u), r.classifier.class_of(v));
        }
      }
    }
  }
}

TEST(Condition1, RepairIsIdentityOnCongruences) {
  const auto r = lemma_repair(parity_of_a());
  EXPECT_TRUE(r.merges.empty());
  EXPECT_EQ(r.classifier, parity_of_a());
}

TEST(Condition1, MonoidKernelIsCongruence) {
  Rng rng(3);
  for (int round = 0; round < 30; ++round) {
    const auto a = random_buchi(kAB, 4, rng);
    const TransitionMonoid m(a);
    const auto c = monoid_kernel_classifier(m);
    EXPECT_EQ(c.index(), m.size());
    EXPECT_FALSE(check_condition1(c).has_value());
  }
}

TEST(Condition1, MonoidBudget) {
  Condition1Options tight;
  tight.max_monoid_elements = 1;
  EXPECT_THROW(check_condition1(parity_of_a(), tight), BudgetExceeded);
}

}  // namespace
}  // namespace omegaext
