// The congruence game as one MSO+L sentence about u ∈ {a,b}^ω.
//
// An interval family is a pair (X, Y) of left and right ends.  The sentence
// reads
//
//   ∀X ∀Y. Family(X,Y) ⇒
//     ∃XW ∃YW ∃XV ∃YV. Sub ∧ Family(W) ∧ Family(V) ∧ ALabelled(V) ∧ Alternate ∧
//       ∀C₁…C_k. Colouring(C, W) ⇒
//         ∃D₁…D_k. Colouring(D, V) ∧
//           ∀S. (S ⊆ XW ∧ Infinite(S)) ⇒
//             ∃B. ∀E₁…E_k. (SelectW(E) ∨ SelectV(E)) ⇒ (L(E₁…E_k) ⇔ ∃z. z ∈ B)
//
// Round 1 is (X, Y).  Round 2 is W ⊆ (X, Y) and V, with W₁ < V₁ < W₂ < ⋯
// read off the order of left ends.  Rounds 3 and 4 colour every position by
// one letter of Σ_L, neutral outside the intervals and at least once inside
// each interval, so the erased word in an interval is shorter than it.
// Round 5 is a set S of left ends of W-intervals; Vᵢ is selected with Wᵢ.
// In round 6, E is the partition coding the product: the colour inside
// selected intervals, neutral elsewhere.  B is a Boolean chosen before E,
// so the atom occurs once and both products must agree with it.
//
// Colourings are partitions through a prefix-union chain P₁ ⊆ ⋯ ⊆ P_k = ω,
// which keeps the size linear in k.

#include <string>
#include <vector>

#include "omegaext/error.hpp"
#include "omegaext/mso.hpp"

namespace omegaext {
namespace {

using F = Formula;

F le(const std::string& x, const std::string& y) { return F::negate(F::less(y, x)); }
F notin(const std::string& x, const std::string& s) { return F::negate(F::in(x, s)); }

class Builder {
 public:
  Builder(const Alphabet& sigma, Symbol neutral) : sigma_(sigma) {
    if (!sigma.contains(neutral)) {
      throw InvalidArgument(std::string("neutral letter ") + neutral + " is not in {" +
                            sigma.letters() + "}");
    }
    neutral_ = sigma.index(neutral);
  }

  F sentence() {
    const Iv fam{"X", "Y"}, w{"XW", "YW"}, v{"XV", "YV"};
    const auto c = set_names("C"), d = set_names("D"), e = set_names("E");

    const auto z = fresh();
    F round6 = F::exists("B", Sort::kSet,
                         forall_sets(e, F::implies(F::disj({select(e, c, w, false),
                                                            select(e, d, v, true)}),
                                                   F::iff(F::language("L", e),
                                                          F::exists(z, Sort::kPosition,
                                                                    F::in(z, "B"))))));
    F round5 = F::forall("S", Sort::kSet,
                         F::implies(F::conj({subset("S", w.left), infinite("S")}), round6));
    F round4 = exists_sets(d, F::conj({colouring(d, v), round5}));
    F round3 = forall_sets(c, F::implies(colouring(c, w), round4));
    F round2 = F::exists(
        w.left, Sort::kSet,
        F::exists(w.right, Sort::kSet,
                  F::exists(v.left, Sort::kSet,
                            F::exists(v.right, Sort::kSet,
                                      F::conj({sub(w, fam), family(w), family(v),
                                               a_labelled(v), alternate(w, v), round3})))));
    return F::forall(fam.left, Sort::kSet,
                     F::forall(fam.right, Sort::kSet,
                               F::implies(family(fam), round2)));
  }

 private:
  struct Iv {
    std::string left;
    std::string right;
  };

  std::string fresh() { return "z" + std::to_string(++counter_); }
  std::string fresh_set() { return "P" + std::to_string(++set_counter_); }

  std::vector<std::string> set_names(const std::string& stem) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < sigma_.size(); ++i) out.push_back(stem + std::to_string(i + 1));
    return out;
  }

  F forall_sets(const std::vector<std::string>& sets, F body) const {
    for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
      body = F::forall(*it, Sort::kSet, body);
    }
    return body;
  }
  F exists_sets(const std::vector<std::string>& sets, F body) const {
    for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
      body = F::exists(*it, Sort::kSet, body);
    }
    return body;
  }

  F subset(const std::string& s, const std::string& t) {
    const auto x = fresh();
    return F::forall(x, Sort::kPosition, F::implies(F::in(x, s), F::in(x, t)));
  }

  F infinite(const std::string& s) {
    const auto x = fresh(), y = fresh();
    return F::forall(x, Sort::kPosition,
                     F::exists(y, Sort::kPosition, F::conj({F::less(x, y), F::in(y, s)})));
  }

  /// No element of `s` in the positions m with lo (<|≤) m (<|≤) hi.
  F gap(const std::string& s, const std::string& lo, bool lo_strict, const std::string& hi,
        bool hi_strict) {
    const auto m = fresh();
    return F::forall(m, Sort::kPosition,
                     F::implies(F::conj({lo_strict ? F::less(lo, m) : le(lo, m),
                                         hi_strict ? F::less(m, hi) : le(m, hi)}),
                                notin(m, s)));
  }

  /// z lies in the interval of (X, Y) whose left end is l.
  F same_interval(const std::string& l, const std::string& z, const Iv& iv) {
    const auto r = fresh();
    return F::conj({le(l, z), gap(iv.left, l, true, z, false),
                    F::exists(r, Sort::kPosition,
                              F::conj({F::in(r, iv.right), le(z, r),
                                       gap(iv.right, l, false, r, true)}))});
  }

  /// z lies in some interval of (X, Y).
  F inside(const std::string& z, const Iv& iv) {
    const auto l = fresh();
    return F::exists(l, Sort::kPosition,
                     F::conj({F::in(l, iv.left), same_interval(l, z, iv)}));
  }

  F family(const Iv& iv) {
    const auto x1 = fresh(), x2 = fresh(), y = fresh();
    F disjoint = F::forall(
        x1, Sort::kPosition,
        F::forall(x2, Sort::kPosition,
                  F::implies(F::conj({F::in(x1, iv.left), F::in(x2, iv.left), F::less(x1, x2)}),
                             F::exists(y, Sort::kPosition,
                                       F::conj({F::in(y, iv.right), le(x1, y),
                                                F::less(y, x2)})))));
    const auto x = fresh(), r = fresh();
    F closed = F::forall(
        x, Sort::kPosition,
        F::implies(F::in(x, iv.left),
                   F::exists(r, Sort::kPosition, F::conj({F::in(r, iv.right), le(x, r)}))));
    const auto y2 = fresh(), l = fresh();
    F opened = F::forall(
        y2, Sort::kPosition,
        F::implies(F::in(y2, iv.right),
                   F::exists(l, Sort::kPosition,
                             F::conj({F::in(l, iv.left), le(l, y2),
                                      gap(iv.right, l, false, y2, true)}))));
    return F::conj({disjoint, closed, opened, infinite(iv.left)});
  }

  /// Every interval of w is an interval of fam.
  F sub(const Iv& w, const Iv& fam) {
    const auto x = fresh(), y = fresh();
    return F::conj(
        {subset(w.left, fam.left),
         F::forall(x, Sort::kPosition,
                   F::implies(F::in(x, w.left),
                              F::forall(y, Sort::kPosition,
                                        F::implies(F::conj({F::in(y, fam.right), le(x, y),
                                                            gap(fam.right, x, false, y, true)}),
                                                   F::in(y, w.right)))))});
  }

  F a_labelled(const Iv& v) {
    const auto z = fresh();
    return F::forall(z, Sort::kPosition, F::implies(inside(z, v), F::letter(z, 'a')));
  }

  /// Left ends alternate W, V, W, … starting with W, and no position is in both.
  F alternate(const Iv& w, const Iv& v) {
    auto next_start = [&](const std::string& from_set, const std::string& to_set,
                          bool forward) {
      const auto x = fresh(), y = fresh();
      const auto& lo = forward ? x : y;
      const auto& hi = forward ? y : x;
      return F::forall(
          x, Sort::kPosition,
          F::implies(F::in(x, from_set),
                     F::exists(y, Sort::kPosition,
                               F::conj({F::in(y, to_set), F::less(lo, hi),
                                        gap(w.left, lo, true, hi, true),
                                        gap(v.left, lo, true, hi, true)}))));
    };
    const auto z = fresh();
    return F::conj({next_start(w.left, v.left, true), next_start(v.left, w.left, false),
                    F::forall(z, Sort::kPosition,
                              F::negate(F::conj({inside(z, w), inside(z, v)})))});
  }

  F partition(const std::vector<std::string>& sets) {
    std::vector<std::string> chain;
    for (std::size_t j = 1; j < sets.size(); ++j) chain.push_back(fresh_set());
    const auto z = fresh();
    std::vector<F> clauses;
    // chain[j-1] = sets[0] ∪ ⋯ ∪ sets[j], and sets[j] avoids the union before it.
    for (std::size_t j = 1; j < sets.size(); ++j) {
      const std::string before = j == 1 ? sets[0] : chain[j - 2];
      clauses.push_back(F::iff(F::in(z, chain[j - 1]),
                               F::disj({F::in(z, before), F::in(z, sets[j])})));
      clauses.push_back(F::negate(F::conj({F::in(z, before), F::in(z, sets[j])})));
    }
    clauses.push_back(F::in(z, chain.back()));
    return exists_sets(chain, F::forall(z, Sort::kPosition, F::conj(clauses)));
  }

  F colouring(const std::vector<std::string>& c, const Iv& iv) {
    const auto z = fresh(), l = fresh(), y = fresh();
    const auto& n = c[neutral_];
    F outside = F::forall(z, Sort::kPosition, F::implies(F::negate(inside(z, iv)), F::in(z, n)));
    F shorter = F::forall(
        l, Sort::kPosition,
        F::implies(F::in(l, iv.left),
                   F::exists(y, Sort::kPosition,
                             F::conj({same_interval(l, y, iv), F::in(y, n)}))));
    return F::conj({partition(c), outside, shorter});
  }

  /// E codes the product of the selected intervals coloured by c; for V,
  /// an interval is selected when the W-interval before it is.
  F select(const std::vector<std::string>& e, const std::vector<std::string>& c,
           const Iv& iv, bool follows) {
    const auto z = fresh();
    auto selected = [&]() {
      const auto s = fresh();
      if (!follows) {
        return F::exists(s, Sort::kPosition,
                         F::conj({F::in(s, "S"), same_interval(s, z, iv)}));
      }
      const auto t = fresh();
      return F::exists(
          s, Sort::kPosition,
          F::conj({F::in(s, "S"),
                   F::exists(t, Sort::kPosition,
                             F::conj({F::in(t, iv.left), F::less(s, t),
                                      gap(iv.left, s, true, t, true),
                                      same_interval(t, z, iv)}))}));
    };
    std::vector<F> clauses;
    for (std::size_t j = 0; j < e.size(); ++j) {
      F coloured = j == neutral_ ? F::disj({F::in(z, c[j]), F::negate(selected())})
                                 : F::conj({F::in(z, c[j]), selected()});
      clauses.push_back(F::iff(F::in(z, e[j]), coloured));
    }
    return F::forall(z, Sort::kPosition, F::conj(clauses));
  }

  Alphabet sigma_;
  std::size_t neutral_ = 0;
  std::size_t counter_ = 0;
  std::size_t set_counter_ = 0;
};

}  // namespace

Formula encode_congruence_game(const Alphabet& sigma, Symbol neutral) {
  if (sigma.size() < 2) {
    throw InvalidArgument("the language alphabet needs a letter besides the neutral one");
  }
  return Builder(sigma, neutral).sentence();
}

}  // namespace omegaext
