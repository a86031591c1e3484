#include "omegaext/congruence.hpp"

#include <algorithm>
#include <numeric>

#include "omegaext/error.hpp"
#include "omegaext/text.hpp"

namespace omegaext {
namespace {

// -1: the context does not yield an ω-word for this u.
using Verdict = int;

std::vector<FiniteWord> nonempty_words(const Alphabet& sigma, std::size_t bound) {
  auto words = words_up_to(sigma, bound);
  words.erase(words.begin());
  return words;
}

// Calls `visit` with every tuple of `length` indices below `base`.
template <typename Visit>
void for_each_tuple(std::size_t length, std::size_t base, Visit&& visit) {
  std::vector<std::size_t> idx(length, 0);
  while (true) {
    visit(idx);
    std::size_t i = length;
    while (i > 0 && ++idx[i - 1] == base) idx[--i] = 0;
    if (i == 0) return;
  }
}

Verdict verdict_of(const LanguageOracle& oracle, const UPWord& w) {
  try {
    return oracle.contains(w) ? 1 : 0;
  } catch (const NotAnOmegaWord&) {
    return -1;
  }
}

struct ContextSet {
  std::vector<ArnoldContext> contexts;
};

ContextSet arnold_contexts(const Alphabet& sigma, std::size_t bound) {
  ContextSet out;
  const auto words = words_up_to(sigma, bound);
  for (const auto& w : words) {
    for (const auto& x : words) {
      for (const auto& y : words) {
        if (!y.empty()) out.contexts.push_back({"wuv", w, x, y});
      }
    }
  }
  for (const auto& w : words) {
    for (const auto& x : words) out.contexts.push_back({"w(uv)^w", w, x, ""});
  }
  return out;
}

std::vector<Verdict> arnold_signature(const LanguageOracle& oracle,
                                      const FiniteWord& u,
                                      const ContextSet& set) {
  std::vector<Verdict> out;
  out.reserve(set.contexts.size());
  for (const auto& c : set.contexts) {
    if (c.kind == "wuv") {
      out.push_back(verdict_of(oracle, UPWord(c.w + u + c.x, c.y)));
    } else if (u.empty() && c.x.empty()) {
      out.push_back(-1);
    } else {
      out.push_back(verdict_of(oracle, UPWord(c.w, u + c.x)));
    }
  }
  return out;
}

// Index of the first context where both verdicts are defined and differ.
std::optional<std::size_t> first_difference(const std::vector<Verdict>& a,
                                            const std::vector<Verdict>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= 0 && b[i] >= 0 && a[i] != b[i]) return i;
  }
  return std::nullopt;
}

}  // namespace

Condition2Result check_condition2_bounded(
    const Classifier& c, const LanguageOracle& oracle,
    const Condition2Options& options,
    const LanguageOracle::Replacements* replacements) {
  if (!(c.alphabet() == oracle.alphabet())) {
    throw AlphabetMismatch("classifier alphabet {" + c.alphabet().letters() +
                           "} differs from oracle alphabet {" +
                           oracle.alphabet().letters() + "}");
  }
  if (options.cycle_bound == 0 || options.word_bound == 0) {
    throw InvalidArgument("condition (2) bounds must be positive");
  }
  const auto words = nonempty_words(c.alphabet(), options.word_bound);
  const auto reps = c.nonempty_representatives();
  std::vector<FiniteWord> rep_of;
  for (const auto& w : words) {
    const ClassId id = c.class_of(w);
    if (replacements != nullptr) {
      auto it = replacements->find(id);
      if (it != replacements->end()) {
        rep_of.push_back(it->second);
        continue;
      }
    }
    rep_of.push_back(reps.at(id));
  }

  Condition2Result result;
  auto pick = [&](const std::vector<std::size_t>& idx, bool replace) {
    std::vector<FiniteWord> out;
    for (auto i : idx) out.push_back(replace ? rep_of[i] : words[i]);
    return out;
  };
  for (std::size_t h = 0; h <= options.head_bound && !result.witness; ++h) {
    for (std::size_t cl = 1; cl <= options.cycle_bound && !result.witness; ++cl) {
      for_each_tuple(h, words.size(), [&](const std::vector<std::size_t>& head) {
        if (result.witness) return;
        for_each_tuple(cl, words.size(), [&](const std::vector<std::size_t>& cyc) {
          if (result.witness) return;
          const auto head_w = pick(head, false), cyc_w = pick(cyc, false);
          const auto head_r = pick(head, true), cyc_r = pick(cyc, true);
          const UPWord original = omega_product(head_w, cyc_w);
          if (std::all_of(cyc_r.begin(), cyc_r.end(),
                          [](const FiniteWord& w) { return w.empty(); })) {
            ++result.skipped;
            return;
          }
          const UPWord replaced = omega_product(head_r, cyc_r);
          Verdict a, b;
          try {
            a = verdict_of(oracle, original);
            b = verdict_of(oracle, replaced);
          } catch (const UnsupportedInput& e) {
            throw UnsupportedInput("condition (2) check on " + format_word(original) +
                                   " / " + format_word(replaced) + ": " + e.what());
          }
          if (a < 0 || b < 0) {
            ++result.skipped;
            return;
          }
          ++result.tested;
          if (a != b) {
            result.witness = Condition2ViolationWitness{
                head_w, cyc_w, "", head_r, cyc_r, original, replaced,
                a == 1, b == 1};
          }
        });
      });
    }
  }
  return result;
}

ArnoldResult arnold_equiv_bounded(const LanguageOracle& oracle,
                                  const FiniteWord& u, const FiniteWord& u_prime,
                                  std::size_t context_bound) {
  oracle.alphabet().require_word(u, "arnold_equiv_bounded");
  oracle.alphabet().require_word(u_prime, "arnold_equiv_bounded");
  if (u == u_prime) return {};
  const auto set = arnold_contexts(oracle.alphabet(), context_bound);
  const auto a = arnold_signature(oracle, u, set);
  const auto b = arnold_signature(oracle, u_prime, set);
  if (auto i = first_difference(a, b)) return {false, set.contexts[*i]};
  return {};
}

ArnoldClasses arnold_classes_bounded(const LanguageOracle& oracle,
                                     std::size_t word_bound,
                                     std::size_t context_bound) {
  const auto words = words_up_to(oracle.alphabet(), word_bound);
  const auto set = arnold_contexts(oracle.alphabet(), context_bound);
  std::vector<std::vector<Verdict>> sig;
  for (const auto& u : words) sig.push_back(arnold_signature(oracle, u, set));

  const std::size_t n = words.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::uint8_t>> equiv(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const bool eq = !first_difference(sig[i], sig[j]).has_value();
      equiv[i][j] = equiv[j][i] = eq ? 1 : 0;
      if (eq) {
        const auto ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  ArnoldClasses out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] == n) {
      slot[r] = out.classes.size();
      out.classes.emplace_back();
    }
    out.classes[slot[r]].push_back(words[i]);
  }
  for (std::size_t i = 0; i < n && out.transitive; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j) && !equiv[i][j]) {
        out.transitive = false;
        out.non_transitive_pair = std::make_pair(words[i], words[j]);
        break;
      }
    }
  }
  return out;
}

RightCongruenceResult right_congruence_bounded(const LanguageOracle& oracle,
                                               const FiniteWord& u,
                                               const FiniteWord& u_prime,
                                               std::size_t tail_bound) {
  oracle.alphabet().require_word(u, "right_congruence_bounded");
  oracle.alphabet().require_word(u_prime, "right_congruence_bounded");
  if (u == u_prime) return {};
  const auto words = words_up_to(oracle.alphabet(), tail_bound);
  for (const auto& x : words) {
    for (const auto& y : words) {
      if (y.empty()) continue;
      const Verdict a = verdict_of(oracle, UPWord(u + x, y));
      const Verdict b = verdict_of(oracle, UPWord(u_prime + x, y));
      if (a >= 0 && b >= 0 && a != b) return {false, UPWord(x, y)};
    }
  }
  return {};
}

}  // namespace omegaext
