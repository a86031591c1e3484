#include "cli.hpp"
#include "omegaext/congruence.hpp"
#include "omegaext/oracles.hpp"
#include "omegaext/text.hpp"

namespace omegaext::cli {
namespace {

struct CongruenceArgs {
  std::string classifier;
  std::string oracle;
  std::string output;
  std::string alphabet;
  std::size_t word_bound = 2;
  std::size_t head_bound = 2;
  std::size_t cycle_bound = 2;
  std::size_t context_bound = 3;
  std::size_t tail_bound = 3;
};

nlohmann::json violation_json(const Condition1Violation& v) {
  return {{"u", v.u},
          {"u_prime", v.u_prime},
          {"w", v.w},
          {"side", v.side == Side::kLeft ? "left" : "right"}};
}

std::string show(const FiniteWord& w) { return format_word(w); }

}  // namespace

void register_congruence(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<CongruenceArgs>();
  auto* group = app.add_subcommand("congruence", "classifiers and ω-congruence checks");
  group->require_subcommand(1);

  auto* check1 = group->add_subcommand("check1", "compatibility with concatenation (exact)");
  check1->add_option("--classifier", args->classifier, "classifier file")->required();
  check1->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto c = parse_classifier(read_file(args->classifier));
      const auto v = check_condition1(c);
      out.json = {{"holds", !v.has_value()}, {"index", c.index()}};
      if (v) out.json["violation"] = violation_json(*v);
      if (v) {
        out.human << "violated: " << show(v->u) << " ~ " << show(v->u_prime) << " but not after "
                  << (v->side == Side::kLeft ? "prefixing " : "appending ") << show(v->w) << "\n";
      } else {
        out.human << "condition (1) holds\n";
      }
    };
  });

  auto* repair = group->add_subcommand("repair", "merge classes until condition (1) holds");
  repair->add_option("--classifier", args->classifier, "classifier file")->required();
  repair->add_option("--output", args->output, "write the repaired classifier here");
  repair->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto c = parse_classifier(read_file(args->classifier));
      const auto r = lemma_repair(c);
      out.json = {{"index_before", c.index()},
                  {"index_after", r.classifier.index()},
                  {"merges", nlohmann::json::array()},
                  {"classifier", format_classifier(r.classifier)}};
      for (const auto& m : r.merges) out.json["merges"].push_back(violation_json(m));
      if (!args->output.empty()) write_file(args->output, format_classifier(r.classifier));
      out.human << r.merges.size() << " merges, index " << c.index() << " -> "
                << r.classifier.index() << "\n";
    };
  });

  auto* check2 = group->add_subcommand("check2", "bounded infinite-product recognition");
  check2->add_option("--classifier", args->classifier, "classifier file")->required();
  check2->add_option("--oracle", args->oracle, "oracle name")->required();
  check2->add_option("--word-bound", args->word_bound, "longest uᵢ")->check(CLI::PositiveNumber);
  check2->add_option("--head-bound", args->head_bound, "head words");
  check2->add_option("--cycle-bound", args->cycle_bound, "cycle words")
      ->check(CLI::PositiveNumber);
  check2->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto c = parse_classifier(read_file(args->classifier));
      const auto oracle = make_oracle(args->oracle);
      const auto r = check_condition2_bounded(
          c, oracle, {args->word_bound, args->head_bound, args->cycle_bound});
      out.json = {{"holds", !r.witness.has_value()}, {"tested", r.tested}, {"skipped", r.skipped}};
      if (r.witness) out.json["witness"] = witness_json(*r.witness);
      out.human << (r.witness ? "violated: " + format_word(r.witness->original) + " vs " +
                                    format_word(r.witness->replaced) + "\n"
                              : "no violation among " + std::to_string(r.tested) + " pairs\n");
    };
  });

  auto* arnold = group->add_subcommand("arnold", "bounded Arnold congruence classes");
  arnold->add_option("--oracle", args->oracle, "oracle name")->required();
  arnold->add_option("--word-bound", args->word_bound, "longest word")->required();
  arnold->add_option("--context-bound", args->context_bound, "longest context word")
      ->required();
  arnold->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto r = arnold_classes_bounded(make_oracle(args->oracle), args->word_bound,
                                            args->context_bound);
      out.json = {{"classes", r.classes},
                  {"count", r.classes.size()},
                  {"transitive", r.transitive}};
      if (r.non_transitive_pair) {
        out.json["non_transitive_pair"] = {r.non_transitive_pair->first,
                                           r.non_transitive_pair->second};
      }
      out.human << r.classes.size() << " classes\n";
      for (const auto& cls : r.classes) {
        out.human << "  {" << show(cls.front()) << ", ... " << cls.size() << " words}\n";
      }
    };
  });

  auto* right = group->add_subcommand("right", "bounded right congruence classes");
  right->add_option("--oracle", args->oracle, "oracle name")->required();
  right->add_option("--word-bound", args->word_bound, "longest word")->required();
  right->add_option("--tail-bound", args->tail_bound, "longest tail prefix and period")
      ->required();
  right->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto oracle = make_oracle(args->oracle);
      std::vector<std::vector<FiniteWord>> classes;
      for (const auto& u : words_up_to(oracle.alphabet(), args->word_bound)) {
        bool placed = false;
        for (auto& cls : classes) {
          if (right_congruence_bounded(oracle, cls.front(), u, args->tail_bound).equivalent) {
            cls.push_back(u);
            placed = true;
            break;
          }
        }
        if (!placed) classes.push_back({u});
      }
      out.json = {{"classes", classes}, {"count", classes.size()}};
      out.human << classes.size() << " classes\n";
    };
  });
}

void register_oracle(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<CongruenceArgs>();
  auto word = std::make_shared<std::string>();
  auto samples = std::make_shared<std::size_t>(200);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto* group = app.add_subcommand("oracle", "membership oracles");
  group->require_subcommand(1);

  group->add_subcommand("list", "built-in oracle names")->callback([&d] {
    d.action = [](Output& out) {
      out.json = {{"oracles", {"U", "Uprime", "P", "primes", "singleton:<word>",
                               "regular:<file>"}}};
      out.human << "U Uprime P primes singleton:<word> regular:<file>\n";
    };
  });

  auto* contains = group->add_subcommand("contains", "membership of an ω-word");
  contains->add_option("--oracle", args->oracle, "oracle name")->required();
  contains->add_option("--word", *word, "UP or block word")->required();
  contains->callback([args, word, &d] {
    d.action = [args, word](Output& out) {
      const auto oracle = make_oracle(args->oracle);
      const auto w = parse_omega_word(*word);
      const bool member = oracle.contains(w);
      out.json = {{"oracle", oracle.name()}, {"word", format_word(w)}, {"member", member}};
      out.human << format_word(w) << (member ? " ∈ " : " ∉ ") << oracle.name() << "\n";
    };
  });

  auto* neutral = group->add_subcommand("neutral-test", "neutral-letter invariance test");
  neutral->add_option("--oracle", args->oracle, "oracle name")->required();
  neutral->add_option("--samples", *samples, "comparisons to make");
  neutral->add_option("--seed", *seed, "random seed");
  neutral->callback([args, samples, seed, &d] {
    d.action = [args, samples, seed](Output& out) {
      const auto r = neutral_letter_property_test(make_oracle(args->oracle), *samples, *seed);
      out.json = {{"tested", r.tested},
                  {"skipped", r.skipped},
                  {"passed", !r.counterexample.has_value()}};
      if (r.counterexample) {
        out.json["counterexample"] = {{"original", format_word(r.counterexample->original)},
                                      {"modified", format_word(r.counterexample->modified)}};
      }
      out.human << r.tested << " comparisons, "
                << (r.counterexample ? "counterexample found\n" : "no counterexample\n");
    };
  });

  auto* violation = group->add_subcommand("violation", "condition (2) witness for a classifier");
  violation->add_option("--oracle", args->oracle, "oracle name")->required();
  violation->add_option("--classifier", args->classifier, "classifier file")->required();
  violation->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto oracle = make_oracle(args->oracle);
      const auto w = oracle.find_violation(parse_classifier(read_file(args->classifier)));
      out.json = {{"witness", witness_json(w)}, {"verified", verify_witness(oracle, w)}};
      out.human << format_word(w.original) << " vs " << format_word(w.replaced) << "\n";
    };
  });
}

}  // namespace omegaext::cli
