#include "cli.hpp"
#include "omegaext/text.hpp"
#include "omegaext/trio.hpp"

namespace omegaext::cli {
namespace {

struct TrioArgs {
  std::string language = "anbn";
  std::string input;
  std::string word;
  std::size_t suffix_bound = 8;
  std::size_t max_length = 14;
  std::size_t power_bound = 16;
};

}  // namespace

void register_trio(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<TrioArgs>();
  auto* group = app.add_subcommand("trio", "separator languages over finite words");
  group->require_subcommand(1);

  for (const char* name : {"l1", "l2"}) {
    const bool first = std::string(name) == "l1";
    auto* sub = group->add_subcommand(
        name, first ? "membership in { u#u' : u ~ u' }" : "membership in the ρ#-separated language");
    sub->add_option("--language", args->language, "anbn or anbn-bounded");
    sub->add_option("--input", args->input, "word; write ρ# as %#")->required();
    sub->add_option("--suffix-bound", args->suffix_bound, "suffix bound without an exact ~");
    sub->callback([args, &d, first] {
      d.action = [args, first](Output& out) {
        const auto L = make_finite_oracle(args->language);
        const auto s = parse_separator_text(args->input);
        const auto v = first ? member_L1(L, s, args->suffix_bound)
                             : member_L2(L, s, args->suffix_bound);
        out.json = {{"input", format_separator_text(s)},
                    {"member", v.member},
                    {"exact", v.exact}};
        out.human << (v.member ? "member" : "not a member")
                  << (v.exact ? "\n" : " (bounded suffix search)\n");
      };
    });
  }

  auto* project = group->add_subcommand("project", "erase everything but the separators");
  project->add_option("--language", args->language, "accepted for symmetry");
  project->add_option("--input", args->input, "word; write ρ# as %#")->required();
  project->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto p = project_to_separators(parse_separator_text(args->input));
      out.json = {{"projection", format_separator_text(p)}};
      out.human << format_separator_text(p) << "\n";
    };
  });

  auto* census = group->add_subcommand("census", "all short members of the ρ#-language");
  census->add_option("--language", args->language, "anbn or anbn-bounded");
  census->add_option("--max-length", args->max_length, "longest word, ρ# counting once");
  census->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto c = census_L2(make_finite_oracle(args->language), args->max_length);
      std::vector<std::string> unequal;
      for (const auto& w : c.unequal) unequal.push_back(format_separator_text(w));
      out.json = {{"max_length", c.max_length}, {"examined", c.examined},
                  {"members", c.members},       {"unequal", unequal},
                  {"attained", c.attained},     {"exact", c.exact}};
      out.human << c.members << " members, " << c.unequal.size()
                << " with unequal separator counts\n";
    };
  });

  auto* loop = group->add_subcommand("loop", "membership in the loop representation");
  loop->add_option("--language", args->language, "anbn or anbn-bounded");
  loop->add_option("--word", args->word, "UP word, e.g. b(ab)^w")->required();
  loop->add_option("--power-bound", args->power_bound, "largest power tried")
      ->check(CLI::PositiveNumber);
  loop->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto o = loop_representation(make_finite_oracle(args->language), args->power_bound);
      const auto w = parse_up_word(args->word);
      const bool member = o.contains(w);
      out.json = {{"oracle", o.name()}, {"word", format_word(w)}, {"member", member}};
      out.human << format_word(w) << (member ? " ∈ " : " ∉ ") << o.name() << "\n";
    };
  });
}

}  // namespace omegaext::cli
