#include "cli.hpp"
#include "omegaext/text.hpp"

namespace omegaext::cli {
namespace {

struct BuchiArgs {
  std::string automaton;
  std::string other;
  std::string word;
  std::string output;
};

BuchiAutomaton load(const std::string& path) { return parse_buchi(read_file(path)); }

nlohmann::json summary(const BuchiAutomaton& a) {
  return {{"alphabet", a.alphabet().letters()},
          {"states", a.num_states()},
          {"transitions", a.num_transitions()}};
}

void emit_automaton(Output& out, const BuchiAutomaton& a, const std::string& path) {
  out.json["automaton"] = summary(a);
  out.json["text"] = format_buchi(a);
  if (!path.empty()) write_file(path, format_buchi(a));
  out.human << a.num_states() << " states, " << a.num_transitions() << " transitions\n";
}

}  // namespace

void register_buchi(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<BuchiArgs>();
  auto* group = app.add_subcommand("buchi", "Büchi automata in the line format");
  group->require_subcommand(1);

  auto* accepts = group->add_subcommand("accepts", "membership of an ultimately periodic word");
  accepts->add_option("--automaton", args->automaton, "automaton file")->required();
  accepts->add_option("--word", args->word, "word such as ab(ba)^w")->required();
  accepts->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto a = load(args->automaton);
      const auto w = parse_up_word(args->word);
      const bool member = accepts_up(a, w);
      out.json = {{"word", format_word(w)}, {"accepted", member}};
      out.human << format_word(w) << (member ? " accepted\n" : " rejected\n");
    };
  });

  auto* empty = group->add_subcommand("empty", "emptiness with a lasso witness");
  empty->add_option("--automaton", args->automaton, "automaton file")->required();
  empty->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto r = is_empty(load(args->automaton));
      out.json = {{"empty", r.empty}};
      if (r.witness) out.json["witness"] = format_word(*r.witness);
      out.human << (r.empty ? "empty\n" : "nonempty, witness " + format_word(*r.witness) + "\n");
    };
  });

  auto* complement_cmd = group->add_subcommand("complement", "Ramsey complement");
  complement_cmd->add_option("--automaton", args->automaton, "automaton file")->required();
  complement_cmd->add_option("--output", args->output, "write the result here");
  complement_cmd->callback([args, &d] {
    d.action = [args](Output& out) {
      emit_automaton(out, complement(load(args->automaton), complement_options()), args->output);
    };
  });

  for (const char* name : {"intersect", "union"}) {
    const bool is_intersect = std::string(name) == "intersect";
    auto* sub = group->add_subcommand(name, is_intersect ? "product automaton" : "disjoint union");
    sub->add_option("--automaton", args->automaton, "first automaton file")->required();
    sub->add_option("--other", args->other, "second automaton file")->required();
    sub->add_option("--output", args->output, "write the result here");
    sub->callback([args, &d, is_intersect] {
      d.action = [args, is_intersect](Output& out) {
        const auto a = load(args->automaton), b = load(args->other);
        emit_automaton(out, is_intersect ? intersect(a, b) : unite(a, b), args->output);
      };
    });
  }

  auto* equiv = group->add_subcommand("equivalent", "language equivalence");
  equiv->add_option("--automaton", args->automaton, "first automaton file")->required();
  equiv->add_option("--other", args->other, "second automaton file")->required();
  equiv->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto w = distinguishing_word(load(args->automaton), load(args->other),
                                         complement_options());
      out.json = {{"equivalent", !w.has_value()}};
      if (w) out.json["distinguishing_word"] = format_word(*w);
      out.human << (w ? "different, e.g. " + format_word(*w) + "\n" : "equivalent\n");
    };
  });
}

}  // namespace omegaext::cli
