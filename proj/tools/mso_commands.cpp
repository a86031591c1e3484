#include "cli.hpp"
#include "omegaext/mso.hpp"
#include "omegaext/oracles.hpp"
#include "omegaext/text.hpp"

namespace omegaext::cli {
namespace {

struct MsoArgs {
  std::string file;
  std::string alphabet = "a,b";
  std::string valuation;
  std::vector<std::string> oracles;
  std::string output;
  std::string neutral;
};

Formula load(const std::string& path) { return parse_formula(read_file(path)); }

/// {"word": "...", "positions": {"x": 3}, "sets": {"X": "(10)^w"}}
UPValuation parse_valuation(const nlohmann::json& j) {
  UPValuation val{parse_up_word(j.at("word").get<std::string>()), {}, {}};
  if (j.contains("positions")) {
    for (const auto& [name, p] : j.at("positions").items()) {
      val.positions[name] = p.get<Position>();
    }
  }
  if (j.contains("sets")) {
    for (const auto& [name, s] : j.at("sets").items()) {
      val.sets.emplace(name, parse_up_word(s.get<std::string>()));
    }
  }
  return val;
}

nlohmann::json valuation_json(const UPValuation& val) {
  nlohmann::json j = {{"word", format_word(val.word)},
                      {"positions", nlohmann::json::object()},
                      {"sets", nlohmann::json::object()}};
  for (const auto& [name, p] : val.positions) j["positions"][name] = p;
  for (const auto& [name, s] : val.sets) j["sets"][name] = format_word(s);
  return j;
}

/// "NAME=oracle" binds a predicate; a bare oracle name binds L.
std::map<std::string, LanguageOracle> bind_oracles(const std::vector<std::string>& specs) {
  std::map<std::string, LanguageOracle> out;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    const std::string name = eq == std::string::npos ? "L" : spec.substr(0, eq);
    out.insert_or_assign(name, make_oracle(eq == std::string::npos ? spec : spec.substr(eq + 1)));
  }
  return out;
}

}  // namespace

void register_mso(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<MsoArgs>();
  auto* group = app.add_subcommand("mso", "MSO[<] formulas with language predicates");
  group->require_subcommand(1);

  auto add_file = [args](CLI::App* sub) {
    auto* opt = sub->add_option("file,--file", args->file, "formula file (prefix syntax)");
    opt->required();
    sub->add_option("--alphabet", args->alphabet, "letters of the word, e.g. a,b");
  };

  auto* compile = group->add_subcommand("compile", "compile to a Büchi automaton");
  add_file(compile);
  compile->add_option("--output", args->output, "write the automaton here");
  compile->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto f = load(args->file);
      const auto c = compile_to_buchi(f, parse_alphabet_arg(args->alphabet),
                                      {complement_options()});
      nlohmann::json letters = nlohmann::json::object();
      for (Symbol ch : c.coding.coded().letters()) {
        const auto [letter, bits] = c.coding.decode(ch);
        std::string mask;
        for (std::size_t i = 0; i < c.coding.vars().size(); ++i) {
          mask.push_back(((bits >> i) & 1) ? '1' : '0');
        }
        letters[std::string(1, ch)] = {{"letter", std::string(1, letter)}, {"bits", mask}};
      }
      out.json = {{"formula", format_formula(f)},
                  {"variables", c.coding.vars()},
                  {"coded_letters", letters},
                  {"states", c.automaton.num_states()},
                  {"transitions", c.automaton.num_transitions()},
                  {"automaton", format_buchi(c.automaton)}};
      if (!args->output.empty()) write_file(args->output, format_buchi(c.automaton));
      out.human << pretty_formula(f) << "\n"
                << c.automaton.num_states() << " states, " << c.automaton.num_transitions()
                << " transitions\n";
    };
  });

  auto* sat = group->add_subcommand("sat", "satisfiability with a lasso model");
  add_file(sat);
  sat->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto f = load(args->file);
      const Alphabet sigma = parse_alphabet_arg(args->alphabet);
      const auto r = mso_satisfiable(f, sigma, {complement_options()});
      out.json = {{"formula", format_formula(f)}, {"satisfiable", r.satisfiable}};
      if (r.model) {
        out.json["model"] = valuation_json(*r.model);
        out.json["model_validated"] = evaluate(f, sigma, *r.model);
      }
      out.human << (r.satisfiable ? "SAT, model " + format_word(r.model->word) + "\n"
                                  : "UNSAT\n");
    };
  });

  auto* eval = group->add_subcommand("eval", "evaluate on a lasso valuation");
  add_file(eval);
  eval->add_option("--valuation", args->valuation, "valuation JSON file")->required();
  eval->add_option("--oracle", args->oracles, "oracle for L, or NAME=oracle");
  eval->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto f = load(args->file);
      const auto val = parse_valuation(nlohmann::json::parse(read_file(args->valuation)));
      const bool value =
          evaluate(f, parse_alphabet_arg(args->alphabet), val, bind_oracles(args->oracles));
      out.json = {{"formula", format_formula(f)}, {"value", value}};
      out.human << (value ? "true\n" : "false\n");
    };
  });

  auto* encode = group->add_subcommand("encode-game", "the congruence-game sentence");
  encode->add_option("--alphabet", args->alphabet, "alphabet of L, e.g. a,b,1")->required();
  encode->add_option("--neutral", args->neutral, "neutral letter (default 1, else the last)");
  encode->add_option("--output", args->output, "write the formula here");
  encode->callback([args, &d] {
    d.action = [args](Output& out) {
      const Alphabet sigma = parse_alphabet_arg(args->alphabet);
      Symbol neutral = sigma.contains('1') ? '1' : sigma[sigma.size() - 1];
      if (!args->neutral.empty()) neutral = args->neutral.front();
      const auto f = encode_congruence_game(sigma, neutral);
      out.json = {{"alphabet", sigma.letters()},
                  {"neutral", std::string(1, neutral)},
                  {"size", formula_size(f)},
                  {"depth", formula_depth(f)},
                  {"language_atoms", count_language_atoms(f)},
                  {"free_variables", free_variables(f).size()},
                  {"formula", format_formula(f)}};
      if (!args->output.empty()) write_file(args->output, format_formula(f) + "\n");
      out.human << pretty_formula(f) << "\n";
    };
  });
}

}  // namespace omegaext::cli
