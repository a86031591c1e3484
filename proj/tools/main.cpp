// omegaext: command-line access to automata, congruences, oracles, the
// congruence game, MSO formulas and the finite-word separator languages.
//
// Exit status: 0 on success, 2 on usage or malformed input, 1 when a budget
// runs out or an input presentation is unsupported.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cli.hpp"
#include "omegaext/error.hpp"
#include "omegaext/text.hpp"

namespace omegaext::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

Alphabet parse_alphabet_arg(const std::string& text) {
  std::string letters;
  for (char c : text) {
    if (c != ',' && c != ' ') letters.push_back(c);
  }
  return Alphabet(letters);
}

std::uint64_t step_budget_or(std::uint64_t fallback) {
  return std::getenv(StepBudget::kEnvVar) ? StepBudget::default_limit() : fallback;
}

ComplementOptions complement_options() {
  ComplementOptions o;
  o.max_states = step_budget_or(o.max_states);
  o.max_monoid_elements = step_budget_or(o.max_monoid_elements);
  return o;
}

nlohmann::json witness_json(const Condition2ViolationWitness& w) {
  nlohmann::json j;
  j["head"] = w.head;
  j["cycle"] = w.cycle;
  j["scheme"] = w.scheme;
  j["replaced_head"] = w.replaced_head;
  j["replaced_cycle"] = w.replaced_cycle;
  j["original"] = format_word(w.original);
  j["replaced"] = format_word(w.replaced);
  j["original_member"] = w.original_member;
  j["replaced_member"] = w.replaced_member;
  return j;
}

}  // namespace omegaext::cli

namespace {

int fail(int status, const std::string& kind, const std::string& message,
         nlohmann::json extra = nlohmann::json::object()) {
  extra["kind"] = kind;
  extra["message"] = message;
  std::cout << nlohmann::json{{"error", extra}}.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace omegaext;
  CLI::App app{"Experiments with ω-word languages, congruences and the congruence game",
               "omegaext"};
  app.require_subcommand(1);
  cli::Dispatch dispatch;
  cli::register_buchi(app, dispatch);
  cli::register_congruence(app, dispatch);
  cli::register_oracle(app, dispatch);
  cli::register_game(app, dispatch);
  cli::register_mso(app, dispatch);
  cli::register_trio(app, dispatch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!dispatch.action) return fail(2, "usage", "no command given");

  cli::Output out;
  try {
    dispatch.action(out);
  } catch (const BudgetExceeded& e) {
    return fail(1, "budget", e.what(), {{"budget", e.budget()}, {"limit", e.limit()}});
  } catch (const UnsupportedInput& e) {
    return fail(1, "unsupported", e.what());
  } catch (const ParseError& e) {
    return fail(2, "parse", e.what());
  } catch (const AlphabetMismatch& e) {
    return fail(2, "alphabet", e.what());
  } catch (const InvalidArgument& e) {
    return fail(2, "invalid", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(2, "parse", e.what());
  }
  std::cout << out.json.dump(2) << "\n";
  std::cerr << out.human.str();
  return 0;
}
