#pragma once

// Shared plumbing of the omegaext command-line tool.  Each command group
// registers its subcommands; the chosen one leaves an action that fills a
// JSON document (stdout) and a human summary (stderr).

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "omegaext/buchi.hpp"
#include "omegaext/language.hpp"
#include "omegaext/words.hpp"

namespace omegaext::cli {

struct Output {
  nlohmann::json json = nlohmann::json::object();
  std::ostringstream human;
};

using Action = std::function<void(Output&)>;

/// Where the selected subcommand stores its work.
struct Dispatch {
  Action action;
};

void register_buchi(CLI::App& app, Dispatch& d);
void register_congruence(CLI::App& app, Dispatch& d);
void register_oracle(CLI::App& app, Dispatch& d);
void register_game(CLI::App& app, Dispatch& d);
void register_mso(CLI::App& app, Dispatch& d);
void register_trio(CLI::App& app, Dispatch& d);

/// Throws `InvalidArgument` when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// "a,b,1" or "ab1".
Alphabet parse_alphabet_arg(const std::string& text);

/// Size caps for complementation: the defaults, or the step budget from the
/// environment when it is set.
ComplementOptions complement_options();
/// The environment's step budget, or `fallback`.
std::uint64_t step_budget_or(std::uint64_t fallback);

nlohmann::json witness_json(const Condition2ViolationWitness& w);

}  // namespace omegaext::cli
