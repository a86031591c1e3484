#include "cli.hpp"
#include "omegaext/game.hpp"
#include "omegaext/oracles.hpp"
#include "omegaext/text.hpp"

namespace omegaext::cli {
namespace {

struct GameArgs {
  std::string word;
  std::string oracle;
  std::string spoiler = "diverging";
  std::string duplicator = "copy";
  std::size_t horizon = 10;
  std::uint64_t seed = 0;
  std::string output;
  std::string transcript;
};

/// "random" picks up the command's seed; explicit "random:s" keeps its own.
std::string seeded(const std::string& name, std::uint64_t seed) {
  return name == "random" ? name + ":" + std::to_string(seed) : name;
}

}  // namespace

void register_game(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<GameArgs>();
  auto* group = app.add_subcommand("game", "the bounded congruence game");
  group->require_subcommand(1);

  auto* play = group->add_subcommand("play", "play one bounded game");
  play->add_option("--word", args->word, "ω-word over {a,b}, e.g. blocks(a,b;affine 1 0)")
      ->required();
  play->add_option("--oracle", args->oracle, "language oracle")->required();
  play->add_option("--spoiler", args->spoiler, "diverging | random[:seed]");
  play->add_option("--duplicator", args->duplicator, "copy | random[:seed] | constant[:word]");
  play->add_option("--horizon", args->horizon, "pairs materialised")->check(CLI::PositiveNumber);
  play->add_option("--seed", args->seed, "seed for random strategies");
  play->add_option("--output", args->output, "also write the transcript here");
  play->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto word = parse_omega_word(args->word);
      const auto oracle = make_oracle(args->oracle);
      auto duplicator = make_duplicator(seeded(args->duplicator, args->seed));
      if (args->duplicator == "copy") {
        duplicator = duplicator_copy_strategy(step_budget_or(1'000'000));
      }
      const auto t = play_bounded(word, oracle, make_spoiler(seeded(args->spoiler, args->seed)),
                                  duplicator, {args->horizon});
      out.json = to_json(t);
      if (!args->output.empty()) write_file(args->output, out.json.dump(2) + "\n");
      out.human << "winner " << to_string(t.winner);
      if (t.forfeit) out.human << " (" << to_string(t.forfeit->player) << " forfeits)";
      if (t.adjudication_failure) out.human << " (" << *t.adjudication_failure << ")";
      if (t.horizon_insufficient) out.human << " [horizon insufficient]";
      out.human << "\n";
    };
  });

  auto* adjudicate_cmd = group->add_subcommand("adjudicate", "replay round 6 of a transcript");
  adjudicate_cmd->add_option("--transcript", args->transcript, "transcript JSON file")
      ->required();
  adjudicate_cmd->callback([args, &d] {
    d.action = [args](Output& out) {
      const auto t = transcript_from_json(nlohmann::json::parse(read_file(args->transcript)));
      const auto violations = validate_transcript(t);
      const auto a = adjudicate(t, make_oracle(t.oracle));
      out.json = {{"winner", to_string(a.winner)},
                  {"recorded_winner", to_string(t.winner)},
                  {"agrees", a.winner == t.winner},
                  {"violations", violations}};
      if (a.w_member) out.json["w_member"] = *a.w_member;
      if (a.v_member) out.json["v_member"] = *a.v_member;
      if (a.failure) out.json["failure"] = *a.failure;
      out.human << "winner " << to_string(a.winner)
                << (a.winner == t.winner ? " (as recorded)\n" : " (recorded differently)\n");
    };
  });
}

}  // namespace omegaext::cli
