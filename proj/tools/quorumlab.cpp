// quorumlab: generate Legco-family games, analyze structure, certify
// dimension, and compute power indices.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quorumlab/report.hpp"

namespace {

using namespace quorumlab;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxLegcoN = (kMaxPlayers - 1) / 2;
constexpr int kMaxClosedFormN = 100000;

// Writes to a temporary sibling and renames over the target.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw input_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw input_error("cannot move output into place at " + path);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct GameSource {
  std::string file;
  int n = 0;
  std::string scenario = "status_quo";

  void attach(CLI::App* cmd) {
    cmd->add_option("--game", file, "Game JSON file");
    cmd->add_option("--n", n, "Legco size (instead of --game)")->check(CLI::Range(1, kMaxLegcoN));
    cmd->add_option("--scenario", scenario, "status_quo | bicameral_only | unicameral")
        ->check(CLI::IsMember({"status_quo", "bicameral_only", "unicameral"}));
  }

  Game load() const {
    if (!file.empty() && n != 0) throw input_error("give either --game or --n, not both");
    if (!file.empty()) return game_from_json(read_json_file(file));
    if (n != 0) return legco_game(n, parse_scenario(scenario));
    throw input_error("a game is required: --game FILE or --n N");
  }
};

Limits initial_limits() {
  Limits limits;
  if (const char* env = std::getenv("QUORUMLAB_MAX_PLAYERS"); env != nullptr && *env != '\0') {
    try {
      limits.max_players = std::stoi(env);
    } catch (const std::exception&) {
      throw input_error(std::string("QUORUMLAB_MAX_PLAYERS is not an integer: ") + env);
    }
  }
  return limits;
}

int run(int argc, char** argv) {
  CLI::App app{"Simple-game analysis for the Legco voting-game family"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Limits limits = initial_limits();
  std::optional<int> max_players;
  app.add_option("--max-players", max_players, "Enumeration cap in players (default 26)")
      ->check(CLI::Range(1, 62));

  // gen
  auto* gen = app.add_subcommand("gen", "Write a Legco game as canonical JSON");
  int gen_n = 0;
  std::string gen_scenario = "status_quo";
  std::string gen_form = "legco";
  std::string gen_out;
  gen->add_option("--n", gen_n, "Legco size n (2n+1 players)")->required()->check(CLI::Range(1, kMaxLegcoN));
  gen->add_option("--scenario", gen_scenario)->check(CLI::IsMember({"status_quo", "bicameral_only", "unicameral"}));
  gen->add_option("--form", gen_form, "legco | realization | explicit")
      ->check(CLI::IsMember({"legco", "realization", "explicit"}));
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Swap robustness, completeness, desirability clauses");
  GameSource analyze_src;
  std::string analyze_out;
  analyze_src.attach(analyze);
  analyze->add_option("--out", analyze_out);

  // dimension
  auto* dimension = app.add_subcommand("dimension", "Certify the dimension against a candidate matrix");
  GameSource dim_src;
  std::string dim_candidate;
  std::string dim_out;
  dim_src.attach(dimension);
  dimension->add_option("--candidate", dim_candidate, "Matrix JSON (defaults to the scenario realization)");
  dimension->add_option("--out", dim_out);

  // power
  auto* power = app.add_subcommand("power", "Banzhaf and Shapley-Shubik indices");
  GameSource power_src;
  std::string power_index = "both";
  int power_digits = 4;
  std::string power_out;
  std::string power_format = "json";
  power->add_option("--game", power_src.file, "Game JSON file (exhaustive enumeration)");
  power->add_option("--n", power_src.n, "Legco size (closed forms)")->check(CLI::Range(1, kMaxClosedFormN));
  power->add_option("--index", power_index)->check(CLI::IsMember({"banzhaf", "ssi", "both"}));
  power->add_option("--digits", power_digits, "Significant figures for decimals")->check(CLI::Range(1, 17));
  power->add_option("--format", power_format)->check(CLI::IsMember({"json"}));
  power->add_option("--out", power_out);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Closed-form power ratios over a range of n");
  int sweep_from = 1, sweep_to = 100, sweep_step = 1, sweep_digits = 4;
  std::string sweep_format = "csv";
  std::string sweep_out;
  bool sweep_probe = false;
  sweep_cmd->add_option("--from", sweep_from)->check(CLI::Range(1, kMaxClosedFormN));
  sweep_cmd->add_option("--to", sweep_to)->check(CLI::Range(1, kMaxClosedFormN));
  sweep_cmd->add_option("--step", sweep_step)->check(CLI::Range(1, kMaxClosedFormN));
  sweep_cmd->add_option("--digits", sweep_digits)->check(CLI::Range(1, 17));
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--probe", sweep_probe, "Emit the growth-exponent probe instead of the sweep");
  sweep_cmd->add_option("--out", sweep_out);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run the full regression battery");
  std::string verify_n = "1..7,35";
  bool verify_enumerate = false;
  std::string verify_out;
  verify->add_option("--n", verify_n, "Set of n, e.g. 1..6 or 1..7,35");
  verify->add_flag("--enumerate", verify_enumerate, "Fail instead of skipping enumeration above the cap");
  verify->add_option("--out", verify_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (max_players) limits.max_players = *max_players;

  if (gen->parsed()) {
    const auto scenario = parse_scenario(gen_scenario);
    json out;
    if (gen_form == "legco") {
      out = game_to_json(legco_game(gen_n, scenario));
    } else if (gen_form == "realization") {
      out = game_to_json(Game::weighted(scenario_realization(gen_n, scenario)));
    } else {
      out = game_to_json(to_explicit(legco_game(gen_n, scenario), limits));
    }
    write_output(gen_out, dump(out));
    return 0;
  }

  if (analyze->parsed()) {
    const Game game = analyze_src.load();
    const json inputs{{"game", game_to_json(game)}};
    write_output(analyze_out, dump(envelope("analyze", inputs, analyze_report(game, limits))));
    return 0;
  }

  if (dimension->parsed()) {
    const Game game = dim_src.load();
    AmalgamatedMatrix candidate;
    if (!dim_candidate.empty()) {
      candidate = matrix_from_any_json(read_json_file(dim_candidate));
    } else if (const auto* lg = game.as_legco()) {
      candidate = scenario_realization(lg->n, lg->scenario);
    } else if (const auto* m = game.as_weighted()) {
      candidate = *m;
    } else {
      throw input_error("explicit games need --candidate");
    }
    const auto cert = certify_dimension(game, candidate, limits);
    const json inputs{{"game", game_to_json(game)}, {"candidate", matrix_to_json(candidate)}};
    write_output(dim_out, dump(envelope("dimension", inputs, certificate_json(cert))));
    return cert.certified() ? 0 : kExitCheckFailed;
  }

  if (power->parsed()) {
    json result;
    json inputs;
    if (!power_src.file.empty() && power_src.n != 0) throw input_error("give either --game or --n, not both");
    if (!power_src.file.empty()) {
      const Game game = power_src.load();
      inputs = {{"game", game_to_json(game)}, {"index", power_index}, {"digits", power_digits}};
      result = power_enum_report(game, limits, power_digits);
      if (power_index == "banzhaf") {
        result.erase("ssi");
        result.erase("ssi_decimal");
      } else if (power_index == "ssi") {
        result.erase("banzhaf");
        result.erase("banzhaf_decimal");
        result.erase("swings");
      }
    } else if (power_src.n != 0) {
      inputs = {{"n", power_src.n}, {"index", power_index}, {"digits", power_digits}};
      result = power_closed_report(power_src.n, power_digits);
      if (power_index == "banzhaf") result.erase("ssi");
      if (power_index == "ssi") result.erase("banzhaf");
    } else {
      throw input_error("power needs --n N (closed forms) or --game FILE (enumeration)");
    }
    write_output(power_out, dump(envelope("power", inputs, result)));
    return 0;
  }

  if (sweep_cmd->parsed()) {
    if (sweep_probe) {
      const auto probe = conjecture_probe(sweep_from, sweep_to);
      if (sweep_format == "csv") {
        std::string csv = "n,lambda_estimate,ssi_ratio\n";
        for (const auto& r : probe.rows) {
          csv += std::to_string(r.n) + "," + format_significant(r.lambda_estimate, sweep_digits) + "," +
                 format_significant(r.ssi_ratio, sweep_digits) + "\n";
        }
        csv += "# fitted_exponent," + format_significant(probe.fitted_exponent, sweep_digits) + "\n";
        write_output(sweep_out, csv);
      } else {
        const json inputs{{"from", sweep_from}, {"to", sweep_to}, {"probe", true}, {"digits", sweep_digits}};
        write_output(sweep_out, dump(envelope("sweep", inputs, probe_json(probe, sweep_digits))));
      }
      return 0;
    }
    const auto rows = sweep(sweep_from, sweep_to, sweep_step);
    if (sweep_format == "csv") {
      write_output(sweep_out, sweep_csv(rows, sweep_digits));
    } else {
      const json inputs{{"from", sweep_from}, {"to", sweep_to}, {"step", sweep_step}, {"digits", sweep_digits}};
      write_output(sweep_out, dump(envelope("sweep", inputs, sweep_json(rows, sweep_digits))));
    }
    return 0;
  }

  if (verify->parsed()) {
    VerifyOptions opt;
    opt.n_set = parse_n_set(verify_n);
    opt.limits = limits;
    opt.force_enumeration = verify_enumerate;
    bool passed = false;
    const json result = verify_paper(opt, passed);
    const json inputs{{"n", opt.n_set}, {"enumerate", verify_enumerate}};
    write_output(verify_out, dump(envelope("verify-paper", inputs, result)));
    std::cerr << (passed ? "verify-paper: PASS" : "verify-paper: FAIL") << "\n";
    return passed ? 0 : kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const quorumlab::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const quorumlab::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
