// Copyright 2026 The Blotto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blotto/dispatch.hpp"
#include "blotto/errors.hpp"
#include "blotto/spec_io.hpp"
#include "blotto/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitNoEquilibrium = 3;

struct CommonOptions {
  std::string game_path;
  long samples = 1000;
  std::uint64_t seed = 42;
  double epsilon = 1e-6;
  bool epsilon_given = false;
  std::string out_path;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions* opt) {
  cmd->add_option("--game", opt->game_path, "game-spec JSON file")
      ->required();
  cmd->add_option("--samples", opt->samples, "number of samples / rounds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt->seed, "64-bit RNG seed");
  cmd->add_option("--epsilon", opt->epsilon,
                  "approximation level for Boolean equilibria")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opt->out_path, "output file (default stdout)");
  cmd->add_option("--format", opt->format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::ostream& open_output(const CommonOptions& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) {
    throw blotto::Error(blotto::ErrorCode::BadSpecFile,
                        "cannot write " + opt.out_path);
  }
  return file;
}

double pick_epsilon(const CommonOptions& opt, const blotto::GameFile& file) {
  if (opt.epsilon_given) return opt.epsilon;
  if (file.epsilon.has_value()) return *file.epsilon;
  return opt.epsilon;
}

int run_sample(const CommonOptions& opt) {
  const auto file = blotto::load_game_file(opt.game_path);
  const auto game = blotto::validate_game(file.spec);
  const auto selection =
      blotto::dispatch_sampler(game, file.partition, pick_epsilon(opt, file));
  blotto::RngStream root(opt.seed);
  std::vector<std::vector<double>> samples(opt.samples);
  for (long i = 0; i < opt.samples; ++i) {
    blotto::RngStream sub = root.fork(static_cast<std::uint64_t>(i));
    samples[i] = selection.sampler(sub);
  }
  std::ofstream sink;
  auto& os = open_output(opt, sink);
  if (opt.format == "json") {
    auto j = blotto::samples_to_json(game.spec(), opt.seed, samples);
    j["sampler"] = blotto::to_string(selection.kind);
    os << j.dump(2) << '\n';
  } else {
    blotto::write_samples_csv(os, samples);
  }
  return kExitOk;
}

int run_solve_boolean(const CommonOptions& opt) {
  const auto file = blotto::load_game_file(opt.game_path);
  const auto game = blotto::validate_game(file.spec);
  if (game.variant() != blotto::Variant::Boolean) {
    std::cerr << "solve-boolean needs a boolean game\n";
    return kExitValidation;
  }
  const auto eq = blotto::solve_equilibrium(game, pick_epsilon(opt, file));
  nlohmann::json j;
  j["p"] = eq.probs;
  j["x_star"] = eq.x_star;
  j["achieved_tol"] = eq.achieved_tol;
  j["exploitability_bound"] =
      game.players() >= 3 ? blotto::boolean_exploitability(game, eq) : 0.0;
  std::ofstream sink;
  auto& os = open_output(opt, sink);
  os << j.dump(2) << '\n';
  return kExitOk;
}

int run_verify(const CommonOptions& opt, long marginal_samples) {
  const auto file = blotto::load_game_file(opt.game_path);
  const auto game = blotto::validate_game(file.spec);
  const double epsilon = pick_epsilon(opt, file);
  const auto selection =
      blotto::dispatch_sampler(game, file.partition, epsilon);
  blotto::RngStream root(opt.seed);
  blotto::VerificationReport report;

  const long n_marg = marginal_samples;
  const long n_budget = std::min<long>(n_marg, 100000);

  {
    blotto::RngStream stream = root.fork(1);
    blotto::check_budget(game, selection.sampler, n_budget, stream, report);
  }
  if (game.variant() == blotto::Variant::Continuous) {
    blotto::RngStream stream = root.fork(2);
    blotto::check_marginals_continuous(game, selection.sampler, n_marg,
                                       stream, report);
    blotto::RngStream dev_stream = root.fork(3);
    const auto deviations =
        blotto::standard_deviation_library(game, 20, dev_stream);
    blotto::RngStream play_stream = root.fork(4);
    blotto::lotto_deviation_test(game, selection.sampler, deviations,
                                 std::min<long>(n_marg, 100000), play_stream,
                                 report);
    if (selection.kind == blotto::SamplerKind::SphereCoupling) {
      blotto::SphereSampler audit(game);
      blotto::check_isometry(audit.isometry(), report);
    }
  } else {
    std::vector<double> probs;
    if (selection.equilibrium.has_value()) {
      probs = selection.equilibrium->probs;
      const double gain = blotto::boolean_exploitability(
          game, *selection.equilibrium);
      report.add({"exploitability", gain, epsilon, gain <= epsilon, 0,
                  opt.seed, "exact best-response gain vs requested epsilon"});
    } else {
      const auto pure = blotto::two_player_pure(game);
      probs.assign(pure.begin(), pure.end());
    }
    blotto::RngStream stream = root.fork(2);
    blotto::check_marginals_boolean(game, probs, selection.sampler, n_marg,
                                    stream, report);
  }

  std::ofstream sink;
  auto& os = open_output(opt, sink);
  if (opt.format == "json") {
    os << blotto::report_to_json(report).dump(2) << '\n';
  } else {
    blotto::print_report_table(os, report);
  }
  return report.pass() ? kExitOk : kExitVerification;
}

int run_payoff(const CommonOptions& opt, const std::string& fixed_path) {
  const auto file = blotto::load_game_file(opt.game_path);
  const auto game = blotto::validate_game(file.spec);
  const auto selection =
      blotto::dispatch_sampler(game, file.partition, pick_epsilon(opt, file));
  std::vector<blotto::BidSampler> players(game.players(), selection.sampler);
  if (!fixed_path.empty()) {
    std::ifstream in(fixed_path);
    if (!in) {
      throw blotto::Error(blotto::ErrorCode::BadSpecFile,
                          "cannot open " + fixed_path);
    }
    nlohmann::json j;
    in >> j;
    // {"2": [0.5, 0.5, 0.0]} pins player 2 to a fixed bid vector.
    for (const auto& [key, value] : j.items()) {
      const int player = std::stoi(key);
      if (player < 1 || player > game.players()) {
        throw blotto::Error(blotto::ErrorCode::BadSpecFile,
                            "fixed-bid player index " + key + " out of range");
      }
      const auto bids = value.get<std::vector<double>>();
      players[player - 1] = [bids](blotto::RngStream&) { return bids; };
    }
  }
  blotto::RngStream root(opt.seed);
  const auto result =
      blotto::run_payoff_tournament(game, players, opt.samples, root);
  std::ofstream sink;
  auto& os = open_output(opt, sink);
  if (opt.format == "json") {
    nlohmann::json j;
    j["rounds"] = result.rounds;
    j["mean"] = result.mean;
    j["std_error"] = result.std_error;
    os << j.dump(2) << '\n';
  } else {
    os << "player,mean,std_error\n";
    for (std::size_t i = 0; i < result.mean.size(); ++i) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i + 1,
                    result.mean[i], result.std_error[i]);
      os << buf;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium samplers and checks for multiplayer Blotto games"};
  app.require_subcommand(1);

  CommonOptions sample_opt, solve_opt, verify_opt, payoff_opt;
  long verify_marginal_samples = 1000000;
  std::string fixed_path;

  auto* sample = app.add_subcommand("sample", "draw equilibrium bid vectors");
  add_common(sample, &sample_opt);
  auto* solve = app.add_subcommand("solve-boolean",
                                   "solve Boolean equilibrium probabilities");
  add_common(solve, &solve_opt);
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, &verify_opt);
  verify->add_option("--marginal-samples", verify_marginal_samples,
                     "sample count for the marginal-law checks")
      ->check(CLI::PositiveNumber);
  auto* payoff = app.add_subcommand("payoff", "Monte Carlo payoff tournament");
  add_common(payoff, &payoff_opt);
  payoff->add_option("--fixed", fixed_path,
                     "JSON file pinning players to fixed bid vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (sample->parsed()) {
      sample_opt.epsilon_given = sample->count("--epsilon") > 0;
      return run_sample(sample_opt);
    }
    if (solve->parsed()) {
      solve_opt.epsilon_given = solve->count("--epsilon") > 0;
      return run_solve_boolean(solve_opt);
    }
    if (verify->parsed()) {
      verify_opt.epsilon_given = verify->count("--epsilon") > 0;
      return run_verify(verify_opt, verify_marginal_samples);
    }
    if (payoff->parsed()) {
      payoff_opt.epsilon_given = payoff->count("--epsilon") > 0;
      return run_payoff(payoff_opt, fixed_path);
    }
  } catch (const blotto::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == blotto::ErrorCode::NoKnownEquilibrium
               ? kExitNoEquilibrium
               : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
