#include "oligo/repeated_play.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "oligo/format.hpp"

namespace oligo {

namespace {

std::string valid_names(const NormalFormGame& game, int player) {
  std::string out;
  for (const auto& name : game.strategies(player)) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

int resolve_posture(const NormalFormGame& game, int player,
                    const std::string& name, const char* what) {
  const int index = game.strategy_index(player, name);
  if (index < 0) {
    throw std::domain_error(std::string(what) + " posture \"" + name +
                            "\" unknown for player " +
                            game.player_name(player) + "; valid postures: " +
                            valid_names(game, player));
  }
  return index;
}

// Canonical uniform double in [0, 1) from the top 53 bits, so traces are
// bit-identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PersistencePolicy mirror_policy(const NormalFormGame& game, int player,
                                double persistence, std::string initial) {
  game.check_player(player);
  const int rival = 1 - player;
  PersistencePolicy policy;
  policy.persistence = persistence;
  policy.initial = std::move(initial);
  for (const auto& name : game.strategies(rival)) {
    if (game.strategy_index(player, name) < 0) {
      throw std::domain_error("mirror policy needs matching strategy names; "
                              "player " +
                              game.player_name(player) + " has no \"" + name +
                              "\"");
    }
    policy.response[name] = name;
  }
  return policy;
}

PlayTrace simulate(const NormalFormGame& game,
                   const std::array<PersistencePolicy, 2>& policies, int weeks,
                   std::uint64_t seed) {
  if (game.player_count() != 2) {
    throw std::domain_error("simulate requires a 2-player game");
  }
  if (weeks < 1) {
    throw std::domain_error("weeks must be >= 1");
  }

  // Resolve every name up front so bad policies fail before any play.
  std::array<int, 2> current{};
  std::array<std::vector<int>, 2> response{};
  for (int p = 0; p < 2; ++p) {
    const PersistencePolicy& policy = policies[p];
    if (!(policy.persistence >= 0.0 && policy.persistence <= 1.0)) {
      throw std::domain_error("persistence must be in [0, 1]");
    }
    current[p] = resolve_posture(game, p, policy.initial, "initial");
    const int rival = 1 - p;
    response[p].resize(game.strategy_count(rival));
    for (int s = 0; s < game.strategy_count(rival); ++s) {
      const std::string& rival_name = game.strategies(rival)[s];
      const auto it = policy.response.find(rival_name);
      if (it == policy.response.end()) {
        throw std::domain_error("response map for player " +
                                game.player_name(p) +
                                " missing rival posture \"" + rival_name +
                                "\"");
      }
      response[p][s] = resolve_posture(game, p, it->second, "response");
    }
  }

  PlayTrace trace;
  trace.seed = seed;
  trace.rounds.reserve(weeks);
  std::mt19937_64 rng(seed);
  std::array<double, 2> cumulative{0.0, 0.0};
  std::array<int, 2> previous{};
  for (int week = 1; week <= weeks; ++week) {
    PlayRound round;
    round.round = week;
    if (week == 1) {
      round.posture = current;
    } else {
      for (int p = 0; p < 2; ++p) {
        const double rho = policies[p].persistence;
        bool persist;
        if (rho == 1.0) {
          persist = true;
        } else if (rho == 0.0) {
          persist = false;
        } else {
          persist = uniform01(rng) < rho;
          ++trace.draws;
        }
        round.persisted[p] = persist;
        round.posture[p] = persist ? previous[p] : response[p][previous[1 - p]];
      }
    }
    const StrategyProfile profile{round.posture[0], round.posture[1]};
    for (int p = 0; p < 2; ++p) {
      round.payoff[p] = game.payoff(profile, p);
      cumulative[p] += round.payoff[p];
      round.cumulative[p] = cumulative[p];
    }
    previous = round.posture;
    trace.rounds.push_back(round);
  }
  return trace;
}

OutcomeReport compare_outcomes(const PlayTrace& trace,
                               const NormalFormGame& game) {
  if (game.player_count() != 2) {
    throw std::domain_error("compare_outcomes requires a 2-player game");
  }
  if (trace.rounds.empty()) {
    throw std::domain_error("trace has no rounds");
  }

  const std::vector<StrategyProfile> equilibria = pure_nash(game);
  const PDVerdict verdict = is_prisoners_dilemma(game);

  OutcomeReport report;
  report.has_pd_witness = verdict.is_pd;
  long nash_rounds = 0;
  long pareto_rounds = 0;
  for (const PlayRound& round : trace.rounds) {
    const StrategyProfile profile{round.posture[0], round.posture[1]};
    game.check_profile(profile);  // rejects traces from a different game
    for (int p = 0; p < 2; ++p) {
      if (std::abs(game.payoff(profile, p) - round.payoff[p]) != 0.0) {
        throw std::domain_error("trace payoffs do not match the game");
      }
    }
    if (std::find(equilibria.begin(), equilibria.end(), profile) !=
        equilibria.end()) {
      ++nash_rounds;
    }
    if (verdict.is_pd && profile == verdict.pareto_superior) {
      ++pareto_rounds;
    }
  }
  const double weeks = static_cast<double>(trace.rounds.size());
  report.average_payoff = {trace.rounds.back().cumulative[0] / weeks,
                           trace.rounds.back().cumulative[1] / weeks};
  report.nash_fraction = nash_rounds / weeks;
  report.pareto_fraction = pareto_rounds / weeks;
  return report;
}

void write_trace_csv(std::ostream& out, const PlayTrace& trace,
                     const NormalFormGame& game) {
  out << "round,posture_i,posture_j,payoff_i,payoff_j,cum_i,cum_j\n";
  for (const PlayRound& round : trace.rounds) {
    out << round.round << ',' << game.strategies(0)[round.posture[0]] << ','
        << game.strategies(1)[round.posture[1]] << ','
        << trim6(round.payoff[0]) << ',' << trim6(round.payoff[1]) << ','
        << trim6(round.cumulative[0]) << ',' << trim6(round.cumulative[1])
        << '\n';
  }
}

}  // namespace oligo
