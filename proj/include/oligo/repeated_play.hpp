#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "oligo/normal_form.hpp"

namespace oligo {

// Weekly posture rule: with probability `persistence` repeat last week's own
// posture, otherwise answer the rival's last posture through `response`.
struct PersistencePolicy {
  double persistence = 0.9;
  std::map<std::string, std::string> response;  // rival posture -> own posture
  std::string initial;
};

// Policy that answers any rival posture with the same-named one of its own.
// Requires the two players' strategy sets to share names.
PersistencePolicy mirror_policy(const NormalFormGame& game, int player,
                                double persistence, std::string initial);

struct PlayRound {
  int round = 0;  // 1-based; rounds are weeks
  std::array<int, 2> posture{};
  std::array<double, 2> payoff{};
  std::array<double, 2> cumulative{};
  // Whether the persist branch was taken this round (round 1 and the
  // deterministic persistence values 0 and 1 never draw).
  std::array<bool, 2> persisted{};
};

struct PlayTrace {
  std::vector<PlayRound> rounds;
  std::uint64_t seed = 0;
  std::size_t draws = 0;  // uniform variates consumed
};

// Plays `weeks` rounds of the two-player stage game. Both players move
// simultaneously each week observing only the rival's previous posture.
// Randomness comes from a seeded generator; identical inputs give identical
// traces byte for byte. Persistence 0 and 1 consume no randomness. Throws
// std::domain_error for unknown posture names (listing the valid ones), an
// incomplete response map, persistence outside [0, 1], or weeks < 1.
PlayTrace simulate(const NormalFormGame& game,
                   const std::array<PersistencePolicy, 2>& policies, int weeks,
                   std::uint64_t seed);

struct OutcomeReport {
  std::array<double, 2> average_payoff{};
  double nash_fraction = 0.0;    // rounds spent at any pure Nash profile
  double pareto_fraction = 0.0;  // rounds at the dilemma's better profile
  bool has_pd_witness = false;
};

// Scores a trace against the stage game's pure equilibria and, when the game
// is a prisoner's dilemma, its Pareto-superior witness profile. Throws
// std::domain_error when the trace does not fit the game.
OutcomeReport compare_outcomes(const PlayTrace& trace,
                               const NormalFormGame& game);

// Writes `round,posture_i,posture_j,payoff_i,payoff_j,cum_i,cum_j` rows,
// postures by name, numbers with up to six fractional digits.
void write_trace_csv(std::ostream& out, const PlayTrace& trace,
                     const NormalFormGame& game);

}  // namespace oligo
