#pragma once

#include <array>
#include <string>
#include <vector>

namespace oligo {

// One pure-strategy choice per player, as indices into each player's
// strategy set.
using StrategyProfile = std::vector<int>;

// A finite normal-form game: named strategy sets per player and a total
// payoff tensor (one real payoff per player per strategy profile).
//
// Games are immutable after construction and every operation on them is a
// pure function, so values can be shared freely across threads.
class NormalFormGame {
 public:
  // `payoffs` is flat: profiles enumerated with the last player's index
  // varying fastest (lexicographic order), `player_count` values per
  // profile. Throws std::domain_error when an invariant fails: at least two
  // players, non-empty unique player names, non-empty unique strategy names
  // per player, tensor total with all payoffs finite.
  NormalFormGame(std::vector<std::string> player_names,
                 std::vector<std::vector<std::string>> strategy_names,
                 std::vector<double> payoffs);

  // Convenience for two-player games: `row_payoffs` / `col_payoffs` in
  // row-major order.
  static NormalFormGame bimatrix(std::vector<std::string> row_strategies,
                                 std::vector<std::string> col_strategies,
                                 std::vector<double> row_payoffs,
                                 std::vector<double> col_payoffs);

  int player_count() const { return static_cast<int>(strategy_names_.size()); }
  int strategy_count(int player) const;
  const std::string& player_name(int player) const;
  const std::vector<std::string>& strategies(int player) const;
  const std::vector<std::string>& player_names() const { return player_names_; }

  // Index of the named strategy, or -1 when absent.
  int strategy_index(int player, const std::string& name) const;

  // Total number of pure strategy profiles.
  long profile_count() const { return profile_count_; }

  double payoff(const StrategyProfile& profile, int player) const;

  // Unranks a flat profile index (lexicographic order, last player fastest).
  StrategyProfile profile_at(long flat) const;
  long flat_index(const StrategyProfile& profile) const;

  // Throws std::domain_error when an index is out of range.
  void check_profile(const StrategyProfile& profile) const;
  void check_player(int player) const;

 private:
  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> strategy_names_;
  std::vector<double> payoffs_;
  long profile_count_ = 0;
};

// Argmax set of `player`'s payoff over own strategies, holding everyone else
// fixed at `others` (others[player] is ignored). Ties are all included;
// result is sorted ascending.
std::vector<int> best_responses(const NormalFormGame& game, int player,
                                const StrategyProfile& others);

// All pure-strategy Nash equilibria in lexicographic order by strategy
// indices.
std::vector<StrategyProfile> pure_nash(const NormalFormGame& game);

// Strategies of `player` that some other pure strategy beats strictly
// against every opposing profile. Sorted ascending.
std::vector<int> strictly_dominated(const NormalFormGame& game, int player);

struct Elimination {
  int round = 0;   // 1-based elimination round
  int player = 0;
  int strategy = 0;  // index in the original game
  std::string name;
};

struct EliminationResult {
  NormalFormGame reduced;
  std::vector<Elimination> log;
  // Surviving original strategy indices per player.
  std::vector<std::vector<int>> surviving;
};

// Removes strictly dominated strategies round by round until a fixpoint.
// Within a round eliminations are logged by player index then strategy
// index; the fixpoint itself does not depend on order for strict dominance.
EliminationResult iterated_elimination(const NormalFormGame& game);

struct PDVerdict {
  bool is_pd = false;
  // Set when is_pd: the profile of strictly dominant strategies, and a
  // profile paying every player strictly more. When several such profiles
  // exist the one maximizing the smallest per-player gain is reported (ties
  // broken by total gain, then lexicographically).
  StrategyProfile dominant;
  StrategyProfile pareto_superior;
};

// A game is a prisoner's dilemma when every player has a strictly dominant
// strategy and some other profile pays every player strictly more than the
// dominant-strategy profile.
PDVerdict is_prisoners_dilemma(const NormalFormGame& game);

struct MixedEquilibrium {
  // strategy_probs[p][s] is player p's probability on strategy s.
  std::array<std::vector<double>, 2> strategy_probs;
  std::array<double, 2> payoffs{};
};

// Mixed equilibria of a two-player game by support enumeration. Pure
// equilibria appear as singleton-support solutions. Probabilities sum to 1
// within 1e-9 and every reported equilibrium admits no profitable pure
// deviation (tolerance 1e-9); near-duplicates (L-inf < 1e-7) are merged.
// Output is sorted lexicographically by probability vectors.
//
// Throws std::domain_error unless the game has exactly two players, and
// std::length_error when a strategy set exceeds 6 (support enumeration is
// exponential).
std::vector<MixedEquilibrium> mixed_nash_2p(const NormalFormGame& game,
                                            int max_support_size = 6);

}  // namespace oligo
