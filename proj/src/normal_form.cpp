#include "oligo/normal_form.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace oligo {

namespace {

std::string ordinal(int player) { return "player " + std::to_string(player); }

}  // namespace

NormalFormGame::NormalFormGame(
    std::vector<std::string> player_names,
    std::vector<std::vector<std::string>> strategy_names,
    std::vector<double> payoffs)
    : player_names_(std::move(player_names)),
      strategy_names_(std::move(strategy_names)),
      payoffs_(std::move(payoffs)) {
  const int n = static_cast<int>(strategy_names_.size());
  if (n < 2) {
    throw std::domain_error("game must have at least 2 players");
  }
  if (player_names_.size() != strategy_names_.size()) {
    throw std::domain_error("one name per player required");
  }
  std::set<std::string> players_seen;
  for (const auto& name : player_names_) {
    if (name.empty()) {
      throw std::domain_error("player names must be non-empty");
    }
    if (!players_seen.insert(name).second) {
      throw std::domain_error("duplicate player name \"" + name + "\"");
    }
  }
  profile_count_ = 1;
  for (int p = 0; p < n; ++p) {
    const auto& names = strategy_names_[p];
    if (names.empty()) {
      throw std::domain_error(ordinal(p) + " has no strategies");
    }
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) {
        throw std::domain_error(ordinal(p) + " has an empty strategy name");
      }
      if (!seen.insert(name).second) {
        throw std::domain_error(ordinal(p) + " has duplicate strategy \"" +
                                name + "\"");
      }
    }
    profile_count_ *= static_cast<long>(names.size());
  }
  if (static_cast<long>(payoffs_.size()) != profile_count_ * n) {
    throw std::domain_error(
        "payoff tensor must hold " + std::to_string(profile_count_ * n) +
        " values, got " + std::to_string(payoffs_.size()));
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) {
      throw std::domain_error("payoffs must be finite");
    }
  }
}

NormalFormGame NormalFormGame::bimatrix(std::vector<std::string> row_strategies,
                                        std::vector<std::string> col_strategies,
                                        std::vector<double> row_payoffs,
                                        std::vector<double> col_payoffs) {
  if (row_payoffs.size() != col_payoffs.size()) {
    throw std::domain_error("bimatrix payoff lists must have equal length");
  }
  std::vector<double> flat;
  flat.reserve(row_payoffs.size() * 2);
  for (std::size_t k = 0; k < row_payoffs.size(); ++k) {
    flat.push_back(row_payoffs[k]);
    flat.push_back(col_payoffs[k]);
  }
  return NormalFormGame({"1", "2"},
                        {std::move(row_strategies), std::move(col_strategies)},
                        std::move(flat));
}

int NormalFormGame::strategy_count(int player) const {
  check_player(player);
  return static_cast<int>(strategy_names_[player].size());
}

const std::string& NormalFormGame::player_name(int player) const {
  check_player(player);
  return player_names_[player];
}

const std::vector<std::string>& NormalFormGame::strategies(int player) const {
  check_player(player);
  return strategy_names_[player];
}

int NormalFormGame::strategy_index(int player, const std::string& name) const {
  check_player(player);
  const auto& names = strategy_names_[player];
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

void NormalFormGame::check_player(int player) const {
  if (player < 0 || player >= player_count()) {
    throw std::domain_error("player index " + std::to_string(player) +
                            " out of range");
  }
}

void NormalFormGame::check_profile(const StrategyProfile& profile) const {
  if (static_cast<int>(profile.size()) != player_count()) {
    throw std::domain_error("profile must name one strategy per player");
  }
  for (int p = 0; p < player_count(); ++p) {
    if (profile[p] < 0 ||
        profile[p] >= static_cast<int>(strategy_names_[p].size())) {
      throw std::domain_error("strategy index " + std::to_string(profile[p]) +
                              " out of range for " + ordinal(p));
    }
  }
}

long NormalFormGame::flat_index(const StrategyProfile& profile) const {
  check_profile(profile);
  long flat = 0;
  for (int p = 0; p < player_count(); ++p) {
    flat = flat * static_cast<long>(strategy_names_[p].size()) + profile[p];
  }
  return flat;
}

StrategyProfile NormalFormGame::profile_at(long flat) const {
  StrategyProfile profile(player_count());
  for (int p = player_count() - 1; p >= 0; --p) {
    const long size = static_cast<long>(strategy_names_[p].size());
    profile[p] = static_cast<int>(flat % size);
    flat /= size;
  }
  return profile;
}

double NormalFormGame::payoff(const StrategyProfile& profile,
                              int player) const {
  check_player(player);
  return payoffs_[flat_index(profile) * player_count() + player];
}

namespace {

// True when `better` pays `player` strictly more than `worse` against every
// combination of opposing strategies drawn from `pools`.
bool strictly_dominates(const NormalFormGame& game, int player, int better,
                        int worse, const std::vector<std::vector<int>>& pools) {
  const int n = game.player_count();
  std::vector<int> pos(n, 0);
  StrategyProfile profile(n, 0);
  while (true) {
    for (int p = 0; p < n; ++p) profile[p] = pools[p][pos[p]];
    profile[player] = better;
    const double hi = game.payoff(profile, player);
    profile[player] = worse;
    const double lo = game.payoff(profile, player);
    if (!(hi > lo)) return false;
    int p = n - 1;
    while (p >= 0) {
      if (p == player) {
        --p;
        continue;
      }
      if (++pos[p] < static_cast<int>(pools[p].size())) break;
      pos[p] = 0;
      --p;
    }
    if (p < 0) return true;
  }
}

std::vector<std::vector<int>> full_pools(const NormalFormGame& game) {
  std::vector<std::vector<int>> pools(game.player_count());
  for (int p = 0; p < game.player_count(); ++p) {
    pools[p].resize(game.strategy_count(p));
    for (int s = 0; s < game.strategy_count(p); ++s) pools[p][s] = s;
  }
  return pools;
}

// Strategies of `player` within pools[player] that some other pooled
// strategy strictly dominates.
std::vector<int> dominated_within(const NormalFormGame& game, int player,
                                  const std::vector<std::vector<int>>& pools) {
  std::vector<int> out;
  for (int worse : pools[player]) {
    for (int better : pools[player]) {
      if (better == worse) continue;
      if (strictly_dominates(game, player, better, worse, pools)) {
        out.push_back(worse);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<int> best_responses(const NormalFormGame& game, int player,
                                const StrategyProfile& others) {
  game.check_player(player);
  StrategyProfile profile = others;
  if (static_cast<int>(profile.size()) != game.player_count()) {
    throw std::domain_error("profile must name one strategy per player");
  }
  profile[player] = 0;
  game.check_profile(profile);

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> argmax;
  for (int s = 0; s < game.strategy_count(player); ++s) {
    profile[player] = s;
    const double v = game.payoff(profile, player);
    if (v > best) {
      best = v;
      argmax.assign(1, s);
    } else if (v == best) {
      argmax.push_back(s);
    }
  }
  return argmax;
}

std::vector<StrategyProfile> pure_nash(const NormalFormGame& game) {
  std::vector<StrategyProfile> out;
  for (long flat = 0; flat < game.profile_count(); ++flat) {
    const StrategyProfile profile = game.profile_at(flat);
    bool stable = true;
    for (int p = 0; p < game.player_count() && stable; ++p) {
      const double current = game.payoff(profile, p);
      StrategyProfile deviated = profile;
      for (int s = 0; s < game.strategy_count(p); ++s) {
        deviated[p] = s;
        if (game.payoff(deviated, p) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(profile);
  }
  return out;
}

std::vector<int> strictly_dominated(const NormalFormGame& game, int player) {
  game.check_player(player);
  return dominated_within(game, player, full_pools(game));
}

EliminationResult iterated_elimination(const NormalFormGame& game) {
  std::vector<std::vector<int>> pools = full_pools(game);
  std::vector<Elimination> log;
  for (int round = 1;; ++round) {
    std::vector<std::vector<int>> doomed(game.player_count());
    bool any = false;
    for (int p = 0; p < game.player_count(); ++p) {
      doomed[p] = dominated_within(game, p, pools);
      any = any || !doomed[p].empty();
    }
    if (!any) break;
    for (int p = 0; p < game.player_count(); ++p) {
      for (int s : doomed[p]) {
        log.push_back({round, p, s, game.strategies(p)[s]});
      }
      std::vector<int> kept;
      for (int s : pools[p]) {
        if (std::find(doomed[p].begin(), doomed[p].end(), s) ==
            doomed[p].end()) {
          kept.push_back(s);
        }
      }
      pools[p] = std::move(kept);
    }
  }

  // Slice the surviving sub-tensor into a fresh game.
  std::vector<std::vector<std::string>> names(game.player_count());
  for (int p = 0; p < game.player_count(); ++p) {
    for (int s : pools[p]) names[p].push_back(game.strategies(p)[s]);
  }
  long reduced_profiles = 1;
  for (const auto& pool : pools) reduced_profiles *= static_cast<long>(pool.size());
  std::vector<double> payoffs;
  payoffs.reserve(reduced_profiles * game.player_count());
  std::vector<int> pos(game.player_count(), 0);
  StrategyProfile profile(game.player_count());
  for (long k = 0; k < reduced_profiles; ++k) {
    for (int p = 0; p < game.player_count(); ++p) profile[p] = pools[p][pos[p]];
    for (int p = 0; p < game.player_count(); ++p) {
      payoffs.push_back(game.payoff(profile, p));
    }
    for (int p = game.player_count() - 1; p >= 0; --p) {
      if (++pos[p] < static_cast<int>(pools[p].size())) break;
      pos[p] = 0;
    }
  }
  NormalFormGame reduced(game.player_names(), std::move(names),
                         std::move(payoffs));
  return {std::move(reduced), std::move(log), std::move(pools)};
}

PDVerdict is_prisoners_dilemma(const NormalFormGame& game) {
  PDVerdict verdict;
  const auto pools = full_pools(game);
  StrategyProfile dominant(game.player_count());
  for (int p = 0; p < game.player_count(); ++p) {
    int found = -1;
    for (int d = 0; d < game.strategy_count(p) && found < 0; ++d) {
      bool dominates_all = true;
      for (int s = 0; s < game.strategy_count(p); ++s) {
        if (s == d) continue;
        if (!strictly_dominates(game, p, d, s, pools)) {
          dominates_all = false;
          break;
        }
      }
      if (dominates_all) found = d;
    }
    if (found < 0) return verdict;
    dominant[p] = found;
  }

  std::vector<double> base(game.player_count());
  for (int p = 0; p < game.player_count(); ++p) {
    base[p] = game.payoff(dominant, p);
  }
  // Among profiles paying everyone strictly more, report the one with the
  // largest smallest gain (ties: total gain, then lexicographic order).
  double best_min = -std::numeric_limits<double>::infinity();
  double best_total = -std::numeric_limits<double>::infinity();
  for (long flat = 0; flat < game.profile_count(); ++flat) {
    const StrategyProfile profile = game.profile_at(flat);
    if (profile == dominant) continue;
    double min_gain = std::numeric_limits<double>::infinity();
    double total_gain = 0.0;
    bool all_better = true;
    for (int p = 0; p < game.player_count(); ++p) {
      const double gain = game.payoff(profile, p) - base[p];
      if (!(gain > 0)) {
        all_better = false;
        break;
      }
      min_gain = std::min(min_gain, gain);
      total_gain += gain;
    }
    if (!all_better) continue;
    if (min_gain > best_min ||
        (min_gain == best_min && total_gain > best_total)) {
      best_min = min_gain;
      best_total = total_gain;
      verdict.pareto_superior = profile;
      verdict.is_pd = true;
    }
  }
  if (verdict.is_pd) verdict.dominant = std::move(dominant);
  return verdict;
}

namespace {

constexpr int kMaxMixedStrategies = 6;

std::vector<int> mask_to_indices(unsigned mask) {
  std::vector<int> out;
  for (int s = 0; mask != 0; ++s, mask >>= 1) {
    if (mask & 1u) out.push_back(s);
  }
  return out;
}

// Solves the indifference system for one side of a candidate support pair:
// the opponent's probabilities (over `opp_support`) that make every strategy
// in `own_support` earn the same value. Returns false when the system is
// inconsistent or yields an invalid distribution.
bool solve_indifference(const Eigen::MatrixXd& payoff,
                        const std::vector<int>& own_support,
                        const std::vector<int>& opp_support, double tol,
                        std::vector<double>* probs_out) {
  const int rows = static_cast<int>(own_support.size()) + 1;
  const int cols = static_cast<int>(opp_support.size()) + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      m(r, c) = payoff(own_support[r], opp_support[c]);
    }
    m(r, cols - 1) = -1.0;  // common value v
  }
  for (int c = 0; c + 1 < cols; ++c) m(rows - 1, c) = 1.0;
  rhs(rows - 1) = 1.0;

  const Eigen::VectorXd z = m.colPivHouseholderQr().solve(rhs);
  if ((m * z - rhs).lpNorm<Eigen::Infinity>() > tol) return false;

  std::vector<double>& probs = *probs_out;
  std::fill(probs.begin(), probs.end(), 0.0);
  double sum = 0.0;
  for (int c = 0; c + 1 < cols; ++c) {
    double p = z(c);
    if (p < -1e-9) return false;
    p = std::max(p, 0.0);
    probs[opp_support[c]] = p;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-7 || sum <= 0.0) return false;
  for (double& p : probs) p /= sum;
  return true;
}

}  // namespace

std::vector<MixedEquilibrium> mixed_nash_2p(const NormalFormGame& game,
                                            int max_support_size) {
  if (game.player_count() != 2) {
    throw std::domain_error("mixed_nash_2p requires a 2-player game");
  }
  if (max_support_size < 1) {
    throw std::domain_error("max_support_size must be >= 1");
  }
  const int n0 = game.strategy_count(0);
  const int n1 = game.strategy_count(1);
  if (n0 > kMaxMixedStrategies || n1 > kMaxMixedStrategies) {
    throw std::length_error(
        "mixed_nash_2p supports at most " +
        std::to_string(kMaxMixedStrategies) +
        " strategies per player (support enumeration is exponential)");
  }

  Eigen::MatrixXd a(n0, n1);  // player 0's payoffs
  Eigen::MatrixXd b(n1, n0);  // player 1's payoffs, transposed
  double scale = 1.0;
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      a(i, j) = game.payoff({i, j}, 0);
      b(j, i) = game.payoff({i, j}, 1);
      scale = std::max({scale, std::abs(a(i, j)), std::abs(b(j, i))});
    }
  }
  const double tol = 1e-9 * scale;

  std::vector<MixedEquilibrium> found;
  std::vector<double> x(n0), y(n1);
  for (unsigned mask0 = 1; mask0 < (1u << n0); ++mask0) {
    if (std::popcount(mask0) > max_support_size) continue;
    const std::vector<int> support0 = mask_to_indices(mask0);
    for (unsigned mask1 = 1; mask1 < (1u << n1); ++mask1) {
      if (std::popcount(mask1) > max_support_size) continue;
      const std::vector<int> support1 = mask_to_indices(mask1);

      if (!solve_indifference(a, support0, support1, tol, &y)) continue;
      if (!solve_indifference(b, support1, support0, tol, &x)) continue;

      // Keep only genuine equilibria: each player's mix must already earn
      // the best payoff available against the other's mix.
      Eigen::Map<const Eigen::VectorXd> xv(x.data(), n0);
      Eigen::Map<const Eigen::VectorXd> yv(y.data(), n1);
      const Eigen::VectorXd u0 = a * yv;   // per-strategy payoffs, player 0
      const Eigen::VectorXd u1 = b * xv;   // per-strategy payoffs, player 1
      const double v0 = xv.dot(u0);
      const double v1 = yv.dot(u1);
      if (u0.maxCoeff() > v0 + tol || u1.maxCoeff() > v1 + tol) continue;

      MixedEquilibrium eq;
      eq.strategy_probs = {x, y};
      eq.payoffs = {v0, v1};
      bool duplicate = false;
      for (const auto& kept : found) {
        double dist = 0.0;
        for (int i = 0; i < n0; ++i) {
          dist = std::max(dist, std::abs(kept.strategy_probs[0][i] - x[i]));
        }
        for (int j = 0; j < n1; ++j) {
          dist = std::max(dist, std::abs(kept.strategy_probs[1][j] - y[j]));
        }
        if (dist < 1e-7) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) found.push_back(std::move(eq));
    }
  }

  std::sort(found.begin(), found.end(),
            [](const MixedEquilibrium& lhs, const MixedEquilibrium& rhs) {
              if (lhs.strategy_probs[0] != rhs.strategy_probs[0]) {
                return lhs.strategy_probs[0] < rhs.strategy_probs[0];
              }
              return lhs.strategy_probs[1] < rhs.strategy_probs[1];
            });
  return found;
}

}  // namespace oligo
