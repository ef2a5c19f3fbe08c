// Acceptance gate: every release-blocking behavior in one binary, one
// pass/fail line each. Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oligo/format.hpp"
#include "oligo/io.hpp"
#include "oligo/kinked_demand.hpp"
#include "oligo/market_models.hpp"
#include "oligo/metrics.hpp"
#include "oligo/normal_form.hpp"
#include "oligo/repeated_play.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <typename Fn>
void criterion(int index, const std::string& label, Fn&& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::printf("criterion %2d  %-52s %s  (%.1f ms)\n", index, label.c_str(),
              check.ok ? "PASS" : "FAIL", ms);
  if (!check.ok) {
    std::printf("              -> %s\n", check.detail.c_str());
    ++failures;
  }
}

double relative_gap(double actual, double expected) {
  return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

oligo::LinearMarket random_market(std::mt19937& rng, int firms) {
  std::uniform_real_distribution<double> a_dist(20.0, 300.0);
  std::uniform_real_distribution<double> b_dist(0.2, 5.0);
  std::uniform_real_distribution<double> c_dist(0.5, 15.0);
  for (;;) {
    const oligo::LinearMarket market{a_dist(rng), b_dist(rng), c_dist(rng),
                                     firms};
    if (market.intercept - market.marginal_cost * market.slope > 5.0) {
      return market;
    }
  }
}

}  // namespace

int main() {
  criterion(1, "posture-game reproduction (exact integers)", [](Check& c) {
    const auto start = Clock::now();
    const oligo::NormalFormGame game =
        oligo::load_game(fixtures::example_path("table2.game.json"));
    const auto nash = pure_nash(game);
    c.require(nash.size() == 1, "expected exactly one pure equilibrium");
    if (!nash.empty()) {
      c.require(nash[0] == oligo::StrategyProfile{0, 0},
                "equilibrium is not (TPE_A, TPE_A)");
      c.require(game.payoff(nash[0], 0) == 13.0 &&
                    game.payoff(nash[0], 1) == 13.0,
                "equilibrium payoffs are not (13, 13)");
    }
    const oligo::PDVerdict pd = is_prisoners_dilemma(game);
    c.require(pd.is_pd, "dilemma not detected");
    c.require(pd.pareto_superior == oligo::StrategyProfile{2, 2},
              "witness is not (TPE_P, TPE_P)");
    c.require(game.payoff(pd.pareto_superior, 0) == 20.0 &&
                  game.payoff(pd.pareto_superior, 1) == 20.0,
              "witness payoffs are not (20, 20)");
    const auto elim = oligo::iterated_elimination(game);
    c.require(elim.reduced.profile_count() == 1,
              "elimination did not reach a 1x1 game");
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    c.require(ms < 1000.0, "runtime exceeded 1 s");
  });

  criterion(2, "Cournot closed form vs formula and iteration", [](Check& c) {
    const auto start = Clock::now();
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 1000; ++trial) {
      const oligo::LinearMarket market = random_market(rng, 2);
      const oligo::MarketEquilibrium eq = cournot_closed_form(market);
      const double expected =
          (market.intercept - market.marginal_cost * market.slope) / 3.0;
      c.require(relative_gap(eq.per_firm_quantity, expected) <= 1e-12,
                "closed form drifted from (a - cb) / 3");
      const auto iterative = cournot_iterative(as_general(market));
      c.require(std::abs(iterative.equilibrium.per_firm_quantity - expected) <=
                    1e-6,
                "iterative solution disagrees beyond 1e-6");
      if (!c.ok) break;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    c.require(ms < 10000.0, "runtime exceeded 10 s");
  });

  criterion(3, "price decreases toward cost in the firm count", [](Check& c) {
    const oligo::LinearMarket market = fixtures::duopoly();
    std::vector<int> counts;
    for (int n = 1; n <= 200; ++n) counts.push_back(n);
    const auto prices = competitive_limit(market, counts);
    c.require(prices.size() == 200, "expected one price per firm count");
    double previous = 1e300;
    for (const auto& [n, price] : prices) {
      c.require(price < previous, "price sequence is not strictly decreasing");
      previous = price;
      const double premium =
          (market.intercept - market.marginal_cost * market.slope) /
          (market.slope * (n + 1));
      c.require(std::abs(price - market.marginal_cost - premium) <= 1e-9,
                "price premium differs from (a - cb)/(b (N+1))");
    }
    c.require(prices.back().second - market.marginal_cost <= 0.2,
              "p(200) - c exceeds 0.2");
  });

  criterion(4, "Bertrand prices at cost; undercutting gets there",
            [](Check& c) {
              std::mt19937 rng(777);
              for (int trial = 0; trial < 100; ++trial) {
                const oligo::LinearMarket market = random_market(rng, 2);
                const auto eq = bertrand_homogeneous(market, 0.01);
                c.require(eq.price == market.marginal_cost,
                          "equilibrium price is not exactly c");
                std::uniform_real_distribution<double> start_dist(
                    market.marginal_cost, 3.0 * market.marginal_cost);
                const std::array<double, 2> starts{start_dist(rng),
                                                   start_dist(rng)};
                const auto trajectory =
                    bertrand_undercut_dynamics(market, starts, 0.01);
                const auto last = trajectory.back();
                c.require(
                    std::abs(last[0] - market.marginal_cost) <= 0.01 + 1e-9 &&
                        std::abs(last[1] - market.marginal_cost) <=
                            0.01 + 1e-9,
                    "undercutting stopped more than one tick from cost");
                if (!c.ok) break;
              }
            });

  criterion(5, "duopoly profit is 4/9 of monopoly profit", [](Check& c) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
      const oligo::ProfitComparison cmp =
          profit_comparison(random_market(rng, 2));
      c.require(std::abs(cmp.ratio - 4.0 / 9.0) <= 1e-12,
                "profit ratio drifted from 4/9");
      c.require(cmp.less_than_half, "ratio not flagged below one half");
      if (!c.ok) break;
    }
  });

  criterion(6, "kinked demand holds the price inside the MR gap",
            [](Check& c) {
              const oligo::KinkedDemand demand = fixtures::tomato();
              const auto gap = mr_gap(demand);
              c.require(std::abs(gap.mr_lower + 3.0) <= 1e-9 &&
                            std::abs(gap.mr_upper - 25.0 / 6.0) <= 1e-9,
                        "MR gap is not [-3, 25/6]");
              // Sample the admissible (mc >= 0) part of the gap.
              for (double mc = 0.0; mc <= 4.1 + 1e-12; mc += 0.1) {
                const auto decision = optimal_price(demand, mc);
                c.require(decision.rigid && decision.price == 5.0,
                          "price moved off the kink at mc = " + oligo::trim6(mc));
                const auto grid = oracle::kinked_price_grid_search(demand, mc);
                c.require(std::abs(decision.price - grid.price) <= 1e-3 + 1e-9,
                          "grid oracle disagrees inside the gap");
              }
              const auto outside = optimal_price(demand, 4.5);
              c.require(!outside.rigid && outside.price != 5.0,
                        "price stayed rigid for mc = 4.5");
              const auto grid = oracle::kinked_price_grid_search(demand, 4.5);
              c.require(std::abs(outside.price - grid.price) <= 1e-3 + 1e-9,
                        "grid oracle disagrees at mc = 4.5");
            });

  criterion(7, "tomato price cuts: elastic then inelastic", [](Check& c) {
    const auto first = oligo::arc_elasticity(6.0, 10000.0, 5.0, 20000.0);
    c.require(std::abs(first.price_change + 1.0 / 6.0) <= 1e-12,
              "first cut is not a 16.67% price decrease");
    c.require(std::abs(first.elasticity + 6.0) <= 1e-12,
              "first-cut elasticity is not -6");
    const auto second = oligo::arc_elasticity(5.0, 20000.0, 3.0, 25000.0);
    c.require(std::abs(second.elasticity + 0.625) <= 1e-12,
              "second-cut elasticity is not -0.625");
    c.require(std::abs(second.elasticity) < 1.0,
              "second cut is not inelastic");
  });

  criterion(8, "pure Nash matches brute force on 500 games", [](Check& c) {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> player_count(2, 3);
    std::uniform_int_distribution<int> strategy_count(2, 4);
    for (int trial = 0; trial < 500; ++trial) {
      const int players = player_count(rng);
      std::vector<int> counts;
      for (int p = 0; p < players; ++p) counts.push_back(strategy_count(rng));
      const oligo::NormalFormGame game =
          oracle::random_game(rng, players, counts);
      if (pure_nash(game) != oracle::brute_force_pure_nash(game)) {
        c.require(false,
                  "mismatch on trial " + std::to_string(trial));
        break;
      }
    }
  });

  criterion(9, "simulation is deterministic with honest statistics",
            [](Check& c) {
              const oligo::NormalFormGame game =
                  oligo::load_game(fixtures::example_path("table2.game.json"));
              const auto passive = std::array<oligo::PersistencePolicy, 2>{
                  oligo::mirror_policy(game, 0, 1.0, "TPE_P"),
                  oligo::mirror_policy(game, 1, 1.0, "TPE_P")};
              const oligo::PlayTrace frozen = simulate(game, passive, 10, 42);
              c.require(frozen.rounds.back().cumulative ==
                            std::array<double, 2>{200.0, 200.0},
                        "passive cumulative payoffs are not (200, 200)");

              const auto noisy = std::array<oligo::PersistencePolicy, 2>{
                  oligo::mirror_policy(game, 0, 0.9, "TPE_P"),
                  oligo::mirror_policy(game, 1, 0.9, "TPE_P")};
              const int weeks = 10000;
              const oligo::PlayTrace trace =
                  simulate(game, noisy, weeks, 20260814);
              for (int p = 0; p < 2; ++p) {
                long persisted = 0;
                for (std::size_t i = 1; i < trace.rounds.size(); ++i) {
                  if (trace.rounds[i].persisted[p]) ++persisted;
                }
                const double rate =
                    static_cast<double>(persisted) / (weeks - 1);
                c.require(std::abs(rate - 0.9) <= 0.01,
                          "empirical persistence outside 0.9 +/- 0.01");
              }

              std::ostringstream first;
              std::ostringstream second;
              write_trace_csv(first, simulate(game, noisy, 500, 99), game);
              write_trace_csv(second, simulate(game, noisy, 500, 99), game);
              c.require(first.str() == second.str(),
                        "identical seeds produced different CSV bytes");
            });

  criterion(10, "concentration ratios render as 0.90 and 0.80", [](Check& c) {
    const double airline =
        concentration_ratio(oligo::MarketShares{{0.5, 0.4, 0.06, 0.04}}, 2);
    c.require(oligo::fmt6(airline) == "0.900000",
              "airline CR_2 does not format to 0.900000");
    const double grocery =
        concentration_ratio(oligo::MarketShares{{0.45, 0.35, 0.2}}, 2);
    c.require(oligo::fmt6(grocery) == "0.800000",
              "grocery CR_2 does not format to 0.800000");
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
