#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace oligo {

// Linear-demand market: quantity demanded Q(p) = intercept - slope * p,
// every firm produces at the same constant marginal cost. Inverse demand is
// P(Q) = (intercept - Q) / slope.
struct LinearMarket {
  double intercept = 0.0;      // demand at price zero ("a")
  double slope = 0.0;          // quantity lost per unit of price ("b"), > 0
  double marginal_cost = 0.0;  // constant per-unit cost ("c"), >= 0
  int firms = 1;

  // Throws std::domain_error naming the violated condition: slope > 0,
  // marginal_cost >= 0, firms >= 1, and intercept - marginal_cost * slope > 0
  // (positive output at marginal-cost pricing).
  void validate() const;

  double demand(double price) const;          // clamped at zero
  double inverse_demand(double total) const;  // P(Q)
  double choke_price() const { return intercept / slope; }
};

enum class Regime { cournot, bertrand, monopoly, competitive };
enum class SolveMethod { closed_form, iterative };

std::string to_string(Regime regime);
std::string to_string(SolveMethod method);

// Symmetric market outcome. Invariants: total_quantity = firms *
// per_firm_quantity, per_firm_profit = per_firm_quantity * (price -
// marginal cost), price >= marginal cost.
struct MarketEquilibrium {
  Regime regime = Regime::cournot;
  SolveMethod method = SolveMethod::closed_form;
  int firms = 1;
  double per_firm_quantity = 0.0;
  double total_quantity = 0.0;
  double price = 0.0;
  double per_firm_profit = 0.0;
};

// Market described by callables instead of linear coefficients. Inverse
// demand must be continuous and strictly decreasing where positive on
// [0, quantity_cap]; marginal_cost continuous and >= 0. quantity_cap bounds
// each firm's choice and should price at or below cost.
struct GeneralMarket {
  std::function<double(double)> inverse_demand;
  std::function<double(double)> marginal_cost;
  int firms = 1;
  double quantity_cap = 0.0;

  void validate() const;
};

// Wraps a linear market for the iterative solver.
GeneralMarket as_general(const LinearMarket& market);

// Quantity competition in closed form: per-firm quantity
// (a - c*b) / (N + 1), price (a + N*c*b) / (b*(N+1)), per-firm profit
// (a - c*b)^2 / (b*(N+1)^2). A single firm is labeled a monopoly.
MarketEquilibrium cournot_closed_form(const LinearMarket& market);

struct IterativeOptions {
  std::vector<double> initial_quantities;  // empty = all zero
  double tolerance = 1e-10;
  int max_iterations = 10000;
  double damping = 0.5;  // update weight on the fresh best response
};

struct IterativeResult {
  MarketEquilibrium equilibrium;
  int iterations = 0;
  // quantity_log[k] is the per-firm quantity vector after iteration k;
  // entry 0 is the initial point.
  std::vector<std::vector<double>> quantity_log;
};

// Damped simultaneous best-response iteration. Each firm's best response
// solves its first-order condition P(Q) + P'(Q) q - MC(q) = 0 on
// [0, quantity_cap] by bisection (corner at zero when the condition is
// already negative there); quantities move by `damping` toward the fresh
// response each step until the largest per-firm change is within tolerance.
//
// Throws BestResponseConvergenceError (carrying the log) when the budget
// runs out, std::domain_error when inverse demand fails a sampled
// decreasing-where-positive check or an option is invalid.
IterativeResult cournot_iterative(const GeneralMarket& market,
                                  const IterativeOptions& options = {});

// Price competition with a homogeneous good: both firms price at marginal
// cost, demand splits equally, profits are zero. `tick` is the currency
// granularity used by deviation checks, not by the returned price.
// Throws std::domain_error unless firms >= 2 and tick > 0.
MarketEquilibrium bertrand_homogeneous(const LinearMarket& market, double tick);

// Profit of one firm posting `own_price` against `rival_price`: the lower
// price captures the whole market, equal prices split it evenly.
double bertrand_profit(const LinearMarket& market, double own_price,
                       double rival_price);

// Alternating best responses on the price grid {c, c+tick, c+2*tick, ...}.
// The responder moves only when some grid price strictly beats its current
// profit. Returns the price trajectory starting with the initial prices;
// both final prices end within one tick of marginal cost.
// Throws std::domain_error when a start price is below cost or tick <= 0,
// UndercutConvergenceError (carrying the trajectory) past max_rounds.
std::vector<std::array<double, 2>> bertrand_undercut_dynamics(
    const LinearMarket& market, std::array<double, 2> start_prices,
    double tick, int max_rounds = 100000);

// Cournot closed-form price for each firm count, sorted and deduplicated by
// N. The price premium over cost is (a - c*b) / (b*(N+1)), so the sequence
// decreases toward marginal cost as N grows.
std::vector<std::pair<int, double>> competitive_limit(
    const LinearMarket& market, std::vector<int> firm_counts);

struct ProfitComparison {
  double monopoly_profit = 0.0;
  double cournot_per_firm_profit = 0.0;
  double ratio = 0.0;  // 4/9 for every valid linear market
  bool less_than_half = false;
};

// Per-firm duopoly profit against the monopoly benchmark on the same market.
ProfitComparison profit_comparison(const LinearMarket& market);

}  // namespace oligo
