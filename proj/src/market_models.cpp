#include "oligo/market_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oligo/errors.hpp"

namespace oligo {

void LinearMarket::validate() const {
  if (!(slope > 0.0)) {
    throw std::domain_error("demand slope b must be > 0");
  }
  if (!(marginal_cost >= 0.0)) {
    throw std::domain_error("marginal cost c must be >= 0");
  }
  if (firms < 1) {
    throw std::domain_error("firm count must be >= 1");
  }
  if (!(intercept - marginal_cost * slope > 0.0)) {
    throw std::domain_error(
        "a - c*b must be > 0 (no positive output at marginal-cost pricing)");
  }
}

double LinearMarket::demand(double price) const {
  return std::max(0.0, intercept - slope * price);
}

double LinearMarket::inverse_demand(double total) const {
  return (intercept - total) / slope;
}

void GeneralMarket::validate() const {
  if (!inverse_demand || !marginal_cost) {
    throw std::domain_error("inverse demand and marginal cost are required");
  }
  if (firms < 1) {
    throw std::domain_error("firm count must be >= 1");
  }
  if (!(quantity_cap > 0.0)) {
    throw std::domain_error("quantity cap must be > 0");
  }
}

GeneralMarket as_general(const LinearMarket& market) {
  market.validate();
  GeneralMarket general;
  general.inverse_demand = [market](double total) {
    return market.inverse_demand(total);
  };
  general.marginal_cost = [cost = market.marginal_cost](double) {
    return cost;
  };
  general.firms = market.firms;
  general.quantity_cap = market.intercept;  // price zero at the cap
  return general;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::cournot: return "cournot";
    case Regime::bertrand: return "bertrand";
    case Regime::monopoly: return "monopoly";
    case Regime::competitive: return "competitive";
  }
  return "?";
}

std::string to_string(SolveMethod method) {
  return method == SolveMethod::closed_form ? "closed_form" : "iterative";
}

MarketEquilibrium cournot_closed_form(const LinearMarket& market) {
  market.validate();
  const double margin = market.intercept - market.marginal_cost * market.slope;
  const double n_plus_1 = market.firms + 1.0;
  MarketEquilibrium eq;
  eq.regime = market.firms == 1 ? Regime::monopoly : Regime::cournot;
  eq.method = SolveMethod::closed_form;
  eq.firms = market.firms;
  eq.per_firm_quantity = margin / n_plus_1;
  eq.total_quantity = market.firms * eq.per_firm_quantity;
  eq.price = (market.intercept + market.firms * market.marginal_cost *
                                     market.slope) /
             (market.slope * n_plus_1);
  eq.per_firm_profit = margin * margin / (market.slope * n_plus_1 * n_plus_1);
  return eq;
}

namespace {

// First-order condition for one firm taking the others' total as given.
// P'(Q) comes from a central difference; exact for linear demand.
double foc(const GeneralMarket& market, double others_total, double quantity) {
  const double total = others_total + quantity;
  const double h = 1e-6 * std::max(1.0, market.quantity_cap);
  const double slope =
      (market.inverse_demand(total + h) - market.inverse_demand(total - h)) /
      (2.0 * h);
  return market.inverse_demand(total) + slope * quantity -
         market.marginal_cost(quantity);
}

double best_response(const GeneralMarket& market, double others_total) {
  if (foc(market, others_total, 0.0) <= 0.0) return 0.0;
  double lo = 0.0;
  double hi = market.quantity_cap;
  if (foc(market, others_total, hi) >= 0.0) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (foc(market, others_total, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13 * std::max(1.0, market.quantity_cap)) break;
  }
  return 0.5 * (lo + hi);
}

void check_decreasing(const GeneralMarket& market) {
  constexpr int kSamples = 64;
  double prev = market.inverse_demand(0.0);
  for (int k = 1; k <= kSamples; ++k) {
    const double q = market.quantity_cap * k / kSamples;
    const double p = market.inverse_demand(q);
    if (prev > 0.0 && p >= prev) {
      throw std::domain_error(
          "inverse demand is not strictly decreasing where positive");
    }
    prev = p;
  }
}

}  // namespace

IterativeResult cournot_iterative(const GeneralMarket& market,
                                  const IterativeOptions& options) {
  market.validate();
  check_decreasing(market);
  if (!(options.tolerance > 0.0)) {
    throw std::domain_error("tolerance must be > 0");
  }
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw std::domain_error("damping must be in (0, 1]");
  }

  const int n = market.firms;
  std::vector<double> q = options.initial_quantities;
  if (q.empty()) {
    q.assign(n, 0.0);
  } else if (static_cast<int>(q.size()) != n) {
    throw std::domain_error("initial quantities must list one value per firm");
  }
  for (double qi : q) {
    if (qi < 0.0 || qi > market.quantity_cap) {
      throw std::domain_error("initial quantities must lie in [0, cap]");
    }
  }

  std::vector<std::vector<double>> log;
  log.push_back(q);
  std::vector<double> next(n);
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const double total = std::accumulate(q.begin(), q.end(), 0.0);
    double max_change = 0.0;
    for (int i = 0; i < n; ++i) {
      const double response = best_response(market, total - q[i]);
      next[i] = (1.0 - options.damping) * q[i] + options.damping * response;
      max_change = std::max(max_change, std::abs(next[i] - q[i]));
    }
    q = next;
    log.push_back(q);
    if (max_change <= options.tolerance) {
      const double sum = std::accumulate(q.begin(), q.end(), 0.0);
      MarketEquilibrium eq;
      eq.regime = n == 1 ? Regime::monopoly : Regime::cournot;
      eq.method = SolveMethod::iterative;
      eq.firms = n;
      eq.per_firm_quantity = sum / n;
      eq.total_quantity = sum;
      eq.price = market.inverse_demand(sum);
      eq.per_firm_profit =
          eq.per_firm_quantity *
          (eq.price - market.marginal_cost(eq.per_firm_quantity));
      return {eq, iter, std::move(log)};
    }
  }
  throw BestResponseConvergenceError(
      "best-response iteration did not converge within " +
          std::to_string(options.max_iterations) + " iterations",
      std::move(log));
}

MarketEquilibrium bertrand_homogeneous(const LinearMarket& market,
                                       double tick) {
  market.validate();
  if (market.firms < 2) {
    throw std::domain_error("Bertrand requires >= 2 firms");
  }
  if (!(tick > 0.0)) {
    throw std::domain_error("tick must be > 0");
  }
  MarketEquilibrium eq;
  eq.regime = Regime::bertrand;
  eq.method = SolveMethod::closed_form;
  eq.firms = market.firms;
  eq.price = market.marginal_cost;
  eq.total_quantity = market.intercept - market.slope * market.marginal_cost;
  eq.per_firm_quantity = eq.total_quantity / market.firms;
  eq.per_firm_profit = 0.0;
  return eq;
}

double bertrand_profit(const LinearMarket& market, double own_price,
                       double rival_price) {
  double share = 0.0;
  if (own_price < rival_price) {
    share = market.demand(own_price);
  } else if (own_price == rival_price) {
    share = market.demand(own_price) / 2.0;
  }
  return (own_price - market.marginal_cost) * share;
}

std::vector<std::array<double, 2>> bertrand_undercut_dynamics(
    const LinearMarket& market, std::array<double, 2> start_prices,
    double tick, int max_rounds) {
  market.validate();
  if (!(tick > 0.0)) {
    throw std::domain_error("tick must be > 0");
  }
  for (double p : start_prices) {
    if (p < market.marginal_cost) {
      throw std::domain_error("start prices must be >= marginal cost");
    }
  }

  // Grid prices are indexed from marginal cost so the equilibrium is
  // on-grid. Profit with the whole market, (g - c) * demand(g), is concave
  // in g, so the best strict undercut sits at the grid point nearest the
  // monopoly price clamped below the rival; only that neighborhood plus the
  // exact-match split needs evaluating.
  const double cost = market.marginal_cost;
  const double monopoly_price =
      (market.intercept + market.slope * cost) / (2.0 * market.slope);
  const auto grid_price = [&](long k) {
    return cost + static_cast<double>(k) * tick;
  };

  std::vector<std::array<double, 2>> trajectory;
  trajectory.push_back(start_prices);
  std::array<double, 2> prices = start_prices;
  int idle = 0;
  for (int round = 1; idle < 2; ++round) {
    if (round > max_rounds) {
      throw UndercutConvergenceError(
          "undercut dynamics did not settle within " +
              std::to_string(max_rounds) + " rounds",
          std::move(trajectory));
    }
    const int mover = (round - 1) % 2;
    const double rival = prices[1 - mover];
    const double current = bertrand_profit(market, prices[mover], rival);

    long k_below = static_cast<long>(std::floor((rival - cost) / tick));
    while (k_below >= 0 && grid_price(k_below) >= rival) --k_below;
    const long k_peak =
        static_cast<long>(std::llround((monopoly_price - cost) / tick));

    std::vector<long> candidates;
    for (long k : {k_peak - 1, k_peak, k_peak + 1, k_below}) {
      const long clamped = std::clamp(k, 0L, k_below);
      if (k_below >= 0 &&
          std::find(candidates.begin(), candidates.end(), clamped) ==
              candidates.end()) {
        candidates.push_back(clamped);
      }
    }
    if (k_below + 1 >= 0 && grid_price(k_below + 1) == rival) {
      candidates.push_back(k_below + 1);  // match and split
    }
    std::sort(candidates.begin(), candidates.end());

    double best = current;
    double best_price = prices[mover];
    for (long k : candidates) {
      const double candidate = grid_price(k);
      const double profit = bertrand_profit(market, candidate, rival);
      if (profit > best) {
        best = profit;
        best_price = candidate;
      }
    }
    if (best_price != prices[mover]) {
      prices[mover] = best_price;
      trajectory.push_back(prices);
      idle = 0;
    } else {
      ++idle;
    }
  }
  return trajectory;
}

std::vector<std::pair<int, double>> competitive_limit(
    const LinearMarket& market, std::vector<int> firm_counts) {
  std::sort(firm_counts.begin(), firm_counts.end());
  firm_counts.erase(std::unique(firm_counts.begin(), firm_counts.end()),
                    firm_counts.end());
  std::vector<std::pair<int, double>> out;
  out.reserve(firm_counts.size());
  for (int n : firm_counts) {
    LinearMarket m = market;
    m.firms = n;
    out.emplace_back(n, cournot_closed_form(m).price);
  }
  return out;
}

ProfitComparison profit_comparison(const LinearMarket& market) {
  LinearMarket mono = market;
  mono.firms = 1;
  LinearMarket duo = market;
  duo.firms = 2;
  ProfitComparison report;
  report.monopoly_profit = cournot_closed_form(mono).per_firm_profit;
  report.cournot_per_firm_profit = cournot_closed_form(duo).per_firm_profit;
  report.ratio = report.cournot_per_firm_profit / report.monopoly_profit;
  report.less_than_half = report.ratio < 0.5;
  return report;
}

}  // namespace oligo
