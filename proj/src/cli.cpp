#include "oligo/cli.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oligo/errors.hpp"
#include "oligo/format.hpp"
#include "oligo/io.hpp"
#include "oligo/kinked_demand.hpp"
#include "oligo/market_models.hpp"
#include "oligo/metrics.hpp"
#include "oligo/normal_form.hpp"
#include "oligo/repeated_play.hpp"

namespace oligo::cli {

namespace {

using nlohmann::json;

// JSON payloads round to the same six fractional digits the text report
// shows, so both formats stay byte-stable and agree with each other.
double r6(double value) {
  const double rounded = std::round(value * 1e6) / 1e6;
  return rounded == 0.0 ? 0.0 : rounded;
}

json r6(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(r6(v));
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      tokens.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      current += ch;
    }
  }
  tokens.push_back(current);
  return tokens;
}

double parse_double(const std::string& token, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(flag + ": not a number: \"" + token + "\"");
  }
}

// Shares accept either fractions ("0.9") or percentages ("90%"); both
// normalize to the fractional unit the library uses.
std::vector<double> parse_shares(const std::string& text) {
  std::vector<double> shares;
  for (const std::string& token : split_list(text)) {
    if (!token.empty() && token.back() == '%') {
      shares.push_back(
          parse_double(token.substr(0, token.size() - 1), "--shares") / 100.0);
    } else {
      shares.push_back(parse_double(token, "--shares"));
    }
  }
  return shares;
}

std::vector<int> parse_firm_counts(const std::string& text) {
  std::vector<int> counts;
  for (const std::string& token : split_list(text)) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      counts.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("--firms-list: not an integer: \"" + token +
                                  "\"");
    }
  }
  return counts;
}

std::string profile_names(const NormalFormGame& game,
                          const StrategyProfile& profile) {
  std::string out = "(";
  for (int p = 0; p < game.player_count(); ++p) {
    if (p > 0) out += ',';
    out += game.strategies(p)[profile[p]];
  }
  return out + ")";
}

json profile_json(const NormalFormGame& game, const StrategyProfile& profile) {
  json out = json::array();
  for (int p = 0; p < game.player_count(); ++p) {
    out.push_back(game.strategies(p)[profile[p]]);
  }
  return out;
}

std::string payoffs_at(const NormalFormGame& game,
                       const StrategyProfile& profile) {
  std::string out = "(";
  for (int p = 0; p < game.player_count(); ++p) {
    if (p > 0) out += ", ";
    out += fmt6(game.payoff(profile, p));
  }
  return out + ")";
}

json payoffs_json(const NormalFormGame& game, const StrategyProfile& profile) {
  json out = json::array();
  for (int p = 0; p < game.player_count(); ++p) {
    out.push_back(r6(game.payoff(profile, p)));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out;
}

std::string pair6(double first, double second) {
  return "(" + fmt6(first) + ", " + fmt6(second) + ")";
}

void run_solve(const std::string& path, bool mixed, const std::string& format,
               std::ostream& out) {
  const NormalFormGame game = load_game(path);
  const std::vector<StrategyProfile> nash = pure_nash(game);
  const EliminationResult elim = iterated_elimination(game);
  const PDVerdict pd = is_prisoners_dilemma(game);

  std::vector<MixedEquilibrium> mixed_eq;
  if (mixed) mixed_eq = mixed_nash_2p(game);

  int rounds = 0;
  for (const Elimination& entry : elim.log) rounds = std::max(rounds, entry.round);

  if (format == "json") {
    json doc;
    doc["players"] = game.player_names();
    doc["pure_nash"] = json::array();
    for (const StrategyProfile& profile : nash) {
      doc["pure_nash"].push_back({{"profile", profile_json(game, profile)},
                                  {"payoffs", payoffs_json(game, profile)}});
    }
    doc["strictly_dominated"] = json::object();
    for (int p = 0; p < game.player_count(); ++p) {
      json names = json::array();
      for (int s : strictly_dominated(game, p)) {
        names.push_back(game.strategies(p)[s]);
      }
      doc["strictly_dominated"][game.player_name(p)] = std::move(names);
    }
    json eliminated = json::array();
    for (const Elimination& entry : elim.log) {
      eliminated.push_back({{"round", entry.round},
                            {"player", game.player_name(entry.player)},
                            {"strategy", entry.name}});
    }
    json surviving = json::array();
    for (int p = 0; p < game.player_count(); ++p) {
      json names = json::array();
      for (int s : elim.surviving[p]) names.push_back(game.strategies(p)[s]);
      surviving.push_back(std::move(names));
    }
    doc["iterated_elimination"] = {{"rounds", rounds},
                                   {"eliminated", std::move(eliminated)},
                                   {"surviving", std::move(surviving)}};
    doc["prisoners_dilemma"] = {{"is_pd", pd.is_pd}};
    if (pd.is_pd) {
      doc["prisoners_dilemma"]["dominant"] = profile_json(game, pd.dominant);
      doc["prisoners_dilemma"]["pareto_superior"] =
          profile_json(game, pd.pareto_superior);
      doc["prisoners_dilemma"]["pareto_payoffs"] =
          payoffs_json(game, pd.pareto_superior);
    }
    if (mixed) {
      doc["mixed"] = json::array();
      for (const MixedEquilibrium& eq : mixed_eq) {
        doc["mixed"].push_back(
            {{"probs", json::array({r6(eq.strategy_probs[0]),
                                    r6(eq.strategy_probs[1])})},
             {"payoffs", json::array({r6(eq.payoffs[0]), r6(eq.payoffs[1])})}});
      }
    }
    out << doc.dump(2) << "\n";
    return;
  }

  out << "players: " << join(game.player_names()) << "\n";
  out << "pure nash: " << nash.size() << "\n";
  for (const StrategyProfile& profile : nash) {
    out << "  " << profile_names(game, profile) << " payoffs "
        << payoffs_at(game, profile) << "\n";
  }
  out << "strictly dominated:\n";
  for (int p = 0; p < game.player_count(); ++p) {
    std::vector<std::string> names;
    for (int s : strictly_dominated(game, p)) {
      names.push_back(game.strategies(p)[s]);
    }
    out << "  " << game.player_name(p) << ": "
        << (names.empty() ? "none" : join(names)) << "\n";
  }
  out << "iterated elimination: " << rounds << " round(s)\n";
  for (const Elimination& entry : elim.log) {
    out << "  round " << entry.round << ": eliminate "
        << game.player_name(entry.player) << "." << entry.name << "\n";
  }
  for (int p = 0; p < game.player_count(); ++p) {
    std::vector<std::string> names;
    for (int s : elim.surviving[p]) names.push_back(game.strategies(p)[s]);
    out << "  surviving " << game.player_name(p) << ": " << join(names)
        << "\n";
  }
  if (pd.is_pd) {
    out << "prisoners-dilemma: yes, Pareto-superior profile "
        << profile_names(game, pd.pareto_superior) << " "
        << payoffs_at(game, pd.pareto_superior) << "\n";
  } else {
    out << "prisoners-dilemma: no\n";
  }
  if (mixed) {
    out << "mixed equilibria: " << mixed_eq.size() << "\n";
    for (const MixedEquilibrium& eq : mixed_eq) {
      out << " ";
      for (int p = 0; p < 2; ++p) {
        out << " " << game.player_name(p) << ": (";
        for (std::size_t s = 0; s < eq.strategy_probs[p].size(); ++s) {
          if (s > 0) out << ", ";
          out << fmt6(eq.strategy_probs[p][s]);
        }
        out << ")";
      }
      out << " payoffs " << pair6(eq.payoffs[0], eq.payoffs[1]) << "\n";
    }
  }
}

void print_equilibrium(const MarketEquilibrium& eq, const std::string& format,
                       int iterations, std::ostream& out) {
  if (format == "json") {
    json doc{{"regime", to_string(eq.regime)},
             {"method", to_string(eq.method)},
             {"firms", eq.firms},
             {"q_i", r6(eq.per_firm_quantity)},
             {"Q", r6(eq.total_quantity)},
             {"p", r6(eq.price)},
             {"profit", r6(eq.per_firm_profit)}};
    if (iterations >= 0) doc["iterations"] = iterations;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "regime: " << to_string(eq.regime) << "\n";
  out << "method: " << to_string(eq.method);
  if (iterations >= 0) out << " (" << iterations << " iterations)";
  out << "\n";
  out << "firms: " << eq.firms << "\n";
  out << "q_i = " << fmt6(eq.per_firm_quantity) << "\n";
  out << "Q = " << fmt6(eq.total_quantity) << "\n";
  out << "p = " << fmt6(eq.price) << "\n";
  out << "profit = " << fmt6(eq.per_firm_profit) << "\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"oligopoly toolkit: Nash analysis, Cournot/Bertrand solvers, "
               "kinked demand, repeated play, concentration metrics"};
  app.name("oligo");
  app.require_subcommand(1);

  // solve <game> [--mixed]
  std::string solve_path;
  bool solve_mixed = false;
  std::string solve_format = "text";
  CLI::App* solve = app.add_subcommand(
      "solve", "equilibria, dominance and dilemma report for a game file");
  solve->add_option("game", solve_path, "game JSON file")->required();
  solve->add_flag("--mixed", solve_mixed,
                  "also enumerate mixed equilibria (2-player games)");
  solve->add_option("--format", solve_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // cournot --a --b --c --firms [--iterative]
  LinearMarket cournot_market;
  bool cournot_it = false;
  double cournot_tol = 1e-10;
  int cournot_max_it = 10000;
  std::string cournot_format = "text";
  CLI::App* cournot = app.add_subcommand(
      "cournot", "quantity-competition equilibrium on a linear market");
  cournot->add_option("--a", cournot_market.intercept, "demand intercept")
      ->required();
  cournot->add_option("--b", cournot_market.slope, "demand slope")->required();
  cournot->add_option("--c", cournot_market.marginal_cost, "marginal cost")
      ->required();
  cournot->add_option("--firms", cournot_market.firms, "number of firms")
      ->required();
  cournot->add_flag("--iterative", cournot_it,
                    "solve by damped best-response iteration");
  cournot->add_option("--tolerance", cournot_tol,
                      "iterative convergence tolerance");
  cournot->add_option("--max-iterations", cournot_max_it,
                      "iterative solver budget");
  cournot->add_option("--format", cournot_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // bertrand --a --b --c --tick [--start p1,p2]
  LinearMarket bertrand_market;
  bertrand_market.firms = 2;
  double bertrand_tick = 0.01;
  std::string bertrand_start;
  std::string bertrand_format = "text";
  CLI::App* bertrand = app.add_subcommand(
      "bertrand", "price-competition equilibrium on a linear market");
  bertrand->add_option("--a", bertrand_market.intercept, "demand intercept")
      ->required();
  bertrand->add_option("--b", bertrand_market.slope, "demand slope")
      ->required();
  bertrand->add_option("--c", bertrand_market.marginal_cost, "marginal cost")
      ->required();
  bertrand->add_option("--firms", bertrand_market.firms, "number of firms");
  bertrand->add_option("--tick", bertrand_tick, "price grid granularity");
  bertrand->add_option("--start", bertrand_start,
                       "run undercut dynamics from start prices p1,p2");
  bertrand->add_option("--format", bertrand_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // limit --a --b --c --firms-list
  LinearMarket limit_market;
  std::string limit_firms;
  std::string limit_format = "text";
  CLI::App* limit = app.add_subcommand(
      "limit", "Cournot price for each firm count (competitive limit)");
  limit->add_option("--a", limit_market.intercept, "demand intercept")
      ->required();
  limit->add_option("--b", limit_market.slope, "demand slope")->required();
  limit->add_option("--c", limit_market.marginal_cost, "marginal cost")
      ->required();
  limit->add_option("--firms-list", limit_firms,
                    "comma-separated firm counts, e.g. 1,2,10,100")
      ->required();
  limit->add_option("--format", limit_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // kinked <file> --mc
  std::string kinked_path;
  double kinked_mc = 0.0;
  std::string kinked_format = "text";
  CLI::App* kinked = app.add_subcommand(
      "kinked", "marginal-revenue gap and price-rigidity verdict");
  kinked->add_option("file", kinked_path, "kinked-demand JSON file")
      ->required();
  kinked->add_option("--mc", kinked_mc, "constant marginal cost")->required();
  kinked->add_option("--format", kinked_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // simulate <game> --rho --weeks --seed [--initial a,b] [--csv out]
  std::string sim_path;
  double sim_rho = 0.9;
  int sim_weeks = 10;
  std::uint64_t sim_seed = 1;
  std::string sim_initial;
  std::string sim_csv;
  std::string sim_format = "text";
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "repeated weekly play with mirror persistence policies");
  simulate_cmd->add_option("game", sim_path, "game JSON file")->required();
  simulate_cmd->add_option("--rho", sim_rho,
                           "persistence probability for both players");
  simulate_cmd->add_option("--weeks", sim_weeks, "number of rounds");
  simulate_cmd->add_option("--seed", sim_seed, "generator seed");
  simulate_cmd->add_option(
      "--initial", sim_initial,
      "initial postures as i_posture,j_posture (default: first strategies)");
  simulate_cmd->add_option("--csv", sim_csv, "write the trace CSV here");
  simulate_cmd->add_option("--format", sim_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // metrics --shares --k
  std::string metrics_shares;
  int metrics_k = 0;
  std::string metrics_format = "text";
  CLI::App* metrics = app.add_subcommand(
      "metrics", "concentration ratio and Herfindahl index from shares");
  metrics->add_option("--shares", metrics_shares,
                      "comma-separated shares (fractions or percentages)")
      ->required();
  metrics->add_option("--k", metrics_k, "number of top firms for CR_k")
      ->required();
  metrics->add_option("--format", metrics_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  solve->callback(
      [&] { run_solve(solve_path, solve_mixed, solve_format, out); });

  cournot->callback([&] {
    if (cournot_it) {
      IterativeOptions options;
      options.tolerance = cournot_tol;
      options.max_iterations = cournot_max_it;
      const IterativeResult result =
          cournot_iterative(as_general(cournot_market), options);
      print_equilibrium(result.equilibrium, cournot_format, result.iterations,
                        out);
    } else {
      print_equilibrium(cournot_closed_form(cournot_market), cournot_format,
                        -1, out);
    }
  });

  bertrand->callback([&] {
    const MarketEquilibrium eq =
        bertrand_homogeneous(bertrand_market, bertrand_tick);
    int rounds = -1;
    std::array<double, 2> final_prices{};
    if (!bertrand_start.empty()) {
      const std::vector<double> start =
          [&] {
            std::vector<double> values;
            for (const std::string& token : split_list(bertrand_start)) {
              values.push_back(parse_double(token, "--start"));
            }
            return values;
          }();
      if (start.size() != 2) {
        throw std::invalid_argument("--start: expected two prices p1,p2");
      }
      const auto trajectory = bertrand_undercut_dynamics(
          bertrand_market, {start[0], start[1]}, bertrand_tick);
      rounds = static_cast<int>(trajectory.size()) - 1;
      final_prices = trajectory.back();
    }
    if (bertrand_format == "json") {
      json doc{{"regime", to_string(eq.regime)},
               {"firms", eq.firms},
               {"p", r6(eq.price)},
               {"Q", r6(eq.total_quantity)},
               {"q_i", r6(eq.per_firm_quantity)},
               {"profit", r6(eq.per_firm_profit)}};
      if (rounds >= 0) {
        doc["undercut"] = {
            {"rounds", rounds},
            {"final", json::array(
                          {r6(final_prices[0]), r6(final_prices[1])})}};
      }
      out << doc.dump(2) << "\n";
      return;
    }
    out << "regime: " << to_string(eq.regime) << "\n";
    out << "firms: " << eq.firms << "\n";
    out << "p = " << fmt6(eq.price) << "\n";
    out << "Q = " << fmt6(eq.total_quantity) << "\n";
    out << "q_i = " << fmt6(eq.per_firm_quantity) << "\n";
    out << "profit = " << fmt6(eq.per_firm_profit) << "\n";
    if (rounds >= 0) {
      out << "undercut rounds: " << rounds << "\n";
      out << "final prices: " << pair6(final_prices[0], final_prices[1])
          << "\n";
    }
  });

  limit->callback([&] {
    limit_market.firms = 1;
    const auto prices =
        competitive_limit(limit_market, parse_firm_counts(limit_firms));
    if (limit_format == "json") {
      json rows = json::array();
      for (const auto& [n, price] : prices) {
        rows.push_back({{"firms", n},
                        {"p", r6(price)},
                        {"margin", r6(price - limit_market.marginal_cost)}});
      }
      out << json{{"c", r6(limit_market.marginal_cost)},
                  {"prices", std::move(rows)}}
                 .dump(2)
          << "\n";
      return;
    }
    for (const auto& [n, price] : prices) {
      out << "N=" << n << ": p = " << fmt6(price)
          << " margin = " << fmt6(price - limit_market.marginal_cost) << "\n";
    }
  });

  kinked->callback([&] {
    const KinkedDemand demand = load_kinked(kinked_path);
    const MarginalRevenueGap gap = mr_gap(demand);
    const OptimalPrice decision = optimal_price(demand, kinked_mc);
    const char* branch =
        decision.branch == PriceBranch::at_kink        ? "at_kink"
        : decision.branch == PriceBranch::upper_segment ? "upper_segment"
                                                        : "lower_segment";
    if (kinked_format == "json") {
      out << json{{"kink",
                   {{"p", r6(demand.kink_price)},
                    {"q", r6(demand.kink_quantity)}}},
                  {"mr_gap",
                   {{"lower", r6(gap.mr_lower)}, {"upper", r6(gap.mr_upper)}}},
                  {"mc", r6(kinked_mc)},
                  {"price", r6(decision.price)},
                  {"quantity", r6(decision.quantity)},
                  {"rigid", decision.rigid},
                  {"branch", branch},
                  {"zero_output", decision.zero_output}}
                 .dump(2)
          << "\n";
      return;
    }
    out << "kink: p = " << fmt6(demand.kink_price)
        << ", q = " << fmt6(demand.kink_quantity) << "\n";
    out << "mr gap: [" << fmt6(gap.mr_lower) << ", " << fmt6(gap.mr_upper)
        << "]\n";
    out << "mc = " << fmt6(kinked_mc) << "\n";
    out << "price = " << fmt6(decision.price) << "\n";
    out << "quantity = " << fmt6(decision.quantity) << "\n";
    out << "rigid: " << (decision.rigid ? "yes" : "no") << " (" << branch
        << ")\n";
    if (decision.zero_output) out << "zero output: yes\n";
  });

  simulate_cmd->callback([&] {
    const NormalFormGame game = load_game(sim_path);
    std::array<std::string, 2> initial{game.strategies(0).front(),
                                       game.strategies(1).front()};
    if (!sim_initial.empty()) {
      const std::vector<std::string> tokens = split_list(sim_initial);
      if (tokens.size() != 2) {
        throw std::invalid_argument(
            "--initial: expected two postures i_posture,j_posture");
      }
      initial = {tokens[0], tokens[1]};
    }
    const std::array<PersistencePolicy, 2> policies{
        mirror_policy(game, 0, sim_rho, initial[0]),
        mirror_policy(game, 1, sim_rho, initial[1])};
    const PlayTrace trace = simulate(game, policies, sim_weeks, sim_seed);
    const OutcomeReport report = compare_outcomes(trace, game);

    std::array<double, 2> persistence{0.0, 0.0};
    if (trace.rounds.size() > 1) {
      for (std::size_t i = 1; i < trace.rounds.size(); ++i) {
        for (int p = 0; p < 2; ++p) {
          if (trace.rounds[i].persisted[p]) persistence[p] += 1.0;
        }
      }
      persistence[0] /= static_cast<double>(trace.rounds.size() - 1);
      persistence[1] /= static_cast<double>(trace.rounds.size() - 1);
    }
    const std::array<double, 2> cumulative = trace.rounds.back().cumulative;

    if (!sim_csv.empty()) {
      std::ofstream csv(sim_csv, std::ios::binary);
      if (!csv) {
        throw std::runtime_error("cannot open output file: " + sim_csv);
      }
      write_trace_csv(csv, trace, game);
    }

    if (sim_format == "json") {
      json doc{{"weeks", sim_weeks},
               {"seed", trace.seed},
               {"draws", trace.draws},
               {"cumulative",
                json::array({r6(cumulative[0]), r6(cumulative[1])})},
               {"average", json::array({r6(report.average_payoff[0]),
                                        r6(report.average_payoff[1])})},
               {"nash_fraction", r6(report.nash_fraction)},
               {"pareto_fraction", r6(report.pareto_fraction)},
               {"empirical_persistence",
                json::array({r6(persistence[0]), r6(persistence[1])})}};
      if (!sim_csv.empty()) doc["csv"] = sim_csv;
      out << doc.dump(2) << "\n";
      return;
    }
    out << "weeks: " << sim_weeks << "\n";
    out << "seed: " << trace.seed << "\n";
    out << "draws: " << trace.draws << "\n";
    out << "cumulative: " << pair6(cumulative[0], cumulative[1]) << "\n";
    out << "average: "
        << pair6(report.average_payoff[0], report.average_payoff[1]) << "\n";
    out << "nash fraction: " << fmt6(report.nash_fraction) << "\n";
    out << "pareto fraction: " << fmt6(report.pareto_fraction) << "\n";
    out << "empirical persistence: " << pair6(persistence[0], persistence[1])
        << "\n";
    if (!sim_csv.empty()) out << "csv written: " << sim_csv << "\n";
  });

  metrics->callback([&] {
    const MarketShares shares{parse_shares(metrics_shares)};
    const double cr = concentration_ratio(shares, metrics_k);
    const double hhi = herfindahl(shares);
    if (metrics_format == "json") {
      out << json{{"k", metrics_k},
                  {"cr", r6(cr)},
                  {"hhi", r6(hhi)},
                  {"shares", r6(shares.shares)}}
                 .dump(2)
          << "\n";
      return;
    }
    out << "CR_" << metrics_k << " = " << fmt6(cr) << "\n";
    out << "HHI = " << fmt6(hhi) << "\n";
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("oligo");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace oligo::cli
