#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "oligo/io.hpp"

using oligo::NormalFormGame;

namespace {

const char* kGameText = R"({
  "players": ["i", "j"],
  "strategies": [["A", "B"], ["A", "B"]],
  "payoffs": {"A,A": [3, 3], "A,B": [0, 5], "B,A": [5, 0], "B,B": [1, 1]}
})";

}  // namespace

TEST_CASE("bundled posture game round-trips through the parser") {
  const NormalFormGame game =
      oligo::load_game(fixtures::example_path("table2.game.json"));
  CHECK(game.player_count() == 2);
  CHECK(game.strategies(0) ==
        std::vector<std::string>{"TPE_A", "TPE_M", "TPE_P"});
  CHECK(game.payoff({0, 0}, 0) == 13);
  CHECK(game.payoff({2, 2}, 1) == 20);
  // Writer output reparses to the same tensor.
  const NormalFormGame again =
      oligo::parse_game(oligo::game_to_json(game).dump());
  for (long flat = 0; flat < game.profile_count(); ++flat) {
    for (int p = 0; p < 2; ++p) {
      CHECK(again.payoff(game.profile_at(flat), p) ==
            game.payoff(game.profile_at(flat), p));
    }
  }
}

TEST_CASE("game parser reads a plain dilemma") {
  const NormalFormGame game = oligo::parse_game(kGameText);
  CHECK(game.payoff({0, 1}, 1) == 5);
  CHECK(game.strategy_index(1, "B") == 1);
}

TEST_CASE("game parser names the missing profile") {
  const std::string broken = R"({
    "players": ["i", "j"],
    "strategies": [["A", "B"], ["A", "B"]],
    "payoffs": {"A,A": [3, 3], "A,B": [0, 5], "B,B": [1, 1]}
  })";
  CHECK_THROWS_WITH_AS(oligo::parse_game(broken),
                       "game json: missing profile \"B,A\"",
                       std::invalid_argument);
}

TEST_CASE("game parser rejects stray profiles and bad payoff rows") {
  const std::string extra = R"({
    "players": ["i", "j"],
    "strategies": [["A", "B"], ["A", "B"]],
    "payoffs": {"A,A": [3, 3], "A,B": [0, 5], "B,A": [5, 0], "B,B": [1, 1],
                "C,A": [9, 9]}
  })";
  CHECK_THROWS_WITH_AS(oligo::parse_game(extra),
                       "game json: unknown profile \"C,A\"",
                       std::invalid_argument);
  const std::string short_row = R"({
    "players": ["i", "j"],
    "strategies": [["A", "B"], ["A", "B"]],
    "payoffs": {"A,A": [3], "A,B": [0, 5], "B,A": [5, 0], "B,B": [1, 1]}
  })";
  CHECK_THROWS_AS(oligo::parse_game(short_row), std::invalid_argument);
  const std::string non_finite = R"({
    "players": ["i", "j"],
    "strategies": [["A", "B"], ["A", "B"]],
    "payoffs": {"A,A": [3, null], "A,B": [0, 5], "B,A": [5, 0], "B,B": [1, 1]}
  })";
  CHECK_THROWS_AS(oligo::parse_game(non_finite), std::invalid_argument);
}

TEST_CASE("game parser rejects duplicate profile keys") {
  const std::string duplicated = R"({
    "players": ["i", "j"],
    "strategies": [["A", "B"], ["A", "B"]],
    "payoffs": {"A,A": [3, 3], "A,A": [4, 4], "A,B": [0, 5], "B,A": [5, 0],
                "B,B": [1, 1]}
  })";
  CHECK_THROWS_WITH_AS(oligo::parse_game(duplicated),
                       "game json: duplicate key \"A,A\"",
                       std::invalid_argument);
}

TEST_CASE("game parser names broken structural fields") {
  CHECK_THROWS_WITH_AS(oligo::parse_game(R"({"strategies": [], "payoffs": {}})"),
                       "game json: field \"players\" must be an array of names",
                       std::invalid_argument);
  CHECK_THROWS_AS(
      oligo::parse_game(
          R"({"players": ["i","j"], "strategies": [["A"]], "payoffs": {}})"),
      std::invalid_argument);
  CHECK_THROWS_AS(oligo::parse_game("not json at all"), std::invalid_argument);
}

TEST_CASE("market files parse and validate") {
  const oligo::LinearMarket market = oligo::load_linear_market(
      fixtures::example_path("duopoly.market.json"));
  CHECK(market.intercept == 100.0);
  CHECK(market.slope == 2.0);
  CHECK(market.marginal_cost == 10.0);
  CHECK(market.firms == 2);
  const auto doc = oligo::market_to_json(market);
  const oligo::LinearMarket again = oligo::parse_linear_market(doc.dump());
  CHECK(again.intercept == market.intercept);
  CHECK(again.firms == market.firms);

  CHECK_THROWS_WITH_AS(oligo::parse_linear_market(R"({"a": 100, "b": 2})"),
                       "market json: field \"c\" must be a number",
                       std::invalid_argument);
  CHECK_THROWS_AS(
      oligo::parse_linear_market(R"({"a": 100, "b": 2, "c": 10, "firms": 2.5})"),
      std::invalid_argument);
  // Valid JSON but an invalid market: the domain check still runs.
  CHECK_THROWS_AS(
      oligo::parse_linear_market(R"({"a": 100, "b": -2, "c": 10, "firms": 2})"),
      std::domain_error);
}

TEST_CASE("kinked files parse and rebuild the tomato curve") {
  const oligo::KinkedDemand demand =
      oligo::load_kinked(fixtures::example_path("tomato.kinked.json"));
  CHECK(demand.kink_price == doctest::Approx(5.0));
  CHECK(demand.kink_quantity == doctest::Approx(20000.0));
  CHECK(demand.upper.slope == doctest::Approx(24000.0));
  CHECK(demand.lower.slope == doctest::Approx(2500.0));
  const auto doc = oligo::kinked_to_json(demand);
  CHECK(doc["upper_elasticity"].get<double>() == doctest::Approx(-6.0));
  CHECK(doc["lower_elasticity"].get<double>() == doctest::Approx(-0.625));
  const oligo::KinkedDemand again = oligo::parse_kinked(doc.dump());
  CHECK(again.upper.intercept == doctest::Approx(demand.upper.intercept));

  CHECK_THROWS_WITH_AS(oligo::parse_kinked(R"({"upper_elasticity": -6})"),
                       "kinked json: field \"kink\" must be an object with "
                       "\"p\" and \"q\"",
                       std::invalid_argument);
  CHECK_THROWS_AS(
      oligo::parse_kinked(
          R"({"kink": {"p": 5, "q": 100}, "upper_elasticity": -0.5,
              "lower_elasticity": -0.6})"),
      std::domain_error);
}

TEST_CASE("missing files raise a readable error") {
  CHECK_THROWS_AS(oligo::load_game("no/such/file.json"), std::runtime_error);
  CHECK_THROWS_AS(oligo::read_text_file("also/missing.txt"),
                  std::runtime_error);
}
