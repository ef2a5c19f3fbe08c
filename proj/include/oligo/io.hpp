#pragma once

#include <string>

#include "json.hpp"
#include "oligo/kinked_demand.hpp"
#include "oligo/market_models.hpp"
#include "oligo/normal_form.hpp"

namespace oligo {

// Readers throw std::invalid_argument naming the offending field or profile
// key; file loaders throw std::runtime_error when the file cannot be read.

// Game schema:
//   {"players": ["i","j"],
//    "strategies": [["TPE_A","TPE_M","TPE_P"], [...]],
//    "payoffs": {"TPE_A,TPE_A": [13,13], ...}}
// Payoff keys are comma-joined strategy names in player order; the object
// must cover every profile exactly once.
NormalFormGame parse_game(const std::string& text);
NormalFormGame load_game(const std::string& path);
nlohmann::json game_to_json(const NormalFormGame& game);

// Market schema: {"a": 100, "b": 2, "c": 10, "firms": 2}
LinearMarket parse_linear_market(const std::string& text);
LinearMarket load_linear_market(const std::string& path);
nlohmann::json market_to_json(const LinearMarket& market);

// Kinked-demand schema:
//   {"kink": {"p": 5, "q": 20000},
//    "upper_elasticity": -6.0, "lower_elasticity": -0.625}
KinkedDemand parse_kinked(const std::string& text);
KinkedDemand load_kinked(const std::string& path);
nlohmann::json kinked_to_json(const KinkedDemand& kinked);

std::string read_text_file(const std::string& path);

}  // namespace oligo
