#pragma once

#include <string>

#include "oligo/kinked_demand.hpp"
#include "oligo/market_models.hpp"
#include "oligo/normal_form.hpp"

namespace fixtures {

// The bundled 3x3 pricing-posture game: aggressive / moderate / passive.
inline oligo::NormalFormGame table2() {
  return oligo::NormalFormGame(
      {"i", "j"},
      {{"TPE_A", "TPE_M", "TPE_P"}, {"TPE_A", "TPE_M", "TPE_P"}},
      {13, 13, 16, 12, 30, 8,    // A row
       12, 16, 14, 14, 25, 12,   // M row
       8, 30, 12, 25, 20, 20});  // P row
}

// Classic 2x2 dilemma: defect dominates, (cooperate, cooperate) pays more.
inline oligo::NormalFormGame classic_pd() {
  return oligo::NormalFormGame::bimatrix({"C", "D"}, {"C", "D"},
                                         {3, 0, 5, 1}, {3, 5, 0, 1});
}

// Duopoly demand Q = 100 - 2p at cost 10: the worked example used across
// the quantity, price and limit tests.
inline oligo::LinearMarket duopoly() { return {100.0, 2.0, 10.0, 2}; }

// Kink at (5, 20000) with elasticities -6 above and -0.625 below; the MR
// gap is [-3, 25/6].
inline oligo::KinkedDemand tomato() {
  return oligo::build_kinked(5.0, 20000.0, -6.0, -0.625);
}

inline std::string source_dir() { return OLIGO_SOURCE_DIR; }

inline std::string example_path(const std::string& name) {
  return source_dir() + "/examples/" + name;
}

}  // namespace fixtures
