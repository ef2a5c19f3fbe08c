#include "oligo/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace oligo {

namespace {

using nlohmann::json;

// SAX pass that rejects duplicate keys anywhere in the document (the DOM
// parser would silently keep one of them).
class DuplicateKeyScan : public json::json_sax_t {
 public:
  std::string duplicate;

  bool start_object(std::size_t) override {
    scopes_.emplace_back();
    return true;
  }
  bool key(string_t& val) override {
    if (!scopes_.back().insert(val).second) {
      duplicate = val;
      return false;
    }
    return true;
  }
  bool end_object() override {
    scopes_.pop_back();
    return true;
  }
  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t) override { return true; }
  bool number_unsigned(number_unsigned_t) override { return true; }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_array(std::size_t) override { return true; }
  bool end_array() override { return true; }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    throw std::invalid_argument(std::string("invalid json: ") + ex.what());
  }

 private:
  std::vector<std::set<std::string>> scopes_;
};

json parse_document(const std::string& text, const char* what) {
  DuplicateKeyScan scan;
  if (!json::sax_parse(text, &scan) && !scan.duplicate.empty()) {
    throw std::invalid_argument(std::string(what) + ": duplicate key \"" +
                                scan.duplicate + "\"");
  }
  return json::parse(text);
}

double require_number(const json& j, const std::string& field,
                      const char* what) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw std::invalid_argument(std::string(what) + ": field \"" + field +
                                "\" must be a number");
  }
  return j[field].get<double>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

NormalFormGame parse_game(const std::string& text) {
  const json doc = parse_document(text, "game json");
  if (!doc.is_object() || !doc.contains("players") ||
      !doc["players"].is_array()) {
    throw std::invalid_argument(
        "game json: field \"players\" must be an array of names");
  }
  std::vector<std::string> players;
  for (const auto& entry : doc["players"]) {
    if (!entry.is_string()) {
      throw std::invalid_argument("game json: player names must be strings");
    }
    players.push_back(entry.get<std::string>());
  }

  if (!doc.contains("strategies") || !doc["strategies"].is_array() ||
      doc["strategies"].size() != players.size()) {
    throw std::invalid_argument(
        "game json: field \"strategies\" must list one strategy set per "
        "player");
  }
  std::vector<std::vector<std::string>> strategies;
  for (const auto& list : doc["strategies"]) {
    if (!list.is_array() || list.empty()) {
      throw std::invalid_argument(
          "game json: each strategy set must be a non-empty array");
    }
    std::vector<std::string> names;
    for (const auto& entry : list) {
      if (!entry.is_string()) {
        throw std::invalid_argument(
            "game json: strategy names must be strings");
      }
      names.push_back(entry.get<std::string>());
    }
    strategies.push_back(std::move(names));
  }

  if (!doc.contains("payoffs") || !doc["payoffs"].is_object()) {
    throw std::invalid_argument(
        "game json: field \"payoffs\" must be an object keyed by profile");
  }
  const json& payoffs = doc["payoffs"];

  // Enumerate the full profile space; every key must be present exactly
  // once and nothing else may appear.
  long profile_count = 1;
  for (const auto& names : strategies) {
    profile_count *= static_cast<long>(names.size());
  }
  const int n = static_cast<int>(players.size());
  std::vector<double> tensor;
  tensor.reserve(profile_count * n);
  std::set<std::string> expected;
  std::vector<int> pos(n, 0);
  for (long flat = 0; flat < profile_count; ++flat) {
    std::string key;
    for (int p = 0; p < n; ++p) {
      if (p > 0) key += ',';
      key += strategies[p][pos[p]];
    }
    expected.insert(key);
    if (!payoffs.contains(key)) {
      throw std::invalid_argument("game json: missing profile \"" + key +
                                  "\"");
    }
    const json& values = payoffs[key];
    if (!values.is_array() || values.size() != players.size()) {
      throw std::invalid_argument("game json: profile \"" + key +
                                  "\" must list one payoff per player");
    }
    for (const auto& value : values) {
      if (!value.is_number() ||
          !std::isfinite(value.get<double>())) {
        throw std::invalid_argument("game json: profile \"" + key +
                                    "\" has a non-finite payoff");
      }
      tensor.push_back(value.get<double>());
    }
    for (int p = n - 1; p >= 0; --p) {
      if (++pos[p] < static_cast<int>(strategies[p].size())) break;
      pos[p] = 0;
    }
  }
  for (const auto& [key, value] : payoffs.items()) {
    if (!expected.count(key)) {
      throw std::invalid_argument("game json: unknown profile \"" + key +
                                  "\"");
    }
  }
  return NormalFormGame(std::move(players), std::move(strategies),
                        std::move(tensor));
}

NormalFormGame load_game(const std::string& path) {
  return parse_game(read_text_file(path));
}

nlohmann::json game_to_json(const NormalFormGame& game) {
  json doc;
  doc["players"] = game.player_names();
  json strategies = json::array();
  for (int p = 0; p < game.player_count(); ++p) {
    strategies.push_back(game.strategies(p));
  }
  doc["strategies"] = std::move(strategies);
  json payoffs = json::object();
  for (long flat = 0; flat < game.profile_count(); ++flat) {
    const StrategyProfile profile = game.profile_at(flat);
    std::string key;
    for (int p = 0; p < game.player_count(); ++p) {
      if (p > 0) key += ',';
      key += game.strategies(p)[profile[p]];
    }
    json values = json::array();
    for (int p = 0; p < game.player_count(); ++p) {
      values.push_back(game.payoff(profile, p));
    }
    payoffs[key] = std::move(values);
  }
  doc["payoffs"] = std::move(payoffs);
  return doc;
}

LinearMarket parse_linear_market(const std::string& text) {
  const json doc = parse_document(text, "market json");
  if (!doc.is_object()) {
    throw std::invalid_argument("market json: document must be an object");
  }
  LinearMarket market;
  market.intercept = require_number(doc, "a", "market json");
  market.slope = require_number(doc, "b", "market json");
  market.marginal_cost = require_number(doc, "c", "market json");
  if (!doc.contains("firms") || !doc["firms"].is_number_integer()) {
    throw std::invalid_argument(
        "market json: field \"firms\" must be an integer");
  }
  market.firms = doc["firms"].get<int>();
  market.validate();
  return market;
}

LinearMarket load_linear_market(const std::string& path) {
  return parse_linear_market(read_text_file(path));
}

nlohmann::json market_to_json(const LinearMarket& market) {
  return json{{"a", market.intercept},
              {"b", market.slope},
              {"c", market.marginal_cost},
              {"firms", market.firms}};
}

KinkedDemand parse_kinked(const std::string& text) {
  const json doc = parse_document(text, "kinked json");
  if (!doc.is_object() || !doc.contains("kink") || !doc["kink"].is_object()) {
    throw std::invalid_argument(
        "kinked json: field \"kink\" must be an object with \"p\" and \"q\"");
  }
  const double p = require_number(doc["kink"], "p", "kinked json");
  const double q = require_number(doc["kink"], "q", "kinked json");
  const double upper = require_number(doc, "upper_elasticity", "kinked json");
  const double lower = require_number(doc, "lower_elasticity", "kinked json");
  return build_kinked(p, q, upper, lower);
}

KinkedDemand load_kinked(const std::string& path) {
  return parse_kinked(read_text_file(path));
}

nlohmann::json kinked_to_json(const KinkedDemand& kinked) {
  const double ratio = kinked.kink_quantity / kinked.kink_price;
  return json{{"kink", {{"p", kinked.kink_price}, {"q", kinked.kink_quantity}}},
              {"upper_elasticity", -kinked.upper.slope / ratio},
              {"lower_elasticity", -kinked.lower.slope / ratio}};
}

}  // namespace oligo
