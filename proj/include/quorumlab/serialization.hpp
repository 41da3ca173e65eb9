#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quorumlab/game.hpp"
#include "quorumlab/legco.hpp"

namespace quorumlab {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw input_error("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline json matrix_to_json(const AmalgamatedMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json w = json::array();
    for (const auto& v : row.weights) w.push_back(rational_to_json(v));
    rows.push_back({{"q", rational_to_json(row.threshold)}, {"w", std::move(w)}});
  }
  return rows;
}

inline AmalgamatedMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw input_error("\"rows\" must be an array");
  std::vector<MatrixRow> out;
  for (const auto& row : rows) {
    if (!row.is_object() || !row.contains("q") || !row.contains("w") || !row["w"].is_array()) {
      throw input_error("matrix row needs \"q\" and an array \"w\"");
    }
    MatrixRow r{rational_from_json(row["q"]), {}};
    for (const auto& w : row["w"]) r.weights.push_back(rational_from_json(w));
    out.push_back(std::move(r));
  }
  return AmalgamatedMatrix(std::move(out));
}

// Canonical game JSON. Keys come out sorted; explicit winning sets are in
// mask order with each coalition's members ascending.
inline json game_to_json(const Game& game) {
  if (const auto* lg = game.as_legco()) {
    return {{"type", "legco"}, {"n", lg->n}, {"scenario", to_string(lg->scenario)}};
  }
  if (const auto* m = game.as_weighted()) {
    return {{"type", "weighted"}, {"players", game.players()}, {"rows", matrix_to_json(*m)}};
  }
  const auto& ex = *game.as_explicit();
  json winning = json::array();
  for (const auto& c : ex.winning) winning.push_back(c.members());
  return {{"type", "explicit"}, {"players", ex.players}, {"winning", std::move(winning)}};
}

inline Game game_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw input_error("game JSON needs a string \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  auto int_field = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      throw input_error(std::string("game JSON needs an integer \"") + key + "\"");
    }
    return j[key].get<int>();
  };
  if (type == "legco") {
    const int n = int_field("n");
    const auto scenario = j.contains("scenario") ? parse_scenario(j["scenario"].get<std::string>())
                                                 : Scenario::StatusQuo;
    return Game::legco(n, scenario);
  }
  if (type == "weighted") {
    auto matrix = matrix_from_json(j.at("rows"));
    if (j.contains("players") && int_field("players") != matrix.players()) {
      throw input_error("\"players\" does not match the matrix width");
    }
    return Game::weighted(std::move(matrix));
  }
  if (type == "explicit") {
    const int players = int_field("players");
    if (!j.contains("winning") || !j["winning"].is_array()) {
      throw input_error("explicit game needs a \"winning\" array");
    }
    std::vector<Coalition> winning;
    for (const auto& c : j["winning"]) {
      if (!c.is_array()) throw input_error("each winning coalition must be an array of players");
      Coalition s;
      for (const auto& p : c) {
        if (!p.is_number_integer()) throw input_error("player labels must be integers");
        const int v = p.get<int>();
        if (v < 1 || v > players) {
          throw input_error("player " + std::to_string(v) + " outside 1.." + std::to_string(players));
        }
        s.insert(PlayerId(v));
      }
      winning.push_back(s);
    }
    return Game::explicit_game(players, std::move(winning));
  }
  throw input_error("unknown game type '" + type + "'");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

// A candidate file may be a bare rows array, {"rows": [...]}, or a weighted game.
inline AmalgamatedMatrix matrix_from_any_json(const json& j) {
  if (j.is_array()) return matrix_from_json(j);
  if (j.is_object() && j.contains("rows")) return matrix_from_json(j["rows"]);
  throw input_error("expected a matrix: a rows array or an object with \"rows\"");
}

}  // namespace quorumlab
