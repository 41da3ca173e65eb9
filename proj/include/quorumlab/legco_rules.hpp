#pragma once

#include <string>
#include <string_view>

#include "quorumlab/errors.hpp"

namespace quorumlab {

// Legislature variants over players 1..2n+1: 1..n geographical, n+1..2n
// functional, 2n+1 the virtual government member.
enum class Scenario {
  StatusQuo,      // government bills by simple majority, member bills by split vote
  BicameralOnly,  // every bill needs a split vote; the government player is a dummy
  Unicameral,     // every bill needs a simple majority; the government player is a dummy
};

struct LegcoSpec {
  int n = 1;
  Scenario scenario = Scenario::StatusQuo;

  friend bool operator==(const LegcoSpec&, const LegcoSpec&) = default;
};

// "More than n/2" members of one chamber.
constexpr int chamber_majority(int n) { return n / 2 + 1; }

// Rule table keyed on the coalition profile: geo and func member counts and
// whether the government player is present.
constexpr bool legco_wins(int n, Scenario scenario, int geo, int func, bool gov) {
  const int majority = chamber_majority(n);
  switch (scenario) {
    case Scenario::StatusQuo:
      return gov ? geo + func >= n + 1 : geo >= majority && func >= majority;
    case Scenario::BicameralOnly:
      return geo >= majority && func >= majority;
    case Scenario::Unicameral:
      return geo + func >= n + 1;
  }
  return false;
}

inline std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::StatusQuo: return "status_quo";
    case Scenario::BicameralOnly: return "bicameral_only";
    case Scenario::Unicameral: return "unicameral";
  }
  return "?";
}

inline Scenario parse_scenario(std::string_view text) {
  if (text == "status_quo") return Scenario::StatusQuo;
  if (text == "bicameral_only") return Scenario::BicameralOnly;
  if (text == "unicameral") return Scenario::Unicameral;
  throw input_error("unknown scenario '" + std::string(text) +
                    "' (expected status_quo, bicameral_only or unicameral)");
}

}  // namespace quorumlab
