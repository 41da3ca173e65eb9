#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quorumlab/game.hpp"

namespace quorumlab {

// Player blocks of a Legco-shaped game with 2n+1 players.
struct PlayerCategories {
  int n = 1;

  Coalition geo() const { return Coalition::range(1, n); }
  Coalition func() const { return Coalition::range(n + 1, 2 * n); }
  PlayerId gov() const { return PlayerId(2 * n + 1); }
  int players() const { return 2 * n + 1; }
};

inline Game legco_game(int n, Scenario scenario = Scenario::StatusQuo) {
  return Game::legco(n, scenario);
}

namespace detail {

inline MatrixRow block_row(int n, Rational q, Rational geo, Rational func, Rational gov) {
  MatrixRow row{std::move(q), {}};
  row.weights.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int i = 0; i < n; ++i) row.weights.push_back(geo);
  for (int i = 0; i < n; ++i) row.weights.push_back(func);
  row.weights.push_back(std::move(gov));
  return row;
}

}  // namespace detail

// Realizations of the status-quo game: one row for n <= 2, two rows for
// n = 3, 4, and the three-row majority / geo-or-government / func-or-government
// matrix for n >= 5.
inline AmalgamatedMatrix paper_realization(int n) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  using detail::block_row;
  switch (n) {
    case 1: return AmalgamatedMatrix({block_row(1, 2, 1, 1, 0)});
    case 2: return AmalgamatedMatrix({block_row(2, 4, 1, 1, 1)});
    case 3: return AmalgamatedMatrix({block_row(3, 10, 2, 3, 1), block_row(3, 10, 3, 2, 1)});
    case 4: return AmalgamatedMatrix({block_row(4, 15, 2, 3, 4), block_row(4, 15, 3, 2, 4)});
    default: break;
  }
  const Rational half_plus(n + 1, 2);
  const Rational gov_weight(n, 2);
  return AmalgamatedMatrix({
      block_row(n, n + 1, 1, 1, 0),
      block_row(n, half_plus, 1, 0, gov_weight),
      block_row(n, half_plus, 0, 1, gov_weight),
  });
}

// Natural realization for each scenario: paper_realization for the status
// quo, majority/majority rows for the split-vote-only chamber, one majority
// row for the unicameral one.
inline AmalgamatedMatrix scenario_realization(int n, Scenario scenario) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  using detail::block_row;
  switch (scenario) {
    case Scenario::StatusQuo:
      return paper_realization(n);
    case Scenario::BicameralOnly:
      return AmalgamatedMatrix({block_row(n, chamber_majority(n), 1, 0, 0),
                                block_row(n, chamber_majority(n), 0, 1, 0)});
    case Scenario::Unicameral:
      return AmalgamatedMatrix({block_row(n, n + 1, 1, 1, 0)});
  }
  throw input_error("unknown scenario");
}

struct FactorDecomposition {
  enum class Claim { CDimension, WDimension };
  std::vector<Game> factors;
  Claim claim = Claim::CDimension;
};

// Two-factor decompositions of the status-quo game for n >= 5. Even n gives
// two complete games (listed explicitly, so 2n+1 must be within the cap);
// odd n gives the majority row and the two government-or-chamber rows.
inline FactorDecomposition theorem2_factors(int n, const Limits& limits = {}) {
  if (n < 5) throw input_error("two-factor decomposition is defined for n >= 5");
  using detail::block_row;
  if (n % 2 == 1) {
    const Rational half_plus(n + 1, 2);
    const Rational gov_weight(n, 2);
    return {{Game::weighted(AmalgamatedMatrix({block_row(n, n + 1, 1, 1, 0)})),
             Game::weighted(AmalgamatedMatrix({block_row(n, half_plus, 1, 0, gov_weight),
                                               block_row(n, half_plus, 0, 1, gov_weight)}))},
            FactorDecomposition::Claim::WDimension};
  }
  const int k = n / 2;
  const int players = 2 * n + 1;
  require_enumerable(players, limits, "even-n factor construction");
  auto system = [&](bool geo_side) {
    std::vector<Coalition> winning;
    const std::uint64_t count = std::uint64_t{1} << players;
    const std::uint64_t geo_mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t func_mask = geo_mask << n;
    const std::uint64_t gov_mask = std::uint64_t{1} << (2 * n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const int geo = std::popcount(mask & geo_mask);
      const int func = std::popcount(mask & func_mask);
      const bool wins = (mask & gov_mask) != 0
                            ? geo + func >= 2 * k + 1
                            : geo + func >= 2 * k + 2 && (geo_side ? geo : func) >= k + 1;
      if (wins) winning.push_back(Coalition::from_mask(mask));
    }
    return Game::explicit_game(players, std::move(winning));
  };
  return {{system(true), system(false)}, FactorDecomposition::Claim::CDimension};
}

// A coalition named in the impossibility and non-robustness arguments, with
// the outcome the argument relies on in the status-quo game.
struct ProofCoalition {
  std::string name;
  Coalition members;
  bool expected_winning = false;
  std::string role;
};

namespace detail {

inline Coalition span(int first, int last) { return Coalition::range(first, last); }

inline std::vector<ProofCoalition> swap_catalogue(int n) {
  const int h = n / 2;
  const int g = 2 * n + 1;
  const int c = (n + 1) / 2;
  std::vector<ProofCoalition> out{
      {"S_swap", span(1, h + 1) | span(n + 1, n + h + 1), true,
       "winning; swap its member h+1 out"},
      {"S'_swap", span(1, h) | Coalition::of({h + 2}) | span(n + 1, n + h) | Coalition::of({n + h + 2}),
       true, "winning; swap its member n+h+2 out"},
      {"swapped_1", span(1, h) | span(n + 1, n + h + 2), false,
       "S_swap with h+1 replaced by n+h+2"},
      {"swapped_2", span(1, h + 2) | span(n + 1, n + h), false,
       "S'_swap with n+h+2 replaced by h+1"},
      {"geo_heavy", span(1, n) | span(n + 1, n + h), false,
       "all geo members, func minority"},
      {"gov_geo_heavy", span(1, c + 1) | span(n + 1, n + h) | Coalition::of({g}), true,
       "government plus n+1 ordinary members"},
      {"gov_func", Coalition::of({1}) | span(n + 1, 2 * n) | Coalition::of({g}), true,
       "government, one geo member, all func members"},
  };
  if (n >= 5) {
    out.push_back({"two_row_contradiction", span(1, 2) | span(n + 1, n + h + 1) | Coalition::of({g}),
                   false, "h+3 < n+1 ordinary members with the government"});
  }
  return out;
}

inline std::vector<ProofCoalition> exchange_catalogue(int n) {
  const int k = (n - 1) / 2;
  const int g = 2 * n + 1;
  auto one = [](int p) { return Coalition::of({p}); };
  return {
      {"W1", span(1, k + 1) | span(n + 1, n + k + 1), true, "common source of every exchange"},
      {"W2", span(1, k) | one(k + 2) | span(n + 1, n + k) | one(n + k + 2), true,
       "exchange k+1 <-> n+k+2 with W1 gives L1, L2"},
      {"L1", span(1, k) | span(n + 1, n + k + 2), false, "W1 - {k+1} + {n+k+2}"},
      {"L2", span(1, k + 2) | span(n + 1, n + k), false, "W2 - {n+k+2} + {k+1}"},
      {"W3", span(1, k - 1) | one(k + 1) | one(k + 2) | span(n + 1, n + k) | one(n + k + 2), true,
       "exchange k <-> n+k+2 with W1 gives L3, L2"},
      {"L3", span(1, k - 1) | one(k + 1) | span(n + 1, n + k + 2), false, "W1 - {k} + {n+k+2}"},
      {"W4", span(1, k) | one(k + 2) | span(n + 1, n + k) | one(n + k + 3), true,
       "exchange k+1 <-> n+k+3 with W1 gives L4, L2"},
      {"L4", span(1, k) | span(n + 1, n + k + 1) | one(n + k + 3), false, "W1 - {k+1} + {n+k+3}"},
      {"W5", span(1, k) | one(k + 2) | one(k + 3) | span(n + 1, n + k) | one(g), true,
       "exchange 2n+1 <-> k+1 with W1 gives L5, L6"},
      {"L5", span(1, k + 3) | span(n + 1, n + k), false, "W5 - {2n+1} + {k+1}"},
      {"L6", span(1, k) | span(n + 1, n + k + 1) | one(g), false, "W1 - {k+1} + {2n+1}"},
      {"W6", span(1, k - 1) | span(n + 1, n + k + 3) | one(g), true,
       "exchange 2n+1 <-> k+1 with W1 gives L7, L6"},
      {"L7", span(1, k - 1) | one(k + 1) | span(n + 1, n + k + 3), false, "W6 - {2n+1} + {k+1}"},
      // The L7 source as printed, with n+k+2 in place of n+k+3, has only n
      // ordinary members and loses; kept to document the discrepancy.
      {"W6_printed", span(1, k - 1) | span(n + 1, n + k + 2) | one(g), false,
       "printed L7 source; has n ordinary members, so it loses"},
  };
}

}  // namespace detail

// Every catalogued coalition valid for this n. The exchange chain W1..W6 /
// L1..L7 needs odd n >= 5, the swap pair needs n >= 3.
inline std::vector<ProofCoalition> proof_catalogue(int n) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  std::vector<ProofCoalition> out{
      {"U", Coalition::range(n + 1, 2 * n), false, "all functional members"}};
  if (n >= 3) {
    auto swaps = detail::swap_catalogue(n);
    out.insert(out.end(), swaps.begin(), swaps.end());
  }
  if (n >= 5 && n % 2 == 1) {
    auto chain = detail::exchange_catalogue(n);
    out.insert(out.end(), chain.begin(), chain.end());
  }
  return out;
}

inline Coalition proof_coalition(int n, std::string_view name) {
  for (const auto& entry : proof_catalogue(n)) {
    if (entry.name == name) return entry.members;
  }
  throw input_error("no catalogued coalition '" + std::string(name) + "' for n = " + std::to_string(n));
}

}  // namespace quorumlab
