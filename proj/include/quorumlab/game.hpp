#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quorumlab/coalition.hpp"
#include "quorumlab/errors.hpp"
#include "quorumlab/legco_rules.hpp"
#include "quorumlab/rational.hpp"

namespace quorumlab {

// Budgets for exhaustive work.
struct Limits {
  int max_players = 26;                          // 2^max_players coalitions
  std::uint64_t max_lp_cases = std::uint64_t{1} << 20;  // row assignments in refutations
};

inline void require_enumerable(int players, const Limits& limits, const std::string& what) {
  if (players > limits.max_players || players > 62) {
    throw capacity_error(what + ": " + std::to_string(players) +
                         " players exceeds the enumeration cap of " +
                         std::to_string(std::min(limits.max_players, 62)));
  }
}

// One threshold/weight row: S wins the row iff sum of w_j over S >= q.
struct MatrixRow {
  Rational threshold;
  std::vector<Rational> weights;

  friend bool operator==(const MatrixRow&, const MatrixRow&) = default;
};

// Intersection of m weighted games over the same player set.
class AmalgamatedMatrix {
 public:
  AmalgamatedMatrix() = default;

  explicit AmalgamatedMatrix(std::vector<MatrixRow> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw input_error("amalgamated matrix needs at least one row");
    const std::size_t width = rows_.front().weights.size();
    if (width == 0 || width > static_cast<std::size_t>(kMaxPlayers)) {
      throw input_error("matrix width must be in 1.." + std::to_string(kMaxPlayers));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].weights.size() != width) {
        throw input_error("matrix row " + std::to_string(i + 1) + " has width " +
                          std::to_string(rows_[i].weights.size()) + ", expected " +
                          std::to_string(width));
      }
      for (const auto& w : rows_[i].weights) {
        if (w < 0) throw input_error("negative weight in matrix row " + std::to_string(i + 1));
      }
    }
  }

  int players() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().weights.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<MatrixRow>& rows() const { return rows_; }
  const MatrixRow& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

  AmalgamatedMatrix stacked_with(const AmalgamatedMatrix& other) const {
    if (other.players() != players()) throw input_error("cannot stack matrices of different widths");
    auto rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return AmalgamatedMatrix(std::move(rows));
  }

  friend bool operator==(const AmalgamatedMatrix&, const AmalgamatedMatrix&) = default;

 private:
  std::vector<MatrixRow> rows_;
};

// Winning set of an explicitly listed game, sorted by mask value.
struct ExplicitWinning {
  int players = 0;
  std::vector<Coalition> winning;

  friend bool operator==(const ExplicitWinning&, const ExplicitWinning&) = default;
};

struct MonotonicityViolation {
  enum class Kind {
    MissingSuperset,      // `winning` wins, `losing` = winning + one player does not
    EmptyCoalitionWins,   // both fields hold the empty coalition
    GrandCoalitionLoses,  // both fields hold the grand coalition
  };
  Kind kind = Kind::MissingSuperset;
  Coalition winning;
  Coalition losing;

  friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

// Violations of the simple-game axioms for a listed winning set over players
// 1..players. Superset-closure is checked on single-player extensions, which
// is equivalent to full closure.
inline std::vector<MonotonicityViolation> check_monotone(std::vector<Coalition> winning, int players) {
  if (players < 1 || players > kMaxPlayers) throw input_error("player count out of range");
  const Coalition grand = Coalition::grand(players);
  for (const auto& s : winning) {
    if (!s.subset_of(grand)) {
      throw input_error("coalition " + s.to_string() + " mentions players outside 1.." +
                        std::to_string(players));
    }
  }
  std::sort(winning.begin(), winning.end());
  winning.erase(std::unique(winning.begin(), winning.end()), winning.end());
  auto is_winning = [&](const Coalition& c) {
    return std::binary_search(winning.begin(), winning.end(), c);
  };

  std::vector<MonotonicityViolation> out;
  if (is_winning(Coalition{})) {
    out.push_back({MonotonicityViolation::Kind::EmptyCoalitionWins, Coalition{}, Coalition{}});
  }
  // With a non-empty winning set a missing grand coalition already shows up
  // as a broken superset chain below.
  if (!is_winning(grand) && winning.empty()) {
    out.push_back({MonotonicityViolation::Kind::GrandCoalitionLoses, grand, grand});
  }
  for (const auto& s : winning) {
    for (int p = 1; p <= players; ++p) {
      if (s.contains(PlayerId(p))) continue;
      const Coalition t = s.with(PlayerId(p));
      if (!is_winning(t)) out.push_back({MonotonicityViolation::Kind::MissingSuperset, s, t});
    }
  }
  return out;
}

namespace detail {

// Row rescaled to integers by the lcm of its denominators.
struct IntegerRows {
  bool small = true;  // every row fits the int64 path
  std::vector<std::int64_t> q64;
  std::vector<std::vector<std::int64_t>> w64;
  std::vector<BigInt> q;
  std::vector<std::vector<BigInt>> w;
};

inline IntegerRows integerize(const AmalgamatedMatrix& m) {
  IntegerRows out;
  const BigInt cap = BigInt(1) << 61;
  for (const auto& row : m.rows()) {
    BigInt scale = denominator_of(row.threshold);
    for (const auto& w : row.weights) {
      const BigInt d = denominator_of(w);
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    out.q.push_back(numerator_of(row.threshold) * (scale / denominator_of(row.threshold)));
    std::vector<BigInt> ws;
    BigInt total = 0;
    for (const auto& w : row.weights) {
      ws.push_back(numerator_of(w) * (scale / denominator_of(w)));
      total += ws.back();
    }
    if (total >= cap || boost::multiprecision::abs(out.q.back()) >= cap) out.small = false;
    out.w.push_back(std::move(ws));
  }
  if (out.small) {
    for (std::size_t i = 0; i < out.q.size(); ++i) {
      out.q64.push_back(out.q[i].convert_to<std::int64_t>());
      std::vector<std::int64_t> ws;
      for (const auto& w : out.w[i]) ws.push_back(w.convert_to<std::int64_t>());
      out.w64.push_back(std::move(ws));
    }
  }
  return out;
}

}  // namespace detail

// A monotone simple game: v(empty) = 0, v(grand) = 1, v superset-monotone.
// Immutable after construction.
class Game {
 public:
  enum class Kind { Explicit, Weighted, Legco };

  static Game explicit_game(int players, std::vector<Coalition> winning) {
    const auto violations = check_monotone(winning, players);
    if (!violations.empty()) {
      const auto& v = violations.front();
      switch (v.kind) {
        case MonotonicityViolation::Kind::EmptyCoalitionWins:
          throw input_error("explicit game: the empty coalition cannot win");
        case MonotonicityViolation::Kind::GrandCoalitionLoses:
          throw input_error("explicit game: the grand coalition must win");
        case MonotonicityViolation::Kind::MissingSuperset:
          throw input_error("explicit game is not monotone: " + v.winning.to_string() +
                            " wins but " + v.losing.to_string() + " does not");
      }
    }
    std::sort(winning.begin(), winning.end());
    winning.erase(std::unique(winning.begin(), winning.end()), winning.end());
    Game g;
    g.players_ = players;
    g.def_ = ExplicitWinning{players, std::move(winning)};
    return g;
  }

  static Game weighted(AmalgamatedMatrix matrix) {
    if (matrix.row_count() == 0) throw input_error("weighted game needs a non-empty matrix");
    Game g;
    g.players_ = matrix.players();
    g.rows_ = detail::integerize(matrix);
    g.def_ = std::move(matrix);
    if (g.eval(Coalition{})) throw input_error("weighted game: the empty coalition wins");
    if (!g.eval(Coalition::grand(g.players_))) {
      throw input_error("weighted game: the grand coalition loses");
    }
    return g;
  }

  static Game legco(int n, Scenario scenario) {
    if (n < 1) throw input_error("Legco size n must be at least 1");
    if (2 * n + 1 > kMaxPlayers) throw input_error("Legco size n too large for " +
                                                   std::to_string(kMaxPlayers) + " players");
    Game g;
    g.players_ = 2 * n + 1;
    g.def_ = LegcoSpec{n, scenario};
    if (n <= 31) {
      g.geo_mask_ = (std::uint64_t{1} << n) - 1;
      g.func_mask_ = g.geo_mask_ << n;
      g.gov_mask_ = std::uint64_t{1} << (2 * n);
    }
    return g;
  }

  int players() const { return players_; }

  Kind kind() const {
    switch (def_.index()) {
      case 0: return Kind::Explicit;
      case 1: return Kind::Weighted;
      default: return Kind::Legco;
    }
  }

  const ExplicitWinning* as_explicit() const { return std::get_if<ExplicitWinning>(&def_); }
  const AmalgamatedMatrix* as_weighted() const { return std::get_if<AmalgamatedMatrix>(&def_); }
  const LegcoSpec* as_legco() const { return std::get_if<LegcoSpec>(&def_); }

  bool eval(const Coalition& s) const {
    if (s.max_player() > players_) {
      throw input_error("coalition " + s.to_string() + " does not fit a game of " +
                        std::to_string(players_) + " players");
    }
    if (const auto* ex = as_explicit()) {
      return std::binary_search(ex->winning.begin(), ex->winning.end(), s);
    }
    if (as_weighted() != nullptr) {
      if (s.fits_word()) return eval_weighted(s.low_word());
      return eval_weighted_members(s.members());
    }
    const auto& lg = *as_legco();
    return legco_wins(lg.n, lg.scenario, s.count_in(1, lg.n), s.count_in(lg.n + 1, 2 * lg.n),
                      s.contains(PlayerId(2 * lg.n + 1)));
  }

  // Unchecked fast path for games of at most 62 players.
  bool eval_mask(std::uint64_t mask) const {
    if (const auto* lg = as_legco()) {
      return legco_wins(lg->n, lg->scenario, std::popcount(mask & geo_mask_),
                        std::popcount(mask & func_mask_), (mask & gov_mask_) != 0);
    }
    if (as_weighted() != nullptr) return eval_weighted(mask);
    const auto& w = as_explicit()->winning;
    return std::binary_search(w.begin(), w.end(), Coalition::from_mask(mask));
  }

  friend bool operator==(const Game& a, const Game& b) {
    return a.players_ == b.players_ && a.def_ == b.def_;
  }

 private:
  Game() = default;

  bool eval_weighted(std::uint64_t mask) const {
    if (rows_.small) {
      for (std::size_t r = 0; r < rows_.q64.size(); ++r) {
        std::int64_t sum = 0;
        std::uint64_t bits = mask;
        const auto& w = rows_.w64[r];
        while (bits != 0) {
          sum += w[static_cast<std::size_t>(std::countr_zero(bits))];
          bits &= bits - 1;
        }
        if (sum < rows_.q64[r]) return false;
      }
      return true;
    }
    std::vector<int> members;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      members.push_back(std::countr_zero(bits) + 1);
    }
    return eval_weighted_members(members);
  }

  bool eval_weighted_members(const std::vector<int>& members) const {
    for (std::size_t r = 0; r < rows_.q.size(); ++r) {
      BigInt sum = 0;
      for (int p : members) sum += rows_.w[r][static_cast<std::size_t>(p - 1)];
      if (sum < rows_.q[r]) return false;
    }
    return true;
  }

  int players_ = 0;
  std::variant<ExplicitWinning, AmalgamatedMatrix, LegcoSpec> def_;
  detail::IntegerRows rows_;
  std::uint64_t geo_mask_ = 0;
  std::uint64_t func_mask_ = 0;
  std::uint64_t gov_mask_ = 0;
};

// v evaluated once over all 2^N coalitions; the memo behind every exhaustive scan.
class WinTable {
 public:
  WinTable(const Game& game, const Limits& limits = {}) : players_(game.players()) {
    require_enumerable(players_, limits, "exhaustive enumeration");
    const std::uint64_t count = std::uint64_t{1} << players_;
    wins_.resize(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) wins_[mask] = game.eval_mask(mask);
  }

  int players() const { return players_; }
  std::uint64_t size() const { return wins_.size(); }
  bool wins(std::uint64_t mask) const { return wins_[mask]; }

 private:
  int players_;
  std::vector<bool> wins_;
};

inline std::vector<Coalition> minimal_winning(const WinTable& table) {
  std::vector<Coalition> out;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (!table.wins(mask)) continue;
    bool minimal = true;
    for (std::uint64_t bits = mask; bits != 0 && minimal; bits &= bits - 1) {
      if (table.wins(mask ^ (bits & (~bits + 1)))) minimal = false;
    }
    if (minimal) out.push_back(Coalition::from_mask(mask));
  }
  return out;
}

inline std::vector<Coalition> maximal_losing(const WinTable& table) {
  std::vector<Coalition> out;
  const std::uint64_t full = table.size() - 1;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table.wins(mask)) continue;
    bool maximal = true;
    for (std::uint64_t bits = full & ~mask; bits != 0 && maximal; bits &= bits - 1) {
      if (!table.wins(mask | (bits & (~bits + 1)))) maximal = false;
    }
    if (maximal) out.push_back(Coalition::from_mask(mask));
  }
  return out;
}

inline std::vector<Coalition> minimal_winning(const Game& game, const Limits& limits = {}) {
  return minimal_winning(WinTable(game, limits));
}

inline std::vector<Coalition> maximal_losing(const Game& game, const Limits& limits = {}) {
  return maximal_losing(WinTable(game, limits));
}

struct GameComparison {
  bool equal = true;
  std::optional<Coalition> witness;  // lowest-mask coalition where the games disagree
};

inline GameComparison games_equal(const Game& a, const Game& b, const Limits& limits = {}) {
  if (a.players() != b.players()) {
    throw input_error("cannot compare games of " + std::to_string(a.players()) + " and " +
                      std::to_string(b.players()) + " players");
  }
  require_enumerable(a.players(), limits, "games_equal");
  const std::uint64_t count = std::uint64_t{1} << a.players();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (a.eval_mask(mask) != b.eval_mask(mask)) return {false, Coalition::from_mask(mask)};
  }
  return {true, std::nullopt};
}

// Same game, listed explicitly.
inline Game to_explicit(const Game& game, const Limits& limits = {}) {
  const WinTable table(game, limits);
  std::vector<Coalition> winning;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table.wins(mask)) winning.push_back(Coalition::from_mask(mask));
  }
  return Game::explicit_game(game.players(), std::move(winning));
}

// Coalitions winning in both games. Two weighted games stack their rows;
// anything else is materialized explicitly.
inline Game intersection(const Game& a, const Game& b, const Limits& limits = {}) {
  if (a.players() != b.players()) throw input_error("cannot intersect games of different sizes");
  if (a.as_weighted() != nullptr && b.as_weighted() != nullptr) {
    return Game::weighted(a.as_weighted()->stacked_with(*b.as_weighted()));
  }
  require_enumerable(a.players(), limits, "intersection");
  std::vector<Coalition> winning;
  const std::uint64_t count = std::uint64_t{1} << a.players();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (a.eval_mask(mask) && b.eval_mask(mask)) winning.push_back(Coalition::from_mask(mask));
  }
  return Game::explicit_game(a.players(), std::move(winning));
}

}  // namespace quorumlab
