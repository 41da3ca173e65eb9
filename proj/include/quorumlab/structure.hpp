#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quorumlab/game.hpp"
#include "quorumlab/legco.hpp"

namespace quorumlab {

enum class ComparisonResult { Less, Equal, Greater, Incomparable };

inline std::string to_string(ComparisonResult r) {
  switch (r) {
    case ComparisonResult::Less: return "less";
    case ComparisonResult::Equal: return "equal";
    case ComparisonResult::Greater: return "greater";
    case ComparisonResult::Incomparable: return "incomparable";
  }
  return "?";
}

inline ComparisonResult combine(bool i_below_j, bool j_below_i) {
  if (i_below_j && j_below_i) return ComparisonResult::Equal;
  if (i_below_j) return ComparisonResult::Less;
  if (j_below_i) return ComparisonResult::Greater;
  return ComparisonResult::Incomparable;
}

// counts[k-1] = winning coalitions of size k that contain the player and in
// which the player is crucial.
struct CrucialVector {
  std::vector<BigInt> counts;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
  }

  friend bool operator==(const CrucialVector&, const CrucialVector&) = default;
};

namespace detail {

inline void check_player(const WinTable& table, PlayerId p) {
  if (p.value < 1 || p.value > table.players()) {
    throw input_error("player " + std::to_string(p.value) + " outside 1.." +
                      std::to_string(table.players()));
  }
}

inline std::uint64_t bit_of(PlayerId p) { return std::uint64_t{1} << (p.value - 1); }

}  // namespace detail

inline CrucialVector crucial_vector(const WinTable& table, PlayerId player) {
  detail::check_player(table, player);
  const std::uint64_t bit = detail::bit_of(player);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(table.players()), 0);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if ((mask & bit) == 0 || !table.wins(mask) || table.wins(mask ^ bit)) continue;
    ++counts[static_cast<std::size_t>(std::popcount(mask) - 1)];
  }
  CrucialVector out;
  for (auto c : counts) out.counts.emplace_back(c);
  return out;
}

inline CrucialVector crucial_vector(const Game& game, PlayerId player, const Limits& limits = {}) {
  return crucial_vector(WinTable(game, limits), player);
}

// Desirability: i <=_D j when U + j wins whenever U + i wins, over every U
// avoiding both players.
inline ComparisonResult compare_D(const WinTable& table, PlayerId i, PlayerId j) {
  detail::check_player(table, i);
  detail::check_player(table, j);
  if (i == j) throw input_error("compare_D needs two distinct players");
  const std::uint64_t bi = detail::bit_of(i);
  const std::uint64_t bj = detail::bit_of(j);
  bool i_below_j = true;
  bool j_below_i = true;
  for (std::uint64_t u = 0; u < table.size() && (i_below_j || j_below_i); ++u) {
    if ((u & (bi | bj)) != 0) continue;
    const bool with_i = table.wins(u | bi);
    const bool with_j = table.wins(u | bj);
    if (with_i && !with_j) i_below_j = false;
    if (with_j && !with_i) j_below_i = false;
  }
  return combine(i_below_j, j_below_i);
}

inline ComparisonResult compare_D(const Game& game, PlayerId i, PlayerId j, const Limits& limits = {}) {
  return compare_D(WinTable(game, limits), i, j);
}

// Weak desirability: componentwise order of crucial vectors.
inline ComparisonResult compare_d(const CrucialVector& vi, const CrucialVector& vj) {
  bool i_below_j = true;
  bool j_below_i = true;
  for (std::size_t k = 0; k < vi.counts.size(); ++k) {
    if (vi.counts[k] > vj.counts[k]) i_below_j = false;
    if (vj.counts[k] > vi.counts[k]) j_below_i = false;
  }
  return combine(i_below_j, j_below_i);
}

inline ComparisonResult compare_d(const WinTable& table, PlayerId i, PlayerId j) {
  if (i == j) throw input_error("compare_d needs two distinct players");
  return compare_d(crucial_vector(table, i), crucial_vector(table, j));
}

inline ComparisonResult compare_d(const Game& game, PlayerId i, PlayerId j, const Limits& limits = {}) {
  return compare_d(WinTable(game, limits), i, j);
}

// Two winning coalitions and a one-for-one exchange after which both lose.
struct SwapWitness {
  Coalition first;
  Coalition second;
  PlayerId out_of_first;   // in first, not in second
  PlayerId out_of_second;  // in second, not in first

  Coalition first_after() const { return first.without(out_of_first).with(out_of_second); }
  Coalition second_after() const { return second.without(out_of_second).with(out_of_first); }

  friend bool operator==(const SwapWitness&, const SwapWitness&) = default;
};

// Exhaustive search; the first witness in (first mask, second mask, i, j)
// order, or nullopt when the game is swap robust.
inline std::optional<SwapWitness> is_swap_robust(const WinTable& table) {
  std::vector<std::uint64_t> winning;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table.wins(mask)) winning.push_back(mask);
  }
  for (const auto s1 : winning) {
    for (const auto s2 : winning) {
      const std::uint64_t only1 = s1 & ~s2;
      const std::uint64_t only2 = s2 & ~s1;
      if (only1 == 0 || only2 == 0) continue;
      for (std::uint64_t a = only1; a != 0; a &= a - 1) {
        const std::uint64_t bi = a & (~a + 1);
        for (std::uint64_t b = only2; b != 0; b &= b - 1) {
          const std::uint64_t bj = b & (~b + 1);
          if (!table.wins((s1 ^ bi) | bj) && !table.wins((s2 ^ bj) | bi)) {
            return SwapWitness{Coalition::from_mask(s1), Coalition::from_mask(s2),
                               PlayerId(std::countr_zero(bi) + 1), PlayerId(std::countr_zero(bj) + 1)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<SwapWitness> is_swap_robust(const Game& game, const Limits& limits = {}) {
  return is_swap_robust(WinTable(game, limits));
}

// <=_D total over all player pairs.
inline bool is_complete(const WinTable& table) {
  for (int i = 1; i <= table.players(); ++i) {
    for (int j = i + 1; j <= table.players(); ++j) {
      if (compare_D(table, PlayerId(i), PlayerId(j)) == ComparisonResult::Incomparable) return false;
    }
  }
  return true;
}

inline bool is_complete(const Game& game, const Limits& limits = {}) {
  return is_complete(WinTable(game, limits));
}

// <=_d total over all player pairs.
inline bool is_weakly_complete(const WinTable& table) {
  std::vector<CrucialVector> vectors;
  for (int p = 1; p <= table.players(); ++p) vectors.push_back(crucial_vector(table, PlayerId(p)));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (compare_d(vectors[i], vectors[j]) == ComparisonResult::Incomparable) return false;
    }
  }
  return true;
}

inline bool is_weakly_complete(const Game& game, const Limits& limits = {}) {
  return is_weakly_complete(WinTable(game, limits));
}

struct ClauseResult {
  bool applicable = true;
  bool holds = false;
  std::string note;

  bool passed() const { return !applicable || holds; }
};

// Clauses about the status-quo game of size n:
//  (a) members of one chamber are D-equal;
//  (b) 1 and n+1 are d-equal but not D-comparable;
//  (c) n even: every ordinary member is strictly D-below the government;
//  (d) n odd, n > 4: no ordinary member is d-comparable with the government.
// `holds` is always computed; `applicable` records the range the statement
// covers.
struct Proposition1Report {
  int n = 0;
  ClauseResult a, b, c, d;

  bool passed() const { return a.passed() && b.passed() && c.passed() && d.passed(); }
};

inline Proposition1Report proposition1_report(int n, const Limits& limits = {}) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  const WinTable table(legco_game(n), limits);
  const PlayerId gov(2 * n + 1);
  Proposition1Report r;
  r.n = n;

  r.a.holds = true;
  for (int block = 0; block < 2; ++block) {
    const int base = block * n;
    for (int j = 1; j <= n && r.a.holds; ++j) {
      for (int k = j + 1; k <= n && r.a.holds; ++k) {
        if (compare_D(table, PlayerId(base + j), PlayerId(base + k)) != ComparisonResult::Equal) {
          r.a.holds = false;
          r.a.note = "players " + std::to_string(base + j) + " and " + std::to_string(base + k) +
                     " are not D-equal";
        }
      }
    }
  }

  {
    const auto weak = compare_d(table, PlayerId(1), PlayerId(n + 1));
    const auto strong = compare_D(table, PlayerId(1), PlayerId(n + 1));
    r.b.holds = weak == ComparisonResult::Equal && strong == ComparisonResult::Incomparable;
    r.b.note = "1 vs n+1: d " + to_string(weak) + ", D " + to_string(strong);
    if (n <= 2) {
      r.b.applicable = false;
      r.b.note += "; out of theorem range (the game is weighted for n <= 2)";
    }
  }

  {
    r.c.holds = true;
    for (int j = 1; j <= 2 * n && r.c.holds; ++j) {
      const auto cmp = compare_D(table, PlayerId(j), gov);
      if (cmp != ComparisonResult::Less) {
        r.c.holds = false;
        r.c.note = "player " + std::to_string(j) + " vs government: D " + to_string(cmp);
      }
    }
    if (n % 2 != 0) {
      r.c.applicable = false;
      r.c.note = "out of theorem range (n odd)";
    } else if (n < 4) {
      r.c.applicable = false;
      r.c.note += "; out of theorem range (the game is weighted for n <= 2)";
    }
  }

  {
    r.d.holds = true;
    const auto gov_vector = crucial_vector(table, gov);
    for (int j = 1; j <= 2 * n && r.d.holds; ++j) {
      const auto cmp = compare_d(crucial_vector(table, PlayerId(j)), gov_vector);
      if (cmp != ComparisonResult::Incomparable) {
        r.d.holds = false;
        r.d.note = "player " + std::to_string(j) + " vs government: d " + to_string(cmp);
      }
    }
    if (n % 2 == 0 || n <= 4) {
      r.d.applicable = false;
      r.d.note = "out of theorem range";
    }
  }
  return r;
}

}  // namespace quorumlab
