#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quorumlab/game.hpp"
#include "quorumlab/legco.hpp"
#include "quorumlab/rational.hpp"

namespace quorumlab {

// b[i-1] = winning coalitions containing i whose removal of i makes them lose.
struct SwingCounts {
  std::vector<BigInt> b;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& v : b) sum += v;
    return sum;
  }
};

struct IndexVector {
  std::vector<Rational> values;

  Rational sum() const {
    Rational s = 0;
    for (const auto& v : values) s += v;
    return s;
  }
};

inline SwingCounts banzhaf_enum(const WinTable& table) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(table.players()), 0);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (!table.wins(mask)) continue;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::uint64_t bit = bits & (~bits + 1);
      if (!table.wins(mask ^ bit)) ++counts[static_cast<std::size_t>(std::countr_zero(bit))];
    }
  }
  SwingCounts out;
  for (auto c : counts) out.b.emplace_back(c);
  return out;
}

inline SwingCounts banzhaf_enum(const Game& game, const Limits& limits = {}) {
  return banzhaf_enum(WinTable(game, limits));
}

// Normalized Banzhaf index b_i / sum b.
inline IndexVector banzhaf_index(const SwingCounts& swings) {
  const BigInt total = swings.total();
  if (total == 0) throw std::logic_error("no swings: not a simple game");
  IndexVector out;
  for (const auto& b : swings.b) out.values.emplace_back(Rational(b, total));
  return out;
}

// Shapley-Shubik by coalitions: player i gets (|S|-1)!(N-|S|)!/N! for every
// winning S in which i is crucial.
inline IndexVector ssi_enum(const WinTable& table) {
  const int n = table.players();
  std::vector<BigInt> weight(static_cast<std::size_t>(n + 1));
  for (int size = 1; size <= n; ++size) {
    weight[static_cast<std::size_t>(size)] = factorial(size - 1) * factorial(n - size);
  }
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (!table.wins(mask)) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::uint64_t bit = bits & (~bits + 1);
      if (!table.wins(mask ^ bit)) ++by_size[static_cast<std::size_t>(std::countr_zero(bit))][size];
    }
  }
  const BigInt total = factorial(n);
  IndexVector out;
  for (int i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (int size = 1; size <= n; ++size) {
      acc += weight[static_cast<std::size_t>(size)] * by_size[static_cast<std::size_t>(i)][static_cast<std::size_t>(size)];
    }
    out.values.emplace_back(Rational(acc, total));
  }
  return out;
}

inline IndexVector ssi_enum(const Game& game, const Limits& limits = {}) {
  return ssi_enum(WinTable(game, limits));
}

namespace detail {

inline BigInt exact_half(const BigInt& v) {
  if (v % 2 != 0) throw std::logic_error("closed form expected an even term");
  return v / 2;
}

inline BigInt exact_quarter(const BigInt& v) {
  if (v % 4 != 0) throw std::logic_error("closed form expected a multiple of 4");
  return v / 4;
}

}  // namespace detail

struct BanzhafClosed {
  BigInt ordinary;    // b(j), 1 <= j <= 2n
  BigInt government;  // b(2n+1)
};

// Swing counts of the status-quo game by parity-split closed forms.
inline BanzhafClosed banzhaf_closed(int n) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  BanzhafClosed out;
  const BigInt base = binomial(2 * n - 1, n);
  const BigInt half_central = detail::exact_half(binomial(2 * n, n));
  const BigInt quarter_power = pow2(2 * n - 2);
  if (n % 2 == 1) {
    out.ordinary = base + binomial(n - 1, (n - 1) / 2) * pow2(n - 1);
    out.government = quarter_power - half_central;
  } else {
    const BigInt mid = binomial(n, n / 2);
    out.ordinary = base + binomial(n - 1, n / 2) * (pow2(n - 1) - detail::exact_half(mid));
    out.government = quarter_power - half_central + pow2(n - 1) * mid - detail::exact_quarter(mid * mid);
  }
  return out;
}

inline Rational bi_ratio(int n) {
  const auto b = banzhaf_closed(n);
  return Rational(b.government, b.ordinary);
}

// Shapley-Shubik index of the government player:
// 2/(2n+1) * sum_{r=1}^{floor(n/2)} sum_{s=n+1-r}^{n} C(r+s,r) C(2n-r-s,n-r) / C(2n,n).
// Binomials are stepped incrementally along s.
inline Rational ssi_gov_closed(int n) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  BigInt sum = 0;
  for (int r = 1; r <= n / 2; ++r) {
    int s = n + 1 - r;
    BigInt left = binomial(r + s, r);            // C(r+s, r)
    BigInt right = binomial(2 * n - r - s, n - r);  // C(2n-r-s, n-r)
    for (;;) {
      sum += left * right;
      if (s == n) break;
      // C(r+s+1, r) = C(r+s, r) (r+s+1)/(s+1)
      left = left * (r + s + 1) / (s + 1);
      // C(m-1, a) = C(m, a) (m-a)/m with m = 2n-r-s, a = n-r
      const int m = 2 * n - r - s;
      right = right * (m - (n - r)) / m;
      ++s;
    }
  }
  return Rational(2 * sum, BigInt(2 * n + 1) * binomial(2 * n, n));
}

inline Rational ssi_ordinary_closed(int n) { return (1 - ssi_gov_closed(n)) / (2 * n); }

inline Rational ssi_ratio_closed(int n) {
  const Rational gov = ssi_gov_closed(n);
  return 2 * n * gov / (1 - gov);
}

// Stirling-based approximation of b(2n+1)/b(1).
inline double bi_ratio_asymptotic(int n) {
  const double lead = std::sqrt(std::numbers::pi / 2.0) * std::sqrt(static_cast<double>(n)) *
                      (std::numbers::sqrt2 - 1.0);
  if (n % 2 == 1) return lead - std::numbers::sqrt2 * (std::numbers::sqrt2 - 1.0);
  return lead + std::numbers::sqrt2 - 1.0;
}

struct SweepRow {
  int n = 0;
  BigInt b_ord;
  BigInt b_gov;
  Rational bi_ratio;
  double bi_ratio_asymptotic = 0.0;
  Rational ssi_gov;
  Rational ssi_ord;
  Rational ssi_ratio;
};

inline SweepRow sweep_row(int n) {
  SweepRow row;
  row.n = n;
  const auto b = banzhaf_closed(n);
  row.b_ord = b.ordinary;
  row.b_gov = b.government;
  row.bi_ratio = Rational(b.government, b.ordinary);
  row.bi_ratio_asymptotic = quorumlab::bi_ratio_asymptotic(n);
  row.ssi_gov = ssi_gov_closed(n);
  row.ssi_ord = (1 - row.ssi_gov) / (2 * n);
  row.ssi_ratio = 2 * n * row.ssi_gov / (1 - row.ssi_gov);
  return row;
}

inline std::vector<SweepRow> sweep(int from, int to, int step = 1) {
  if (from < 1 || step < 1 || to < from) throw input_error("empty or invalid sweep range");
  std::vector<SweepRow> rows;
  for (int n = from; n <= to; n += step) rows.push_back(sweep_row(n));
  return rows;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw input_error("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto k = static_cast<double>(points.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

struct ProbeRow {
  int n = 0;
  double lambda_estimate = 0.0;  // SSI(2n+1) * sqrt(n)
  double ssi_ratio = 0.0;        // SSI(2n+1) / SSI(1)
};

struct ConjectureProbe {
  std::vector<ProbeRow> rows;
  double fitted_exponent = 0.0;  // slope of log ssi_ratio vs log n, all n
  double fitted_exponent_odd = 0.0;
  double fitted_exponent_even = 0.0;
};

inline ConjectureProbe conjecture_probe(int from, int to) {
  if (from < 1 || to < from + 1) throw input_error("probe range needs at least two values of n");
  ConjectureProbe probe;
  std::vector<std::pair<double, double>> all, odd, even;
  for (int n = from; n <= to; ++n) {
    const Rational gov = ssi_gov_closed(n);
    const double ratio = to_double(2 * n * gov / (1 - gov));
    probe.rows.push_back({n, to_double(gov) * std::sqrt(static_cast<double>(n)), ratio});
    all.emplace_back(n, ratio);
    (n % 2 == 1 ? odd : even).emplace_back(n, ratio);
  }
  probe.fitted_exponent = loglog_slope(all);
  probe.fitted_exponent_odd = odd.size() >= 2 ? loglog_slope(odd) : 0.0;
  probe.fitted_exponent_even = even.size() >= 2 ? loglog_slope(even) : 0.0;
  return probe;
}

}  // namespace quorumlab
