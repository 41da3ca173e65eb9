#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quorumlab/rational.hpp"

namespace quorumlab::lp {

// { x >= 0 : A x <= b } over the rationals.
struct System {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::size_t variables = 0;

  void add(std::vector<Rational> row, Rational rhs) {
    if (row.size() != variables) throw std::invalid_argument("constraint width mismatch");
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }

  std::size_t constraints() const { return a.size(); }
};

// y >= 0 with y^T A >= 0 and y^T b < 0: no x >= 0 can satisfy A x <= b.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
};

struct Feasibility {
  std::optional<std::vector<Rational>> point;
  std::optional<FarkasCertificate> certificate;

  bool feasible() const { return point.has_value(); }
};

inline bool satisfies(const System& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.variables) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (std::size_t i = 0; i < sys.constraints(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < sys.variables; ++j) lhs += sys.a[i][j] * x[j];
    if (lhs > sys.b[i]) return false;
  }
  return true;
}

inline bool verifies(const System& sys, const FarkasCertificate& cert) {
  if (cert.multipliers.size() != sys.constraints()) return false;
  for (const auto& y : cert.multipliers) {
    if (y < 0) return false;
  }
  for (std::size_t j = 0; j < sys.variables; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < sys.constraints(); ++i) col += cert.multipliers[i] * sys.a[i][j];
    if (col < 0) return false;
  }
  Rational rhs = 0;
  for (std::size_t i = 0; i < sys.constraints(); ++i) rhs += cert.multipliers[i] * sys.b[i];
  return rhs < 0;
}

namespace detail {

// Phase-1 simplex on a dense tableau, Bland's rule for entering and leaving
// variables. Returns a feasible point or nullopt.
inline std::optional<std::vector<Rational>> phase_one(const System& sys) {
  const std::size_t m = sys.constraints();
  const std::size_t n = sys.variables;
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  // Columns: x (n), slacks (m), artificials (one per row with negative rhs).
  std::vector<std::size_t> artificial_row;
  for (std::size_t i = 0; i < m; ++i) {
    if (sys.b[i] < 0) artificial_row.push_back(i);
  }
  const std::size_t cols = n + m + artificial_row.size();
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  std::vector<bool> is_artificial(cols, false);

  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sys.b[i] < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * sys.a[i][j];
    t[i][n + i] = sign;
    t[i][cols] = sign * sys.b[i];
    if (flip) {
      t[i][next_art] = 1;
      is_artificial[next_art] = true;
      basis[i] = next_art++;
    } else {
      basis[i] = n + i;
    }
  }

  for (;;) {
    // Reduced costs of min sum(artificials): d_j = c_j - sum_i c_B(i) t[i][j].
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols && !entering; ++j) {
      Rational d = is_artificial[j] ? 1 : 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (is_artificial[basis[i]]) d -= t[i][j];
      }
      if (d < 0) entering = j;
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leave;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][e] <= 0) continue;
      const Rational ratio = t[i][cols] / t[i][e];
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase 1 is bounded below by zero, so an improving column always has a
    // positive entry.
    if (!leave) throw std::logic_error("phase-one simplex: unbounded improving direction");

    const std::size_t r = *leave;
    const Rational pivot = t[r][e];
    for (auto& v : t[r]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][e] == 0) continue;
      const Rational factor = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[r][j];
    }
    basis[r] = e;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (is_artificial[basis[i]] && t[i][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][cols];
  }
  return x;
}

}  // namespace detail

// Exact feasibility with a checked certificate either way: a point that
// satisfies every constraint, or Farkas multipliers from the alternative
// system { y >= 0 : -A^T y <= 0, b^T y <= -1 }.
inline Feasibility check_feasibility(const System& sys) {
  Feasibility out;
  if (auto x = detail::phase_one(sys)) {
    if (!satisfies(sys, *x)) throw std::logic_error("simplex returned a point that fails substitution");
    out.point = std::move(*x);
    return out;
  }
  System alt;
  alt.variables = sys.constraints();
  for (std::size_t j = 0; j < sys.variables; ++j) {
    std::vector<Rational> row(alt.variables);
    for (std::size_t i = 0; i < sys.constraints(); ++i) row[i] = -sys.a[i][j];
    alt.add(std::move(row), 0);
  }
  alt.add(sys.b, -1);
  auto y = detail::phase_one(alt);
  if (!y) throw std::logic_error("system and its Farkas alternative are both infeasible");
  FarkasCertificate cert{std::move(*y)};
  if (!verifies(sys, cert)) throw std::logic_error("Farkas certificate failed verification");
  out.certificate = std::move(cert);
  return out;
}

}  // namespace quorumlab::lp
