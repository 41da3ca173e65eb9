#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quorumlab/exact_lp.hpp"
#include "quorumlab/game.hpp"
#include "quorumlab/legco.hpp"
#include "quorumlab/structure.hpp"

namespace quorumlab {

// Coalition signature under within-chamber symmetry.
struct Profile {
  int r = 0;      // geo members
  int s = 0;      // func members
  int gamma = 0;  // government present

  friend auto operator<=>(const Profile&, const Profile&) = default;

  bool dominated_by(const Profile& o) const { return r <= o.r && s <= o.s && gamma <= o.gamma; }
  std::string to_string() const {
    return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(gamma) + ")";
  }
};

// Outcome of every profile of a chamber-symmetric game on 2n+1 players.
class ProfileTable {
 public:
  ProfileTable(int n, std::vector<bool> wins) : n_(n), wins_(std::move(wins)) {
    for (const auto& p : profiles()) {
      if (wins_at(p)) {
        if (!lower_neighbour_wins(p)) minimal_winning_.push_back(p);
      } else if (!upper_neighbour_loses(p)) {
        maximal_losing_.push_back(p);
      }
    }
  }

  int n() const { return n_; }
  bool wins(const Profile& p) const { return wins_at(p); }
  const std::vector<Profile>& minimal_winning() const { return minimal_winning_; }
  const std::vector<Profile>& maximal_losing() const { return maximal_losing_; }

  // All 2(n+1)^2 profiles in lexicographic (r, s, gamma) order.
  std::vector<Profile> profiles() const {
    std::vector<Profile> out;
    for (int r = 0; r <= n_; ++r) {
      for (int s = 0; s <= n_; ++s) {
        for (int g = 0; g <= 1; ++g) out.push_back({r, s, g});
      }
    }
    return out;
  }

  Coalition representative(const Profile& p) const {
    Coalition c = Coalition::range(1, p.r) | Coalition::range(n_ + 1, n_ + p.s);
    if (p.gamma != 0) c.insert(PlayerId(2 * n_ + 1));
    return c;
  }

 private:
  bool wins_at(const Profile& p) const {
    return wins_[static_cast<std::size_t>((p.r * (n_ + 1) + p.s) * 2 + p.gamma)];
  }
  bool lower_neighbour_wins(const Profile& p) const {
    return (p.r > 0 && wins_at({p.r - 1, p.s, p.gamma})) ||
           (p.s > 0 && wins_at({p.r, p.s - 1, p.gamma})) ||
           (p.gamma > 0 && wins_at({p.r, p.s, p.gamma - 1}));
  }
  bool upper_neighbour_loses(const Profile& p) const {
    return (p.r < n_ && !wins_at({p.r + 1, p.s, p.gamma})) ||
           (p.s < n_ && !wins_at({p.r, p.s + 1, p.gamma})) ||
           (p.gamma < 1 && !wins_at({p.r, p.s, p.gamma + 1}));
  }

  int n_;
  std::vector<bool> wins_;
  std::vector<Profile> minimal_winning_;
  std::vector<Profile> maximal_losing_;
};

inline ProfileTable profile_table(int n, Scenario scenario = Scenario::StatusQuo) {
  if (n < 1) throw input_error("Legco size n must be at least 1");
  std::vector<bool> wins;
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; s <= n; ++s) {
      for (int g = 0; g <= 1; ++g) wins.push_back(legco_wins(n, scenario, r, s, g != 0));
    }
  }
  return ProfileTable(n, std::move(wins));
}

// Profile table of an arbitrary game on 2n+1 players. Non-Legco games are
// checked exhaustively to depend on the profile only.
inline ProfileTable profile_table(const Game& game, const Limits& limits = {}) {
  if (const auto* lg = game.as_legco()) return profile_table(lg->n, lg->scenario);
  if (game.players() < 3 || game.players() % 2 == 0) {
    throw input_error("profile classification needs 2n+1 players");
  }
  const int n = (game.players() - 1) / 2;
  std::vector<bool> wins;
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; s <= n; ++s) {
      for (int g = 0; g <= 1; ++g) {
        Coalition c = Coalition::range(1, r) | Coalition::range(n + 1, n + s);
        if (g != 0) c.insert(PlayerId(2 * n + 1));
        wins.push_back(game.eval(c));
      }
    }
  }
  ProfileTable table(n, wins);
  const WinTable all(game, limits);
  const std::uint64_t geo = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < all.size(); ++mask) {
    const Profile p{std::popcount(mask & geo), std::popcount((mask >> n) & geo),
                    static_cast<int>((mask >> (2 * n)) & 1U)};
    if (all.wins(mask) != table.wins(p)) {
      throw input_error("game is not symmetric within chambers: " +
                        Coalition::from_mask(mask).to_string() + " disagrees with profile " +
                        p.to_string());
    }
  }
  return table;
}

// Replaces each row's geo and func weights by their chamber means.
inline AmalgamatedMatrix symmetrize(const AmalgamatedMatrix& matrix, const PlayerCategories& cats) {
  if (matrix.players() != cats.players()) {
    throw input_error("symmetrize: matrix width " + std::to_string(matrix.players()) +
                      " does not match 2n+1 = " + std::to_string(cats.players()));
  }
  const auto n = static_cast<std::size_t>(cats.n);
  std::vector<MatrixRow> rows;
  for (const auto& row : matrix.rows()) {
    Rational geo = 0;
    Rational func = 0;
    for (std::size_t j = 0; j < n; ++j) {
      geo += row.weights[j];
      func += row.weights[n + j];
    }
    geo /= static_cast<long>(n);
    func /= static_cast<long>(n);
    MatrixRow out{row.threshold, row.weights};
    for (std::size_t j = 0; j < n; ++j) {
      out.weights[j] = geo;
      out.weights[n + j] = func;
    }
    rows.push_back(std::move(out));
  }
  return AmalgamatedMatrix(std::move(rows));
}

// One chamber-symmetric row: accepts (r, s, gamma) iff r e + s f + gamma g >= q.
struct SymmetricRow {
  Rational q, e, f, g;

  bool accepts(const Profile& p) const { return p.r * e + p.s * f + p.gamma * g >= q; }

  MatrixRow expand(int n) const {
    return detail::block_row(n, q, e, f, g);
  }

  friend bool operator==(const SymmetricRow&, const SymmetricRow&) = default;
};

struct SymmetricRealization {
  std::vector<SymmetricRow> rows;

  AmalgamatedMatrix to_matrix(int n) const {
    std::vector<MatrixRow> out;
    for (const auto& r : rows) out.push_back(r.expand(n));
    return AmalgamatedMatrix(std::move(out));
  }
};

// LP behind one row: variables (q, e, f, g) >= 0; every minimal winning
// profile reaches q and every profile in must_lose stays at or below q - 1
// (the gap of 1 fixes the scale of the row).
struct Separation {
  lp::System system;
  std::vector<std::string> labels;  // one per constraint
  std::optional<SymmetricRow> row;
  std::optional<lp::FarkasCertificate> certificate;

  bool feasible() const { return row.has_value(); }
};

inline Separation separate(const ProfileTable& table, std::span<const Profile> must_lose) {
  Separation out;
  out.system.variables = 4;
  for (const auto& p : table.minimal_winning()) {
    out.system.add({1, -p.r, -p.s, -p.gamma}, 0);
    out.labels.push_back("win " + p.to_string());
  }
  for (const auto& p : must_lose) {
    out.system.add({-1, p.r, p.s, p.gamma}, -1);
    out.labels.push_back("lose " + p.to_string());
  }
  auto result = lp::check_feasibility(out.system);
  if (result.point) {
    const auto& x = *result.point;
    SymmetricRow row{x[0], x[1], x[2], x[3]};
    for (const auto& p : table.minimal_winning()) {
      if (!row.accepts(p)) throw std::logic_error("separating row rejects a winning profile");
    }
    for (const auto& p : must_lose) {
      if (row.accepts(p)) throw std::logic_error("separating row accepts a losing profile");
    }
    out.row = row;
  } else {
    out.certificate = std::move(result.certificate);
  }
  return out;
}

inline std::optional<SymmetricRow> separable(const ProfileTable& table, std::span<const Profile> must_lose) {
  return separate(table, must_lose).row;
}

// One assignment of covered losing profiles to rows.
struct AssignmentCase {
  std::uint64_t index = 0;
  std::vector<int> row_of_profile;  // aligned with Refutation::covered
  int infeasible_row = -1;          // -1: every row separable
  std::vector<std::string> labels;  // constraints of the infeasible row
  std::optional<lp::FarkasCertificate> certificate;
};

struct Refutation {
  int m = 0;
  std::vector<Profile> covered;
  std::vector<AssignmentCase> cases;
  bool refuted = false;  // no symmetric m-row realization
  std::optional<SymmetricRealization> realization;
};

// Every way of assigning the covered losing profiles (maximal losing by
// default) to m rows; an assignment survives only if each row's LP is
// feasible. Cases are enumerated in base-m order of the profile list.
inline Refutation refute_symmetric_realization(const ProfileTable& table, int m,
                                               std::optional<std::vector<Profile>> covered = {},
                                               const Limits& limits = {}) {
  if (m < 1) throw input_error("row count m must be positive");
  Refutation out;
  out.m = m;
  out.covered = covered ? *covered : table.maximal_losing();
  const std::size_t k = out.covered.size();
  if (k > 63) throw capacity_error("too many losing profiles to assign");

  std::uint64_t cases = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (cases > limits.max_lp_cases / static_cast<std::uint64_t>(m)) {
      throw capacity_error("refutation needs more than " + std::to_string(limits.max_lp_cases) +
                           " assignments");
    }
    cases *= static_cast<std::uint64_t>(m);
  }
  if (cases > limits.max_lp_cases) {
    throw capacity_error("refutation needs more than " + std::to_string(limits.max_lp_cases) +
                         " assignments");
  }

  std::map<std::uint64_t, Separation> memo;  // keyed by subset of covered profiles
  auto separation_of = [&](std::uint64_t subset) -> const Separation& {
    auto it = memo.find(subset);
    if (it == memo.end()) {
      std::vector<Profile> must_lose;
      for (std::size_t i = 0; i < k; ++i) {
        if ((subset >> i) & 1U) must_lose.push_back(out.covered[i]);
      }
      it = memo.emplace(subset, separate(table, must_lose)).first;
    }
    return it->second;
  };

  out.refuted = true;
  for (std::uint64_t index = 0; index < cases; ++index) {
    AssignmentCase c;
    c.index = index;
    std::vector<std::uint64_t> subsets(static_cast<std::size_t>(m), 0);
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < k; ++i) {
      const int row = static_cast<int>(rest % static_cast<std::uint64_t>(m));
      rest /= static_cast<std::uint64_t>(m);
      c.row_of_profile.push_back(row);
      subsets[static_cast<std::size_t>(row)] |= std::uint64_t{1} << i;
    }
    for (int row = 0; row < m; ++row) {
      const auto& sep = separation_of(subsets[static_cast<std::size_t>(row)]);
      if (!sep.feasible()) {
        c.infeasible_row = row;
        c.labels = sep.labels;
        c.certificate = sep.certificate;
        break;
      }
    }
    if (c.infeasible_row < 0) {
      out.refuted = false;
      SymmetricRealization real;
      for (int row = 0; row < m; ++row) real.rows.push_back(*separation_of(subsets[static_cast<std::size_t>(row)]).row);
      out.realization = std::move(real);
      out.cases.push_back(std::move(c));
      break;
    }
    out.cases.push_back(std::move(c));
  }
  return out;
}

inline bool refute_symmetric_m_realization(const Game& game, int m, const Limits& limits = {}) {
  return refute_symmetric_realization(profile_table(game, limits), m, std::nullopt, limits).refuted;
}

inline constexpr const char* kSymmetrizationNote =
    "lower bounds above 1 row rely on the chamber-averaging reduction: any realization of a "
    "chamber-symmetric game is replaced by one with equal weights inside each chamber; the "
    "reduction is exact for one row and taken as given for two, and is not applied beyond two rows";

struct DimensionCertificate {
  bool candidate_realizes = false;
  std::optional<Coalition> disagreement;  // when the candidate fails
  int lower = 1;
  int upper = 0;
  AmalgamatedMatrix realizer;             // candidate, or a smaller symmetric realization found
  std::optional<SwapWitness> swap_witness;
  std::vector<Refutation> refutations;    // m = 1, 2, ... as run
  std::string note;

  bool certified() const { return candidate_realizes && lower == upper; }
};

inline DimensionCertificate certify_dimension(const Game& game, const AmalgamatedMatrix& candidate,
                                              const Limits& limits = {}) {
  DimensionCertificate cert;
  cert.realizer = candidate;
  const auto cmp = games_equal(game, Game::weighted(candidate), limits);
  if (!cmp.equal) {
    cert.disagreement = cmp.witness;
    cert.upper = 0;
    cert.note = "candidate does not realize the game";
    return cert;
  }
  cert.candidate_realizes = true;
  cert.upper = candidate.row_count();
  if (cert.upper == 1) return cert;

  const WinTable table(game, limits);
  cert.swap_witness = is_swap_robust(table);

  std::optional<ProfileTable> profiles;
  auto symmetric_profiles = [&]() -> const ProfileTable* {
    if (!profiles) {
      try {
        profiles = profile_table(game, limits);
      } catch (const input_error& e) {
        cert.note = std::string("no LP lower bound: ") + e.what();
        return nullptr;
      }
    }
    return &*profiles;
  };

  if (cert.swap_witness) {
    cert.lower = 2;
  }
  while (cert.lower < cert.upper) {
    const int m = cert.lower;
    if (m > 2) {
      cert.note = kSymmetrizationNote;
      break;
    }
    const auto* pt = symmetric_profiles();
    if (pt == nullptr) break;
    auto ref = refute_symmetric_realization(*pt, m, std::nullopt, limits);
    const bool refuted = ref.refuted;
    if (!refuted) {
      const auto smaller = ref.realization->to_matrix(pt->n());
      if (!games_equal(game, Game::weighted(smaller), limits).equal) {
        throw std::logic_error("symmetric realization from the LP does not realize the game");
      }
      cert.realizer = smaller;
      cert.upper = m;
    }
    cert.refutations.push_back(std::move(ref));
    if (refuted) cert.lower = m + 1;
  }
  if (cert.lower > cert.upper) throw std::logic_error("dimension lower bound exceeds upper bound");
  if (cert.note.empty() && !cert.refutations.empty()) cert.note = kSymmetrizationNote;
  return cert;
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Theorem2Report {
  int n = 0;
  std::vector<Check> checks;
  int w_dimension = 0;
  int c_dimension = 0;
  bool c_dimension_machine_checked = false;
  std::string note;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

namespace detail {

inline std::string describe(const SwapWitness& w) {
  return w.first.to_string() + " / " + w.second.to_string() + " swap " +
         std::to_string(w.out_of_first.value) + "<->" + std::to_string(w.out_of_second.value);
}

}  // namespace detail

inline Theorem2Report theorem2_report(int n, const Limits& limits = {}) {
  if (n <= 4) throw input_error("the C-/W-dimension report covers n > 4");
  Theorem2Report rep;
  rep.n = n;
  const Game legco = legco_game(n);
  const WinTable table(legco, limits);
  const auto factors = theorem2_factors(n, limits);
  const Game meet = intersection(factors.factors[0], factors.factors[1], limits);
  const auto eq = games_equal(meet, legco, limits);
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  if (n % 2 == 0) {
    add("legco_weakly_complete", is_weakly_complete(table));
    const auto witness = is_swap_robust(table);
    add("legco_not_swap_robust", witness.has_value(), witness ? detail::describe(*witness) : "");
    add("factor_intersection_equals_legco", eq.equal, eq.witness ? eq.witness->to_string() : "");
    for (std::size_t i = 0; i < factors.factors.size(); ++i) {
      const WinTable ft(factors.factors[i], limits);
      const auto fw = is_swap_robust(ft);
      add("factor" + std::to_string(i + 1) + "_swap_robust", !fw.has_value(),
          fw ? detail::describe(*fw) : "");
      add("factor" + std::to_string(i + 1) + "_complete", is_complete(ft));
    }
    rep.w_dimension = 1;
    rep.c_dimension = 2;
    rep.c_dimension_machine_checked = true;
    return rep;
  }

  add("legco_not_weakly_complete", !is_weakly_complete(table));
  const auto d = compare_d(table, PlayerId(1), PlayerId(2 * n + 1));
  add("player1_vs_government_d_incomparable", d == ComparisonResult::Incomparable, to_string(d));
  add("factor_intersection_equals_legco", eq.equal, eq.witness ? eq.witness->to_string() : "");
  for (std::size_t i = 0; i < factors.factors.size(); ++i) {
    add("factor" + std::to_string(i + 1) + "_weakly_complete",
        is_weakly_complete(WinTable(factors.factors[i], limits)));
  }
  const auto catalogue = proof_catalogue(n);
  auto find = [&](const std::string& name) {
    for (const auto& e : catalogue) {
      if (e.name == name) return e.members;
    }
    throw std::logic_error("missing catalogue entry " + name);
  };
  for (const auto& entry : catalogue) {
    const bool wins = legco.eval(entry.members);
    add(entry.name + (entry.expected_winning ? "_wins" : "_loses"), wins == entry.expected_winning,
        entry.members.to_string());
  }
  // Each exchange: source - out + in must equal the catalogued result.
  const int k = (n - 1) / 2;
  const int g = 2 * n + 1;
  struct Exchange {
    const char* source;
    int out;
    int in;
    const char* result;
  };
  const Exchange exchanges[] = {
      {"W1", k + 1, n + k + 2, "L1"}, {"W2", n + k + 2, k + 1, "L2"},
      {"W1", k, n + k + 2, "L3"},     {"W3", n + k + 2, k, "L2"},
      {"W1", k + 1, n + k + 3, "L4"}, {"W4", n + k + 3, k + 1, "L2"},
      {"W5", g, k + 1, "L5"},         {"W1", k + 1, g, "L6"},
      {"W6", g, k + 1, "L7"},
  };
  for (const auto& x : exchanges) {
    const Coalition got = find(x.source).without(PlayerId(x.out)).with(PlayerId(x.in));
    add(std::string("exchange_") + x.source + "_to_" + x.result, got == find(x.result), got.to_string());
  }
  rep.w_dimension = 2;
  rep.c_dimension = 3;
  rep.c_dimension_machine_checked = false;
  rep.note =
      "C-dimension 3 is asserted by a hand argument over arbitrary pairs of complete games; only "
      "the coalition outcomes and exchanges it uses are machine-checked here";
  return rep;
}

}  // namespace quorumlab
