// Randomized properties over fixed seeds.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quorumlab/dimension.hpp"
#include "quorumlab/power.hpp"
#include "quorumlab/structure.hpp"

using namespace quorumlab;

namespace {

// Upward closure of a few random generators; never empty, never containing {}.
Game random_monotone(std::mt19937_64& rng, int players) {
  const std::uint64_t count = std::uint64_t{1} << players;
  std::uniform_int_distribution<std::uint64_t> pick(1, count - 1);
  std::vector<std::uint64_t> gens(1 + rng() % 4);
  for (auto& g : gens) g = pick(rng);
  std::vector<Coalition> winning;
  for (std::uint64_t m = 0; m < count; ++m) {
    for (auto g : gens) {
      if ((m & g) == g) {
        winning.push_back(Coalition::from_mask(m));
        break;
      }
    }
  }
  return Game::explicit_game(players, std::move(winning));
}

Game random_weighted(std::mt19937_64& rng, int players) {
  std::uniform_int_distribution<int> w(0, 6);
  std::vector<Rational> weights;
  int total = 0;
  for (int i = 0; i < players; ++i) {
    weights.emplace_back(w(rng));
    total += weights.back().convert_to<int>();
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  std::uniform_int_distribution<int> q(1, total);
  return Game::weighted(AmalgamatedMatrix({MatrixRow{q(rng), weights}}));
}

// Monotone profile table from random generating profiles.
ProfileTable random_profile_table(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(0, n);
  std::vector<Profile> gens(1 + rng() % 3);
  for (auto& g : gens) g = Profile{d(rng), d(rng), static_cast<int>(rng() % 2)};
  std::vector<bool> wins;
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; s <= n; ++s) {
      for (int g = 0; g <= 1; ++g) {
        const Profile p{r, s, g};
        bool w = false;
        for (const auto& x : gens) w = w || (x.dominated_by(p) && !(x == Profile{0, 0, 0}));
        wins.push_back(w || (r == n && s == n && g == 1));
      }
    }
  }
  return ProfileTable(n, std::move(wins));
}

}  // namespace

TEST(Property, RandomMonotoneGamesAreValid) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int players = 2 + static_cast<int>(rng() % 6);
    const auto g = random_monotone(rng, players);
    EXPECT_TRUE(check_monotone(g.as_explicit()->winning, players).empty());
  }
}

TEST(Property, CompleteIffSwapRobust) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 150; ++t) {
    const int players = 2 + static_cast<int>(rng() % 5);
    const WinTable table(random_monotone(rng, players));
    EXPECT_EQ(is_complete(table), !is_swap_robust(table).has_value());
  }
}

TEST(Property, SwapWitnessesAreGenuine) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const auto g = random_monotone(rng, 3 + static_cast<int>(rng() % 4));
    if (const auto w = is_swap_robust(g)) {
      EXPECT_TRUE(g.eval(w->first) && g.eval(w->second));
      EXPECT_FALSE(g.eval(w->first_after()));
      EXPECT_FALSE(g.eval(w->second_after()));
    }
  }
}

TEST(Property, CrucialTotalsAreSwingCounts) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const WinTable table(random_monotone(rng, 2 + static_cast<int>(rng() % 6)));
    const auto swings = banzhaf_enum(table);
    for (int p = 1; p <= table.players(); ++p) {
      EXPECT_EQ(crucial_vector(table, PlayerId(p)).total(), swings.b[static_cast<std::size_t>(p - 1)]);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const WinTable table(legco_game(n));
    const auto swings = banzhaf_enum(table);
    for (int p = 1; p <= table.players(); ++p) {
      EXPECT_EQ(crucial_vector(table, PlayerId(p)).total(), swings.b[static_cast<std::size_t>(p - 1)]);
    }
  }
}

TEST(Property, IndicesSumToOne) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const WinTable table(random_monotone(rng, 2 + static_cast<int>(rng() % 6)));
    EXPECT_EQ(ssi_enum(table).sum(), 1);
    EXPECT_EQ(banzhaf_index(banzhaf_enum(table)).sum(), 1);
  }
}

TEST(Property, DEqualRefinesdEqual) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) {
    const WinTable table(random_monotone(rng, 2 + static_cast<int>(rng() % 5)));
    for (int i = 1; i <= table.players(); ++i) {
      for (int j = i + 1; j <= table.players(); ++j) {
        const auto D = compare_D(table, PlayerId(i), PlayerId(j));
        const auto d = compare_d(table, PlayerId(i), PlayerId(j));
        if (D == ComparisonResult::Equal) {
          EXPECT_EQ(d, ComparisonResult::Equal);
        }
        // <=_D implies <=_d.
        if (D == ComparisonResult::Less) {
          EXPECT_TRUE(d == ComparisonResult::Less || d == ComparisonResult::Equal);
        }
      }
    }
  }
}

TEST(Property, WeightedGamesAreComplete) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const WinTable table(random_weighted(rng, 2 + static_cast<int>(rng() % 6)));
    for (int i = 1; i <= table.players(); ++i) {
      for (int j = i + 1; j <= table.players(); ++j) {
        EXPECT_NE(compare_D(table, PlayerId(i), PlayerId(j)), ComparisonResult::Incomparable);
      }
    }
    EXPECT_FALSE(is_swap_robust(table).has_value());
  }
}

TEST(Property, DummyGovernmentInScenarios) {
  for (int n = 1; n <= 6; ++n) {
    for (auto s : {Scenario::BicameralOnly, Scenario::Unicameral}) {
      const WinTable table(legco_game(n, s));
      EXPECT_EQ(banzhaf_enum(table).b.back(), 0);
      EXPECT_EQ(ssi_enum(table).values.back(), 0);
    }
  }
}

TEST(Property, OrdinaryMembersShareIndices) {
  for (int n = 1; n <= 6; ++n) {
    const WinTable table(legco_game(n));
    const auto b = banzhaf_enum(table).b;
    const auto s = ssi_enum(table).values;
    for (int j = 1; j < 2 * n; ++j) {
      EXPECT_EQ(b[static_cast<std::size_t>(j)], b[0]);
      EXPECT_EQ(s[static_cast<std::size_t>(j)], s[0]);
    }
  }
}

// Per-player perturbations of a realization that still realize the game
// must symmetrize back to a realization.
TEST(Property, SymmetrizationOnPerturbedRealizations) {
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<int> noise(-3, 3);
  for (int n = 1; n <= 5; ++n) {
    const Game legco = legco_game(n);
    const auto base = paper_realization(n);
    int kept = 0;
    for (int t = 0; t < 40; ++t) {
      std::vector<MatrixRow> rows;
      for (const auto& row : base.rows()) {
        MatrixRow r{row.threshold * 20, {}};
        for (const auto& w : row.weights) {
          Rational v = w * 20 + noise(rng);
          r.weights.push_back(v < 0 ? Rational(0) : v);
        }
        rows.push_back(std::move(r));
      }
      const AmalgamatedMatrix perturbed(std::move(rows));
      std::optional<Game> pg;
      try {
        pg = Game::weighted(perturbed);
      } catch (const input_error&) {
        continue;  // the grand coalition no longer wins
      }
      if (!games_equal(legco, *pg).equal) continue;
      ++kept;
      const auto sym = symmetrize(perturbed, PlayerCategories{n});
      EXPECT_TRUE(games_equal(legco, Game::weighted(sym)).equal) << "n=" << n;
    }
    EXPECT_GT(kept, 0) << "n=" << n;
  }
}

TEST(Property, RefutationIsMonotoneInRows) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto table = random_profile_table(rng, n);
    if (table.maximal_losing().size() > 10) continue;
    const bool two = refute_symmetric_realization(table, 2).refuted;
    const bool one = refute_symmetric_realization(table, 1).refuted;
    if (two) {
      EXPECT_TRUE(one);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (auto s : {Scenario::StatusQuo, Scenario::BicameralOnly, Scenario::Unicameral}) {
      const auto table = profile_table(n, s);
      if (refute_symmetric_realization(table, 2).refuted) {
        EXPECT_TRUE(refute_symmetric_realization(table, 1).refuted);
      }
    }
  }
}

TEST(Property, SeparableAgreesWithSingleProfileRefutation) {
  std::mt19937_64 rng(20);
  std::vector<ProfileTable> tables;
  for (int n = 1; n <= 6; ++n) tables.push_back(profile_table(n));
  for (int t = 0; t < 20; ++t) tables.push_back(random_profile_table(rng, 2 + static_cast<int>(rng() % 3)));
  for (const auto& table : tables) {
    for (const auto& p : table.profiles()) {
      if (table.wins(p)) continue;
      const std::vector<Profile> one{p};
      const bool feasible = separable(table, one).has_value();
      EXPECT_EQ(feasible, !refute_symmetric_realization(table, 1, one).refuted);
    }
  }
}

TEST(Property, SeparatingRowsVerifyExactly) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const auto table = random_profile_table(rng, 2 + static_cast<int>(rng() % 4));
    const auto sep = separate(table, table.maximal_losing());
    if (sep.row) {
      for (const auto& p : table.profiles()) EXPECT_EQ(sep.row->accepts(p), table.wins(p));
    } else {
      ASSERT_TRUE(sep.certificate.has_value());
      EXPECT_TRUE(lp::verifies(sep.system, *sep.certificate));
    }
  }
}

TEST(Property, LambdaEstimateBoundedOverWindow) {
  const auto probe = conjecture_probe(20, 60);
  for (const auto& r : probe.rows) {
    EXPECT_GT(r.lambda_estimate, 0.0);
    EXPECT_LT(r.lambda_estimate, 1.0);
  }
}

TEST(Property, CoalitionAlgebra) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> player(1, kMaxPlayers);
  for (int t = 0; t < 300; ++t) {
    Coalition a, b;
    for (int i = 0; i < 20; ++i) {
      a.insert(PlayerId(player(rng)));
      b.insert(PlayerId(player(rng)));
    }
    EXPECT_EQ((a | b).size() + (a & b).size(), a.size() + b.size());
    EXPECT_EQ((a - b) | (a & b), a);
    EXPECT_TRUE((a & b).subset_of(a));
    EXPECT_EQ(Coalition::of(a.members()), a);
  }
}

namespace {

std::vector<Game> corpus(std::mt19937_64& rng) {
  std::vector<Game> games;
  for (int n = 1; n <= 4; ++n) {
    for (auto s : {Scenario::StatusQuo, Scenario::BicameralOnly, Scenario::Unicameral}) games.push_back(legco_game(n, s));
    games.push_back(Game::weighted(paper_realization(n)));
  }
  for (int t = 0; t < 20; ++t) games.push_back(random_monotone(rng, 2 + static_cast<int>(rng() % 6)));
  for (int t = 0; t < 20; ++t) games.push_back(random_weighted(rng, 2 + static_cast<int>(rng() % 8)));
  return games;
}

}  // namespace

// Grow a coalition one random player at a time; outcomes never drop.
TEST(Property, MonotoneAlongRandomChains) {
  std::mt19937_64 rng(23);
  for (const auto& g : corpus(rng)) {
    for (int chain = 0; chain < 20; ++chain) {
      std::vector<int> order(static_cast<std::size_t>(g.players()));
      std::iota(order.begin(), order.end(), 1);
      std::shuffle(order.begin(), order.end(), rng);
      Coalition c;
      bool won = g.eval(c);
      EXPECT_FALSE(won);
      for (int p : order) {
        c.insert(PlayerId(p));
        const bool now = g.eval(c);
        EXPECT_TRUE(now || !won) << c.to_string();
        won = now;
      }
      EXPECT_TRUE(won);
    }
  }
}

TEST(Property, FrontiersCoverEveryCoalition) {
  std::mt19937_64 rng(24);
  for (const auto& g : corpus(rng)) {
    const WinTable table(g);
    const auto mw = minimal_winning(table);
    const auto ml = maximal_losing(table);
    for (std::uint64_t m = 0; m < table.size(); ++m) {
      const auto c = Coalition::from_mask(m);
      if (table.wins(m)) {
        EXPECT_TRUE(std::any_of(mw.begin(), mw.end(), [&](const Coalition& w) { return w.subset_of(c); }));
      } else {
        EXPECT_TRUE(std::any_of(ml.begin(), ml.end(), [&](const Coalition& l) { return c.subset_of(l); }));
      }
    }
  }
}

TEST(Property, OneRowEvalIsThresholdComparison) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> num(0, 9), den(1, 4);
  for (int t = 0; t < 30; ++t) {
    const int players = 1 + static_cast<int>(rng() % 13);
    std::vector<Rational> w;
    Rational total = 0;
    for (int i = 0; i < players; ++i) {
      w.emplace_back(num(rng), den(rng));
      total += w.back();
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    const Rational q = total * Rational(1 + static_cast<int>(rng() % 9), 10);
    if (q <= 0) continue;
    const auto g = Game::weighted(AmalgamatedMatrix({MatrixRow{q, w}}));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << players); ++m) {
      Rational sum = 0;
      for (int i = 0; i < players; ++i) {
        if ((m >> i) & 1U) sum += w[static_cast<std::size_t>(i)];
      }
      ASSERT_EQ(g.eval(Coalition::from_mask(m)), sum >= q);
    }
  }
}

TEST(Property, GamesEqualIsAnEquivalence) {
  std::mt19937_64 rng(26);
  const auto games = corpus(rng);
  for (const auto& a : games) {
    EXPECT_TRUE(games_equal(a, a).equal);
    for (const auto& b : games) {
      if (a.players() != b.players()) continue;
      const bool ab = games_equal(a, b).equal;
      EXPECT_EQ(ab, games_equal(b, a).equal);
      if (!ab) continue;
      for (const auto& c : games) {
        if (c.players() == a.players() && games_equal(b, c).equal) {
          EXPECT_TRUE(games_equal(a, c).equal);
        }
      }
    }
  }
}
