#include <gtest/gtest.h>

#include "quorumlab/report.hpp"
#include "quorumlab/serialization.hpp"

using namespace quorumlab;

TEST(Json, RationalForms) {
  EXPECT_EQ(rational_to_json(Rational(5, 2)), json("5/2"));
  EXPECT_EQ(rational_from_json(json("10/4")), Rational(5, 2));
  EXPECT_EQ(rational_from_json(json(3)), 3);
  EXPECT_THROW(rational_from_json(json(1.5)), input_error);
}

TEST(Json, GameRoundTrips) {
  const std::vector<Game> games{legco_game(5, Scenario::Unicameral), Game::weighted(paper_realization(5)),
                                to_explicit(legco_game(2))};
  for (const auto& g : games) {
    const auto j = game_to_json(g);
    const auto back = game_from_json(json::parse(j.dump()));
    EXPECT_EQ(game_to_json(back), j);
    EXPECT_TRUE(games_equal(g, back).equal);
  }
}

TEST(Json, LegcoForm) {
  EXPECT_EQ(game_to_json(legco_game(35)).dump(), R"({"n":35,"scenario":"status_quo","type":"legco"})");
  EXPECT_EQ(game_from_json(json::parse(R"({"type":"legco","n":5})")).players(), 11);
}

TEST(Json, RejectsBadGames) {
  for (const char* text : {R"([])", R"({"type":"legco"})", R"({"type":"legco","n":0})",
                           R"({"type":"cube"})", R"({"type":"weighted","rows":[{"q":"1"}]})",
                           R"({"type":"weighted","players":3,"rows":[{"q":1,"w":[1,1]}]})",
                           R"({"type":"explicit","players":2,"winning":[[3]]})",
                           R"({"type":"explicit","players":2,"winning":[[1]]})",
                           R"({"type":"legco","n":3,"scenario":"none"})"}) {
    EXPECT_THROW(game_from_json(json::parse(text)), input_error) << text;
  }
}

TEST(Json, MatrixFromAnyShape) {
  const auto rows = json::parse(R"([{"q":"2","w":["1","1","0"]}])");
  EXPECT_EQ(matrix_from_any_json(rows).players(), 3);
  EXPECT_EQ(matrix_from_any_json(json{{"rows", rows}}).players(), 3);
  EXPECT_THROW(matrix_from_any_json(json(5)), input_error);
}

TEST(Report, DigestIsStable) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const json inputs{{"n", 3}};
  EXPECT_EQ(envelope("x", inputs, 1).dump(), envelope("x", inputs, 1).dump());
  EXPECT_NE(envelope("x", inputs, 1)["input_digest"], envelope("x", json{{"n", 4}}, 1)["input_digest"]);
}

TEST(Report, NSetParsing) {
  EXPECT_EQ(parse_n_set("1..3,35"), (std::vector<int>{1, 2, 3, 35}));
  EXPECT_EQ(parse_n_set("4,2,2"), (std::vector<int>{2, 4}));
  for (const char* bad : {"", "0", "3..1", "a", "1..", "2x"}) EXPECT_THROW(parse_n_set(bad), input_error) << bad;
}

TEST(Report, ExpectedDimensions) {
  EXPECT_EQ(expected_dimension(2, Scenario::StatusQuo), 1);
  EXPECT_EQ(expected_dimension(4, Scenario::StatusQuo), 2);
  EXPECT_EQ(expected_dimension(6, Scenario::StatusQuo), 3);
  EXPECT_EQ(expected_dimension(6, Scenario::BicameralOnly), 2);
  EXPECT_EQ(expected_dimension(6, Scenario::Unicameral), 1);
}

TEST(Report, PowerClosedAt35) {
  const auto r = power_closed_report(35, 4);
  EXPECT_EQ(r["ssi"]["government_3sf"], "0.0395");
  EXPECT_EQ(r["ssi"]["ordinary_3sf"], "0.0137");
}

TEST(Report, SweepCsvShape) {
  const auto csv = sweep_csv(sweep(1, 100), 4);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSweepHeader);
}

TEST(Report, VerifySmallSet) {
  VerifyOptions opt;
  opt.n_set = parse_n_set("1..4,35");
  bool passed = false;
  const auto r = verify_paper(opt, passed);
  EXPECT_TRUE(passed) << r.dump(2);
  EXPECT_EQ(r.dump(), verify_paper(opt, passed).dump());
}

TEST(Report, ForcedEnumerationAboveCap) {
  VerifyOptions opt;
  opt.n_set = {9};
  opt.limits.max_players = 18;
  opt.force_enumeration = true;
  bool passed = false;
  EXPECT_THROW(verify_paper(opt, passed), capacity_error);
  opt.force_enumeration = false;
  EXPECT_NO_THROW(verify_paper(opt, passed));
}

TEST(Report, AnalyzeLegco) {
  const auto r = analyze_report(legco_game(5), {});
  EXPECT_EQ(r["swap_robust"], false);
  EXPECT_EQ(r["minimal_winning_count"], 210);
  EXPECT_EQ(r["maximal_losing_count"], 272);
  EXPECT_EQ(r["proposition1"]["passed"], true);
}
