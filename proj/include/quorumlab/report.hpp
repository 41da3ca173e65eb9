#pragma once

#include <openssl/evp.h>

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quorumlab/dimension.hpp"
#include "quorumlab/power.hpp"
#include "quorumlab/serialization.hpp"
#include "quorumlab/structure.hpp"

namespace quorumlab {

inline constexpr const char* kToolName = "quorumlab";
inline constexpr const char* kToolVersion = "0.1.0";

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

// {tool, version, command, input_digest, result}; the digest covers the
// canonical dump of `inputs`.
inline json envelope(const std::string& command, const json& inputs, json result) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"input_digest", sha256_hex(inputs.dump())},
          {"inputs", inputs},
          {"result", std::move(result)}};
}

inline json coalition_json(const Coalition& c) { return c.members(); }

inline json profile_json(const Profile& p) { return json::array({p.r, p.s, p.gamma}); }

inline json swap_witness_json(const SwapWitness& w) {
  return {{"first", coalition_json(w.first)},
          {"second", coalition_json(w.second)},
          {"out_of_first", w.out_of_first.value},
          {"out_of_second", w.out_of_second.value},
          {"first_after", coalition_json(w.first_after())},
          {"second_after", coalition_json(w.second_after())}};
}

inline json clause_json(const ClauseResult& c) {
  return {{"applicable", c.applicable}, {"holds", c.holds}, {"passed", c.passed()}, {"note", c.note}};
}

inline json proposition1_json(const Proposition1Report& r) {
  return {{"n", r.n},
          {"a", clause_json(r.a)},
          {"b", clause_json(r.b)},
          {"c", clause_json(r.c)},
          {"d", clause_json(r.d)},
          {"passed", r.passed()}};
}

inline json analyze_report(const Game& game, const Limits& limits) {
  const WinTable table(game, limits);
  const auto witness = is_swap_robust(table);
  const bool complete = is_complete(table);
  json out{{"players", game.players()},
           {"swap_robust", !witness.has_value()},
           {"swap_witness", witness ? swap_witness_json(*witness) : json(nullptr)},
           {"complete", complete},
           {"weakly_complete", is_weakly_complete(table)},
           {"minimal_winning_count", minimal_winning(table).size()},
           {"maximal_losing_count", maximal_losing(table).size()},
           {"proposition1", nullptr}};
  if (const auto* lg = game.as_legco(); lg != nullptr && lg->scenario == Scenario::StatusQuo) {
    out["proposition1"] = proposition1_json(proposition1_report(lg->n, limits));
  }
  return out;
}

inline json separation_row_json(const SymmetricRow& r) {
  return {{"q", to_string(r.q)}, {"e", to_string(r.e)}, {"f", to_string(r.f)}, {"g", to_string(r.g)}};
}

inline json refutation_json(const Refutation& ref) {
  json covered = json::array();
  for (const auto& p : ref.covered) covered.push_back(profile_json(p));
  json cases = json::array();
  for (const auto& c : ref.cases) {
    json farkas = json::array();
    if (c.certificate) {
      for (const auto& y : c.certificate->multipliers) farkas.push_back(to_string(y));
    }
    cases.push_back({{"index", c.index},
                     {"rows", c.row_of_profile},
                     {"infeasible_row", c.infeasible_row},
                     {"constraints", c.labels},
                     {"farkas", std::move(farkas)}});
  }
  json realization = nullptr;
  if (ref.realization) {
    realization = json::array();
    for (const auto& r : ref.realization->rows) realization.push_back(separation_row_json(r));
  }
  return {{"m", ref.m},
          {"covered_profiles", std::move(covered)},
          {"case_count", ref.cases.size()},
          {"refuted", ref.refuted},
          {"cases", std::move(cases)},
          {"realization", std::move(realization)}};
}

inline json certificate_json(const DimensionCertificate& cert) {
  json refutations = json::array();
  for (const auto& r : cert.refutations) refutations.push_back(refutation_json(r));
  return {{"candidate_realizes", cert.candidate_realizes},
          {"disagreement", cert.disagreement ? coalition_json(*cert.disagreement) : json(nullptr)},
          {"lower", cert.lower},
          {"upper", cert.upper},
          {"certified", cert.certified()},
          {"dimension", cert.certified() ? json(cert.upper) : json(nullptr)},
          {"realizer", cert.candidate_realizes ? matrix_to_json(cert.realizer) : json(nullptr)},
          {"swap_witness", cert.swap_witness ? swap_witness_json(*cert.swap_witness) : json(nullptr)},
          {"refutations", std::move(refutations)},
          {"note", cert.note}};
}

inline json theorem2_json(const Theorem2Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"n", rep.n},
          {"w_dimension", rep.w_dimension},
          {"c_dimension", rep.c_dimension},
          {"c_dimension_machine_checked", rep.c_dimension_machine_checked},
          {"checks", std::move(checks)},
          {"note", rep.note},
          {"passed", rep.passed()}};
}

inline std::string decimal(const Rational& r, int digits) { return format_significant(to_double(r), digits); }

inline json power_closed_report(int n, int digits) {
  const auto b = banzhaf_closed(n);
  const BigInt total = 2 * n * b.ordinary + b.government;
  const Rational bi_ord(b.ordinary, total);
  const Rational bi_gov(b.government, total);
  const Rational ratio(b.government, b.ordinary);
  const Rational gov = ssi_gov_closed(n);
  const Rational ord = (1 - gov) / (2 * n);
  const Rational sratio = 2 * n * gov / (1 - gov);
  return {{"n", n},
          {"banzhaf",
           {{"b_ord", b.ordinary.str()},
            {"b_gov", b.government.str()},
            {"bi_ordinary", to_string(bi_ord)},
            {"bi_government", to_string(bi_gov)},
            {"bi_ratio", to_string(ratio)},
            {"bi_ratio_decimal", decimal(ratio, digits)},
            {"bi_ratio_asymptotic", format_significant(bi_ratio_asymptotic(n), digits)}}},
          {"ssi",
           {{"government", to_string(gov)},
            {"ordinary", to_string(ord)},
            {"ratio", to_string(sratio)},
            {"government_decimal", decimal(gov, digits)},
            {"ordinary_decimal", decimal(ord, digits)},
            {"ratio_decimal", decimal(sratio, digits)},
            {"government_3sf", decimal(gov, 3)},
            {"ordinary_3sf", decimal(ord, 3)}}}};
}

inline json power_enum_report(const Game& game, const Limits& limits, int digits) {
  const WinTable table(game, limits);
  const auto swings = banzhaf_enum(table);
  const auto bi = banzhaf_index(swings);
  const auto ssi = ssi_enum(table);
  json b = json::array(), bij = json::array(), bid = json::array(), sj = json::array(), sd = json::array();
  for (const auto& v : swings.b) b.push_back(v.str());
  for (const auto& v : bi.values) {
    bij.push_back(to_string(v));
    bid.push_back(decimal(v, digits));
  }
  for (const auto& v : ssi.values) {
    sj.push_back(to_string(v));
    sd.push_back(decimal(v, digits));
  }
  return {{"players", game.players()},
          {"swings", std::move(b)},
          {"banzhaf", std::move(bij)},
          {"banzhaf_decimal", std::move(bid)},
          {"ssi", std::move(sj)},
          {"ssi_decimal", std::move(sd)}};
}

inline const char* kSweepHeader = "n,parity,b_ord,b_gov,bi_ratio,bi_ratio_asymptotic,ssi_gov,ssi_ord,ssi_ratio";

inline std::string sweep_csv(const std::vector<SweepRow>& rows, int digits) {
  std::ostringstream out;
  out << kSweepHeader << "\n";
  for (const auto& r : rows) {
    out << r.n << "," << (r.n % 2 == 1 ? "odd" : "even") << "," << r.b_ord.str() << "," << r.b_gov.str()
        << "," << decimal(r.bi_ratio, digits) << "," << format_significant(r.bi_ratio_asymptotic, digits)
        << "," << decimal(r.ssi_gov, digits) << "," << decimal(r.ssi_ord, digits) << ","
        << decimal(r.ssi_ratio, digits) << "\n";
  }
  return out.str();
}

inline json sweep_json(const std::vector<SweepRow>& rows, int digits) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"parity", r.n % 2 == 1 ? "odd" : "even"},
                   {"b_ord", r.b_ord.str()},
                   {"b_gov", r.b_gov.str()},
                   {"bi_ratio", to_string(r.bi_ratio)},
                   {"bi_ratio_decimal", decimal(r.bi_ratio, digits)},
                   {"bi_ratio_asymptotic", format_significant(r.bi_ratio_asymptotic, digits)},
                   {"ssi_gov", to_string(r.ssi_gov)},
                   {"ssi_ord", to_string(r.ssi_ord)},
                   {"ssi_ratio", to_string(r.ssi_ratio)},
                   {"ssi_ratio_decimal", decimal(r.ssi_ratio, digits)}});
  }
  return out;
}

inline json probe_json(const ConjectureProbe& probe, int digits) {
  json rows = json::array();
  for (const auto& r : probe.rows) {
    rows.push_back({{"n", r.n},
                    {"lambda_estimate", format_significant(r.lambda_estimate, digits)},
                    {"ssi_ratio", format_significant(r.ssi_ratio, digits)}});
  }
  return {{"rows", std::move(rows)},
          {"fitted_exponent", format_significant(probe.fitted_exponent, digits)},
          {"fitted_exponent_odd", format_significant(probe.fitted_exponent_odd, digits)},
          {"fitted_exponent_even", format_significant(probe.fitted_exponent_even, digits)}};
}

// "1..6", "35", "1..7,35".
inline std::vector<int> parse_n_set(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw input_error("bad n in set '" + text + "'");
    }
    if (used != s.size() || v < 1) throw input_error("bad n in set '" + text + "'");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.insert(to_int(part));
    } else {
      const int lo = to_int(part.substr(0, dots));
      const int hi = to_int(part.substr(dots + 2));
      if (hi < lo) throw input_error("empty range in n set '" + text + "'");
      for (int n = lo; n <= hi; ++n) out.insert(n);
    }
  }
  if (out.empty()) throw input_error("empty n set");
  return {out.begin(), out.end()};
}

struct VerifyOptions {
  std::vector<int> n_set;
  Limits limits;
  bool force_enumeration = false;  // capacity error instead of skipping
};

inline int expected_dimension(int n, Scenario scenario) {
  switch (scenario) {
    case Scenario::StatusQuo: return n <= 2 ? 1 : n <= 4 ? 2 : 3;
    case Scenario::BicameralOnly: return n <= 2 ? 1 : 2;
    case Scenario::Unicameral: return 1;
  }
  return 0;
}

// The regression battery. Enumeration-backed checks run for n with
// 2n+1 <= cap; closed-form checks run for every n.
inline json verify_paper(const VerifyOptions& opt, bool& all_passed) {
  json checks = json::array();
  all_passed = true;
  auto add = [&](const std::string& name, int n, bool ok, json detail) {
    all_passed = all_passed && ok;
    checks.push_back({{"name", name}, {"n", n}, {"passed", ok}, {"detail", std::move(detail)}});
  };

  for (const int n : opt.n_set) {
    const bool enumerable = 2 * n + 1 <= std::min(opt.limits.max_players, 62);
    if (!enumerable && opt.force_enumeration) require_enumerable(2 * n + 1, opt.limits, "verify-paper");
    if (enumerable) {
      const Game legco = legco_game(n);
      const auto eq = games_equal(legco, Game::weighted(paper_realization(n)), opt.limits);
      add("realization_equality", n, eq.equal, eq.witness ? coalition_json(*eq.witness) : json(nullptr));

      const auto prop = proposition1_report(n, opt.limits);
      add("proposition1", n, prop.passed(), proposition1_json(prop));

      for (const auto scenario : {Scenario::StatusQuo, Scenario::BicameralOnly, Scenario::Unicameral}) {
        const auto cert = certify_dimension(legco_game(n, scenario), scenario_realization(n, scenario), opt.limits);
        const int want = expected_dimension(n, scenario);
        add("dimension_" + to_string(scenario), n, cert.certified() && cert.upper == want,
            {{"expected", want},
             {"lower", cert.lower},
             {"upper", cert.upper},
             {"swap_witness", cert.swap_witness ? swap_witness_json(*cert.swap_witness) : json(nullptr)},
             {"lp_cases", [&] {
                json cases = json::array();
                for (const auto& r : cert.refutations) cases.push_back({{"m", r.m}, {"cases", r.cases.size()}, {"refuted", r.refuted}});
                return cases;
              }()}});
      }

      if (n > 4) {
        const auto rep = theorem2_report(n, opt.limits);
        json failed = json::array();
        for (const auto& c : rep.checks) {
          if (!c.passed) failed.push_back(c.name);
        }
        add("cw_dimension", n, rep.passed(),
            {{"checks", rep.checks.size()},
             {"failed", std::move(failed)},
             {"w_dimension", rep.w_dimension},
             {"c_dimension", rep.c_dimension},
             {"c_dimension_machine_checked", rep.c_dimension_machine_checked}});
      }

      const WinTable table(legco, opt.limits);
      const auto swings = banzhaf_enum(table);
      const auto closed = banzhaf_closed(n);
      bool banzhaf_ok = swings.b.back() == closed.government;
      for (int j = 0; j < 2 * n; ++j) banzhaf_ok = banzhaf_ok && swings.b[static_cast<std::size_t>(j)] == closed.ordinary;
      add("banzhaf_closed_vs_enumeration", n, banzhaf_ok,
          {{"b_ord", closed.ordinary.str()}, {"b_gov", closed.government.str()}});

      const auto ssi = ssi_enum(table);
      const Rational gov = ssi_gov_closed(n);
      bool ssi_ok = ssi.values.back() == gov && ssi.sum() == 1;
      for (int j = 0; j < 2 * n; ++j) ssi_ok = ssi_ok && ssi.values[static_cast<std::size_t>(j)] == ssi.values[0];
      add("ssi_closed_vs_enumeration", n, ssi_ok, {{"ssi_gov", to_string(gov)}});
    }

    if (n == 35) {
      const Rational gov = ssi_gov_closed(n);
      const double g = to_double(gov);
      const double o = to_double(ssi_ordinary_closed(n));
      const double ratio = to_double(ssi_ratio_closed(n));
      add("ssi_government_0.0395", n, std::fabs(g - 0.0395) <= 0.00005, format_significant(g, 6));
      add("ssi_ordinary_0.0137", n, std::fabs(o - 0.0137) <= 0.00005, format_significant(o, 6));
      add("ssi_ratio_almost_three", n, ratio >= 2.7 && ratio <= 3.0, format_significant(ratio, 6));
    }
  }
  return {{"passed", all_passed}, {"checks", std::move(checks)}};
}

}  // namespace quorumlab
