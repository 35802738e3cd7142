#include <gtest/gtest.h>

#include "tga/cli.hpp"
#include "tga/scalar.hpp"

using namespace tga;

namespace {

ExperimentConfig config(const std::string& command, Json params) {
  ExperimentConfig c;
  c.command = command;
  c.params = std::move(params);
  return c;
}

}  // namespace

TEST(Cli, VerifyActionPasses) {
  auto r = run(config("action.verify", {{"alpha", "2:1"}, {"q", 4}}));
  EXPECT_EQ(r.exit_code, kExitOk);
  const Json& res = r.body["results"];
  for (const char* k : {"homomorphism", "multiplicative", "starPreserving", "tracePreserving"})
    EXPECT_TRUE(res[k].get<bool>()) << k;
  EXPECT_EQ(r.body["check"]["routine"], "verify_action");
  EXPECT_FALSE(r.body.contains("wallClockMs"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(config("action.verify", {{"alpha", "2x1"}, {"q", 4}})).exit_code, kExitInvalidConfig);
  EXPECT_EQ(run(config("action.verify", {{"q", 4}})).exit_code, kExitInvalidConfig);
  EXPECT_EQ(run(config("no.such", {})).exit_code, kExitInvalidConfig);
  // ord(alpha^(1/2)) = 8 does not divide 6
  EXPECT_EQ(run(config("action.verify", {{"alpha", "4:1"}, {"q", 6}})).exit_code, kExitInvalidConfig);

  auto fault = run(config("action.verify", {{"alpha", "2:1"}, {"q", 4}, {"phaseFault", 1}}));
  EXPECT_EQ(fault.exit_code, kExitCheckFailed);
  EXPECT_FALSE(fault.body["witness"].get<std::string>().empty());

  auto crossed = run(config("action.crossed", {{"alpha", "2:1"}, {"q", 4}, {"fault", true}}));
  EXPECT_EQ(crossed.exit_code, kExitCheckFailed);
  EXPECT_TRUE(crossed.body.contains("witness"));
}

TEST(Cli, ReportIsDeterministic) {
  auto c = config("rigidity.trivialize",
                  {{"cocycle", {{"type", "coboundary"}, {"group", {{"kind", "abelian"}, {"moduli", {3, 3}}}}, {"order", 3}}}});
  c.seed = 5;
  auto a = run(c), b = run(c);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(render(a, false), render(b, false));
  EXPECT_NE(render(a, true).find("wallClockMs"), std::string::npos);
  EXPECT_EQ(a.body["config"], c.to_json());
}

TEST(Cli, ConfigRoundTrip) {
  auto c = config("conjugacy.decide", {{"alpha1", "5:1"}, {"alpha2", "5:1"}, {"a", "1,1,0,1"}, {"b", "1,0,1,1"}});
  c.seed = 9;
  c.tol = 1e-6;
  c.out = "x.json";
  auto back = ExperimentConfig::from_json(Json::parse(c.to_json().dump()));
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_THROW(ExperimentConfig::from_json(Json::array()), ConfigError);
  EXPECT_THROW(ExperimentConfig::from_json({{"params", Json::object()}}), ConfigError);
}

TEST(Cli, ConjugacyDecide) {
  auto same = run(config("conjugacy.decide", {{"alpha1", "5:1"}, {"alpha2", "5:1"}, {"a", "1,1,0,1"}, {"b", "1,0,1,1"}}));
  EXPECT_EQ(same.exit_code, kExitOk);
  EXPECT_EQ(same.body["results"]["verdict"], "Consistent");
  for (const auto& t : same.body["results"]["transcript"]) {
    EXPECT_TRUE(t.contains("constraint"));
    EXPECT_TRUE(t.contains("anchor"));
  }
  auto sym = run(config("conjugacy.decide", {{"symbolic", true}, {"a", "1,1,0,1"}, {"b", "1,0,1,1"}}));
  EXPECT_EQ(sym.body["results"]["verdict"], "Obstructed");
  auto commuting = run(config("conjugacy.decide", {{"alpha1", "5:1"}, {"alpha2", "5:1"}, {"a", "1,1,0,1"}, {"b", "1,2,0,1"}}));
  EXPECT_EQ(commuting.exit_code, kExitInvalidConfig);
}

TEST(Cli, DisintegrateReport) {
  auto r = run(config("disintegrate.heisenberg", {{"m", 3}}));
  ASSERT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.body["results"]["blocks"].size(), 3u);
  EXPECT_TRUE(r.body["results"]["unitaryCheck"].get<bool>());
  EXPECT_TRUE(r.body["results"]["intertwineCheck"].get<bool>());

  auto custom = run(config("disintegrate.custom", {{"a", {2}}, {"g", {2, 2}}, {"forms", {{0, 1, 0, 0}}}}));
  EXPECT_EQ(custom.exit_code, kExitOk);
  EXPECT_EQ(custom.body["results"]["blocks"].size(), 2u);
}

TEST(Cli, CocycleCommands) {
  Json sym = {{"type", "symplectic"}, {"alphaOrder", 4}, {"alphaExp", 1}, {"n", 1}, {"q", 8}};
  auto v = run(config("cocycle.verify", {{"cocycle", sym}}));
  EXPECT_EQ(v.exit_code, kExitOk);
  EXPECT_TRUE(v.body["results"]["exhaustive"].get<bool>());
  auto cb = run(config("cocycle.coboundary", {{"cocycle", sym}}));
  EXPECT_FALSE(cb.body["results"]["coboundary"].get<bool>());
  auto res = run(config("cocycle.restrict", {{"cocycle", sym}, {"subgroup", {{1, 0}}}}));
  EXPECT_EQ(res.body["results"]["subgroupOrder"], 8);
  EXPECT_TRUE(res.body["results"]["coboundary"].get<bool>());
  auto table = run(config("cocycle.verify", {{"cocycle",
                                              {{"type", "table"},
                                               {"group", {{"kind", "abelian"}, {"moduli", {2}}}},
                                               {"order", 2},
                                               {"values", {{1, 1, 1}}}}}}));
  EXPECT_EQ(table.exit_code, kExitOk);
  auto bad = run(config("cocycle.verify", {{"cocycle",
                                            {{"type", "table"},
                                             {"group", {{"kind", "abelian"}, {"moduli", {3}}}},
                                             {"order", 2},
                                             {"values", {{1, 1, 1}}}}}}));
  EXPECT_EQ(bad.exit_code, kExitCheckFailed);
}

TEST(Cli, ClockShiftAndScalars) {
  auto cs = run(config("algebra.clockshift", {{"n", 12}}));
  EXPECT_EQ(cs.exit_code, kExitOk);
  EXPECT_EQ(cs.body["results"]["tracesChecked"], 144);
  auto nonprimitive = run(config("algebra.clockshift", {{"n", 6}, {"exp", 2}}));
  EXPECT_EQ(nonprimitive.exit_code, kExitOk);
  auto s = run(config("scalars.check", {{"alpha", "5:2"}, {"power", 5}}));
  EXPECT_EQ(s.exit_code, kExitOk);
  EXPECT_EQ(s.body["results"]["power"], Scalar::one().to_string());
}

TEST(Cli, SweepTables) {
  SweepSpec gap;
  gap.base = config("rigidity.gap", {{"family", "torus"}});
  gap.parameter = "q";
  for (int q = 2; q <= 12; ++q) gap.values.push_back(q);
  auto r = sweep(gap);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.table["rows"].size(), 11u);
  std::size_t lines = 0;
  for (char ch : r.csv) lines += ch == '\n';
  EXPECT_EQ(lines, 12u);

  SweepSpec empty = gap;
  empty.values.clear();
  auto e = sweep(empty);
  EXPECT_EQ(e.exit_code, kExitOk);
  EXPECT_TRUE(e.table["rows"].empty());

  SweepSpec partial = gap;
  partial.values = {3, 1, 4};
  auto p = sweep(partial);
  EXPECT_EQ(p.exit_code, kExitCheckFailed);
  ASSERT_EQ(p.table["rows"].size(), 3u);
  EXPECT_EQ(p.table["rows"][1]["exitCode"], kExitInvalidConfig);
  EXPECT_EQ(p.table["rows"][2]["exitCode"], kExitOk);

  auto conj = run(config("conjugacy.sweep", {{"order", 7}, {"a", "1,1,0,1"}, {"b", "1,0,1,1"}}));
  EXPECT_EQ(conj.body["results"]["rows"].size(), 36u);
}

TEST(Cli, ParseMatrix) {
  EXPECT_EQ(parse_matrix(Json("1,1,0,1")), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(parse_matrix(Json({0, -1, 1, 0})), (IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_THROW(parse_matrix(Json("1,2,3")), ConfigError);
  EXPECT_THROW(parse_matrix(Json("1,a,0,1")), ConfigError);
  EXPECT_EQ(parse_matrix_list(Json("0,-1,1,0;1,1,0,1")).size(), 2u);
}
