#include <gtest/gtest.h>

#include <sstream>

#include "thetalift/cli/cli.hpp"

using namespace thetalift;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

io::Json report(const Invocation& r) { return io::Json::parse(r.out); }

const char* kPerturbedCongruenceForm = R"json({
  "lattice": "A1(-1)", "weight": ["-1/2", 0],
  "components": [{"element": [0], "series": {"terms": [{"exp": 0, "val": 11}], "truncation": 1}},
                 {"element": [1], "series": {"terms": [{"exp": "-1/4", "val": 1}], "truncation": "3/4"}}]})json";

}  // namespace

TEST(Cli, SeriesEval) {
  Invocation r = invoke({"series", "eval", "E4^3 / Delta", "--prec", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  io::Json j = report(r);
  EXPECT_EQ(j["schemaVersion"], io::kSchemaVersion);
  EXPECT_EQ(j["command"], "series eval");
  FracPowerSeries s = io::series_from(j["series"]);
  EXPECT_EQ(s.coefficient(-1), 1);
  EXPECT_EQ(s.coefficient(0), 744);
  EXPECT_EQ(s.coefficient(1), 196884);
}

TEST(Cli, LatticeInfoText) {
  Invocation r = invoke({"--format", "text", "latt", "info", "E8"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, RegressFilter) {
  Invocation r = invoke({"paper-regress", "--filter", "weyl.norm"});
  ASSERT_EQ(r.code, cli::kOk) << r.err << r.out;
  io::Json j = report(r);
  EXPECT_EQ(j["passed"], 3);
  EXPECT_EQ(j["failed"], 0);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["name"].get<std::string>().rfind("weyl.norm", 0), 0u);
}

TEST(Cli, RegressFilterMatchingNothingFails) {
  EXPECT_EQ(invoke({"paper-regress", "--filter", "no.such.check"}).code, cli::kVerificationFailed);
}

TEST(Cli, VerificationFailures) {
  std::string misplaced = kPerturbedCongruenceForm;
  misplaced.replace(misplaced.find("-1/4"), 4, "-1/2");
  Invocation bad_form = invoke({"vvf", "validate", misplaced});
  EXPECT_EQ(bad_form.code, cli::kVerificationFailed) << bad_form.err;
  EXPECT_FALSE(report(bad_form)["problems"].empty());

  Invocation congruence = invoke({"weyl", "congruence", kPerturbedCongruenceForm});
  EXPECT_EQ(congruence.code, cli::kVerificationFailed) << congruence.err;
  EXPECT_EQ(report(congruence)["divisible"], false);

  Invocation bundled = invoke({"weyl", "congruence", "A1(-1):congruence"});
  EXPECT_EQ(bundled.code, cli::kOk) << bundled.err;
  EXPECT_EQ(report(bundled)["divisible"], true);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(invoke({"latt", "info", "NoSuchLattice"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"latt", "info", "{\"gram\": [[2, 1], [1"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"latt", "info", "{\"schemaVersion\": 7, \"gram\": [[2]]}"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"latt", "info", "E8", "--no-such-option"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"series", "eval", "E5", "--prec", "2"}).code, cli::kInputError);
  EXPECT_EQ(invoke({}).code, cli::kInputError);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"latt", "info", "I2,10even"},
      {"weil", "check", "A2"},
      {"series", "eval", "eta^16 / eta(2)^8", "--prec", "6"},
      {"lift", "shimura", R"([{"exp": -3, "val": 1}, {"exp": 1, "val": 64}, {"exp": 4, "val": -32384}])",
       "--prec", "5"},
  };
  for (const auto& cmd : commands) {
    Invocation a = invoke(cmd), b = invoke(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

TEST(Regress, CorruptedStreamFailsOnlyTheShimuraCheck) {
  corpus::Corpus data;
  data.shimura_stream[1] = 65;
  auto outcomes = regress::run_checks(data, "");
  ASSERT_FALSE(outcomes.empty());
  for (const auto& o : outcomes) EXPECT_EQ(o.result.passed, o.name != "lift.shimura") << o.name << ": " << o.result.detail;
}

TEST(Regress, PrefixFilter) {
  auto outcomes = regress::run_checks(corpus::Corpus{}, "weyl.congruence");
  ASSERT_EQ(outcomes.size(), 3u);
  for (const auto& o : outcomes) EXPECT_TRUE(o.result.passed) << o.name;
}
