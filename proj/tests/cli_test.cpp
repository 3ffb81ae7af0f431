#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qamap_cli.hpp"
#include "test_support.hpp"

namespace {

using namespace quasiaffine;
using quasiaffine::testing::q;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result qamap(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string line(const render::json& j) { return j.dump() + "\n"; }

TEST(Cli, Examples) {
  EXPECT_EQ(qamap({"fix", "--lambda", "3/2", "--mu", "13/10"}).out, "{\"kind\":\"range\",\"lo\":-2,\"hi\":-1}\n");
  EXPECT_EQ(qamap({"classify", "--lambda", "-7/10", "--mu", "-1/2"}).out, "{\"case\":\"vii\"}\n");
  EXPECT_EQ(qamap({"orbit", "--lambda", "3/2", "--mu", "13/10", "--x", "-1/2", "--steps", "4"}).out, "0\n1\n2\n4\n");
  EXPECT_EQ(qamap({"omega", "--lambda", "-1", "--mu", "1/2", "--x", "5/2"}).out,
            "{\"case\":\"viii\",\"omega\":{\"kind\":\"two_cycle\",\"a\":-2,\"b\":2}}\n");
  EXPECT_EQ(qamap({"cycles", "--lambda", "-1", "--mu", "1/2", "--window", "-2..2"}).out,
            "{\"kind\":\"finite\",\"pairs\":[[-2,2],[-1,1]]}\n");
}

TEST(Cli, OutputMatchesLibrary) {
  quasiaffine::testing::RandomRationals gen(31);
  for (int i = 0; i < 60; ++i) {
    const Params p{gen.next(3, 10), gen.next(2, 10)};
    const Rational x = gen.next(40, 9);
    const std::string l = p.lambda.str();
    const std::string m = p.mu.str();
    EXPECT_EQ(qamap({"fix", "--lambda", l, "--mu", m}).out, line(render::to_json(fixed_points(p))));
    EXPECT_EQ(qamap({"cycles", "--lambda", l, "--mu", m}).out, line(render::to_json(two_cycles(p))));
    EXPECT_EQ(qamap({"classify", "--lambda", l, "--mu", m}).out, line(render::to_json(classify_case(p))));
    render::json om = render::to_json(classify_case(p));
    om["omega"] = render::to_json(omega_limit(p, x));
    EXPECT_EQ(qamap({"omega", "--lambda", l, "--mu", m, "--x", x.str()}).out, line(om));
  }
}

TEST(Cli, PlainOutput) {
  const Result r = qamap({"classify", "--lambda", "3/2", "--mu", "13/10", "--plain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "i\n");
  EXPECT_EQ(qamap({"--plain", "classify", "--lambda", "3/2", "--mu", "13/10"}).out, "i\n");
}

TEST(Cli, UsageErrors) {
  const Result bad = qamap({"fix", "--lambda", "3/0", "--mu", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("zero denominator"), std::string::npos);
  EXPECT_EQ(qamap({"fix", "--lambda", "1.5", "--mu", "1"}).code, 2);
  EXPECT_EQ(qamap({"fix", "--lambda", "1"}).code, 2);
  EXPECT_EQ(qamap({"fix", "--lambda", "1", "--mu", "0", "--bogus"}).code, 2);
  EXPECT_EQ(qamap({"nonsense"}).code, 2);
  EXPECT_EQ(qamap({}).code, 2);
  EXPECT_EQ(qamap({"cycles", "--lambda", "-1", "--mu", "0", "--window", "2..-2"}).code, 2);
  EXPECT_EQ(qamap({"cycles", "--lambda", "-1", "--mu", "0", "--window", "1/2..3"}).code, 2);
  EXPECT_EQ(qamap({"scan", "--lambda-range", "0..1", "--lambda-step", "0", "--mu-range", "0..0", "--x-window",
                   "-1..1"}).code,
            2);
  EXPECT_EQ(qamap({"verify", "--lambda-range", "0..0", "--mu-range", "0..0", "--window", "-1..1", "--n-max", "2"}).code,
            2);
}

TEST(Cli, ScanToStdoutAndFile) {
  const std::vector<std::string> base{"scan",       "--target", "fix",   "--lambda-range", "-3..3", "--lambda-step",
                                      "1/50",       "--mu-range", "0..0", "--x-window",     "-30..30"};
  const Result r = qamap(base);
  EXPECT_EQ(r.code, 0);
  std::ostringstream expected;
  write_csv(sweep({{q(-3), q(3), q(1, 50)}, {q(0), q(0), q(1)}, Window(-30, 30), SweepTarget::FixedPoints}), expected);
  EXPECT_EQ(r.out, expected.str());

  const auto path = std::filesystem::temp_directory_path() / "qamap_cli_test_scan.jsonl";
  auto args = base;
  args[2] = "per2";
  args.insert(args.end(), {"--out", path.string(), "--format", "jsonl"});
  const Result f = qamap(args);
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(render::json::parse(f.out)["rows"], 60);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string s; std::getline(in, s);) {
    const auto row = render::json::parse(s);
    EXPECT_TRUE(row["lambda"].is_string());
    EXPECT_TRUE(row["x"].is_number_integer());
    ++lines;
  }
  EXPECT_EQ(lines, 60u);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyAgreesOnSmallGrid) {
  const Result r = qamap({"verify", "--lambda-range", "-3..3", "--lambda-step", "1/2", "--mu-range", "-1..1",
                          "--mu-step", "1/2", "--window", "-40..40", "--samples", "8", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = render::json::parse(r.out);
  EXPECT_EQ(j["agrees"], true);
  EXPECT_EQ(j["detail"], "");
  EXPECT_EQ(j["grid_points"], 65);
}

TEST(Cli, VerifyReportsDisagreement) {
  // Two iterates cannot reach the escape bound, so every escape sample is unresolved.
  const Result r = qamap({"verify", "--lambda-range", "2..2", "--mu-range", "0..0", "--window", "-5..5", "--samples",
                          "3", "--max-steps", "4"});
  EXPECT_EQ(r.code, 1);
  const auto j = render::json::parse(r.out);
  EXPECT_EQ(j["agrees"], false);
  EXPECT_NE(j["detail"].get<std::string>().find("unresolved"), std::string::npos);
}

TEST(Cli, SamplesAreSeeded) {
  EXPECT_EQ(cli::sample_points(Window(-5, 5), 10, 3), cli::sample_points(Window(-5, 5), 10, 3));
  for (const auto& x : cli::sample_points(Window(-5, 5), 100, 4)) {
    EXPECT_GE(x, q(-5));
    EXPECT_LE(x, q(5));
  }
}

}  // namespace
