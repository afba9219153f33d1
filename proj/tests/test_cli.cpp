#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "baire/json_io.hpp"
#include "baire/testkit.hpp"
#include "run_cli.hpp"

namespace baire {
namespace {

using test::run_cli;

const std::string kZero = R"({"prefix":[],"tail":"zeros"})";

std::string sum_op() { return json_io::to_json(testkit::sum_first_two_op()).dump(); }

TEST(Cli, EvalLeaf) {
  const auto r = run_cli({"eval", "--op", R"({"leaf":5})", "--point", kZero});
  EXPECT_EQ(r.status, 0);
  const auto j = json_io::parse(r.out);
  EXPECT_EQ(j.at("value"), 4);
  EXPECT_EQ(j.at("modulus"), 0);
}

TEST(Cli, ModulusOfSum) {
  const auto r = run_cli({"modulus", "--op", sum_op(), "--fan", R"({"kind":"full_binary"})"});
  EXPECT_EQ(r.status, 0);
  const auto j = json_io::parse(r.out);
  EXPECT_EQ(j.at("N"), 2);
  EXPECT_EQ(j.at("M"), 3);
}

TEST(Cli, ConvertRoundTripThroughFile) {
  const auto cov = run_cli({"convert", "--to", "cov", "--input", R"({"leaf":5})"});
  ASSERT_EQ(cov.status, 0);
  const std::string path = ::testing::TempDir() + "baire_cov.json";
  std::ofstream(path) << cov.out;
  const auto back = run_cli({"convert", "--to", "brouwer", "--input", path});
  EXPECT_EQ(back.status, 0);
  EXPECT_EQ(json_io::parse(back.out).at("result").dump(), R"({"leaf":1})");
  std::remove(path.c_str());
}

TEST(Cli, ConvertMapAndBack) {
  const auto map = run_cli({"convert", "--to", "map", "--input", sum_op()});
  ASSERT_EQ(map.status, 0);
  const auto back = run_cli({"convert", "--to", "brouwer", "--input", map.out});
  ASSERT_EQ(back.status, 0);
  const auto op = json_io::op_from_json(json_io::parse(back.out).at("result"));
  EXPECT_TRUE(same_op(op, testkit::sum_first_two_op()));
}

TEST(Cli, BarTruncates) {
  const auto r = run_cli({"bar", "--op", sum_op(), "--limit", "4"});
  EXPECT_EQ(r.status, 0);
  const auto j = json_io::parse(r.out);
  EXPECT_EQ(j.at("bar").size(), 4u);
  EXPECT_EQ(j.at("truncated"), true);
  EXPECT_EQ(j.at("bar")[0].dump(), R"({"addr":[0,0],"value":1})");
}

TEST(Cli, CBarAnswers) {
  const auto r = run_cli({"cbar", "--op", sum_op(), "--from", "function", "--addrs", "[[],[0,1]]"});
  EXPECT_EQ(r.status, 0);
  const auto j = json_io::parse(r.out);
  EXPECT_EQ(j.at("answers")[0].at("member"), "no");
  EXPECT_EQ(j.at("answers")[1].at("member"), "yes");
}

TEST(Cli, CheckSuite) {
  const auto r = run_cli({"check", "--suite", "cov-roundtrip", "--count", "20", "--seed", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json_io::parse(r.out).at("passed"), true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"eval", "--op", "{bad", "--point", kZero}).status, 2);
  EXPECT_EQ(run_cli({"eval", "--op", R"({"leaf":0})", "--point", kZero}).status, 2);
  EXPECT_EQ(run_cli({"eval", "--op", "/nonexistent/op.json", "--point", kZero}).status, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).status, 2);
  EXPECT_EQ(run_cli({"check", "--suite", "nope"}).status, 2);
  EXPECT_EQ(run_cli({"eval", "--fuel", "0", "--op", sum_op(), "--point", kZero}).status, 3);
  EXPECT_EQ(run_cli({"modulus", "--budget", "1", "--op", sum_op()}).status, 3);
  // A table map with an undefined value on its witness.
  const std::string broken = R"({"witness":{"root":[],"shape":{"sup":{"children":[],"default":{"leaf":1}}}},"values":[{"addr":[0],"n":1}]})";
  EXPECT_EQ(run_cli({"convert", "--to", "brouwer", "--input", broken}).status, 1);
}

TEST(Cli, FuelFromEnvironment) {
  EXPECT_EQ(run_cli({"eval", "--op", sum_op(), "--point", kZero}, "BAIRE_FUEL=0").status, 3);
  EXPECT_EQ(run_cli({"eval", "--op", sum_op(), "--point", kZero}, "BAIRE_FUEL=5").status, 0);
  EXPECT_EQ(run_cli({"eval", "--op", sum_op(), "--point", kZero}, "BAIRE_FUEL=x").status, 2);
}

TEST(Cli, ErrorsAreJson) {
  const auto r = run_cli({"eval", "--fuel", "0", "--op", sum_op(), "--point", kZero});
  const auto j = json_io::parse(r.out);
  EXPECT_EQ(j.at("error"), "fuel");
  EXPECT_EQ(j.at("exit"), 3);
}

}  // namespace
}  // namespace baire
