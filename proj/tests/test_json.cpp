#include <gtest/gtest.h>

#include "baire/json_io.hpp"
#include "helpers.hpp"

namespace baire {
namespace {

using json_io::Json;
using test::L;
using test::S;

TEST(JsonOp, ParsesAndWrites) {
  const auto op = json_io::op_from_json(
      json_io::parse(R"({"sup":{"children":[{"leaf":1}],"default":{"leaf":9}}})"));
  EXPECT_TRUE(same_op(op, S({L(1)}, L(9))));
  EXPECT_EQ(json_io::to_json(op).dump(), R"({"sup":{"children":[{"leaf":1}],"default":{"leaf":9}}})");
}

TEST(JsonOp, SchemaErrors) {
  EXPECT_THROW(json_io::op_from_json(json_io::parse(R"({"leaf":0})")), SchemaError);
  EXPECT_THROW(json_io::op_from_json(json_io::parse(R"({"leaf":-2})")), SchemaError);
  EXPECT_THROW(json_io::op_from_json(json_io::parse(R"({"sup":{"children":[]}})")), SchemaError);
  EXPECT_THROW(json_io::op_from_json(json_io::parse(R"({"node":1})")), SchemaError);
  EXPECT_THROW(json_io::parse("{oops"), SchemaError);
  EXPECT_THROW(json_io::to_json(test::first_entry_op()), SchemaError);
}

TEST(JsonPoint, Tails) {
  const auto z = json_io::point_from_json(json_io::parse(R"({"prefix":[5,7],"tail":"zeros"})"));
  EXPECT_EQ(iseg(z, 4), (FinSeq{5, 7, 0, 0}));
  const auto c = json_io::point_from_json(json_io::parse(R"({"prefix":[],"tail":{"cycle":[1,2]}})"));
  EXPECT_EQ(iseg(c, 5), (FinSeq{1, 2, 1, 2, 1}));
  EXPECT_EQ(json_io::to_json(c).dump(), R"({"prefix":[],"tail":{"cycle":[1,2]}})");
  EXPECT_EQ(iseg(json_io::point_from_json(json_io::parse(R"({"prefix":[3]})")), 2), (FinSeq{3, 0}));
  EXPECT_THROW(json_io::point_from_json(json_io::parse(R"({"prefix":[],"tail":{"cycle":[]}})")), SchemaError);
  EXPECT_THROW(json_io::point_from_json(json_io::parse(R"({"tail":"zeros"})")), SchemaError);
}

TEST(JsonPattern, OpenComponents) {
  const AddrPattern p({{1, false}, {2, true}});
  EXPECT_EQ(json_io::to_json(p).dump(), R"([1,{"atLeast":2}])");
  EXPECT_EQ(json_io::pattern_from_json(json_io::to_json(p)), p);
}

TEST(JsonCov, RoundTrip) {
  const auto w = cov_from_brouwer({2}, S({L(3)}, L(1)));
  const auto back = json_io::cov_from_json(json_io::parse(json_io::to_json(w).dump()));
  EXPECT_EQ(back.root(), w.root());
  EXPECT_TRUE(same_op(back.shape(), w.shape()));
  EXPECT_THROW(json_io::cov_from_json(json_io::parse(R"({"root":[],"shape":{"leaf":2}})")), SchemaError);
}

TEST(JsonFan, Specs) {
  EXPECT_EQ(json_io::make_fan(json_io::parse(R"({"kind":"full_binary"})")).kind(), FanTree::Kind::full_binary);
  const auto b = json_io::make_fan(json_io::parse(R"({"kind":"bounded","widths":[3,2]})"));
  EXPECT_EQ(b.slice(2).size(), 6u);
  EXPECT_EQ(json_io::to_json(b).dump(), R"({"kind":"bounded","widths":[3,2],"tailWidth":1})");
  const auto e = json_io::make_fan(json_io::parse(R"({"kind":"explicit","nodes":[[0]],"full":[[0]]})"));
  EXPECT_TRUE(e.member({0, 1}));
  EXPECT_FALSE(e.member({1}));
  EXPECT_THROW(json_io::make_fan(json_io::parse(R"({"kind":"explicit","nodes":[[0]]})")), SchemaError);
  EXPECT_THROW(json_io::make_fan(json_io::parse(R"({"kind":"ternary"})")), SchemaError);
}

TEST(JsonMap, TableRoundTrip) {
  const auto r = FormalMap::from_table(cov_from_brouwer({}, S({}, L(1))),
                                       {{AddrPattern::exact({0}), 3}, {AddrPattern({{1, true}}), 4}});
  const auto text = json_io::to_json(r).dump();
  const auto back = json_io::map_from_json(json_io::parse(text));
  EXPECT_EQ(back.table(), r.table());
  EXPECT_EQ(apply_map(back, Point::zeros({6})), 4u);
}

}  // namespace
}  // namespace baire
