#include <gtest/gtest.h>

#include "baire/suites.hpp"
#include "baire/testkit.hpp"
#include "helpers.hpp"

namespace baire {
namespace {

using testkit::OpGenSpec;

bool within_spec(const BrouwerOp& op, const OpGenSpec& spec, Nat depth = 0) {
  if (op.is_leaf()) return op.leaf_value() >= 1 && op.leaf_value() <= spec.max_leaf_value;
  if (depth >= spec.max_depth || op.width() > spec.max_width) return false;
  for (const auto& c : op.explicit_children()) {
    if (!within_spec(c, spec, depth + 1)) return false;
  }
  return within_spec(op.default_child(), spec, depth + 1);
}

TEST(Generator, DepthZeroIsALeaf) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const OpGenSpec spec{0, 4, 9, seed};
    const auto op = testkit::gen_random_op(spec);
    ASSERT_TRUE(op.is_leaf());
    EXPECT_GE(op.leaf_value(), 1u);
    EXPECT_LE(op.leaf_value(), 9u);
  }
}

TEST(Generator, Deterministic) {
  const OpGenSpec spec{5, 4, 9, 1234};
  EXPECT_TRUE(same_op(testkit::gen_random_op(spec), testkit::gen_random_op(spec)));
}

TEST(Generator, StaysWithinSpecAndVaries) {
  testkit::Rng rng(77);
  const OpGenSpec spec;
  Nat deepest = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto op = testkit::gen_random_op(spec, rng);
    ASSERT_TRUE(op.is_finite());
    ASSERT_TRUE(within_spec(op, spec)) << describe(op);
    deepest = std::max(deepest, op.height());
  }
  EXPECT_EQ(deepest, spec.max_depth);
}

TEST(Oracles, NeighbourhoodAgreesWithEngineOnGrid) {
  testkit::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto op = testkit::gen_random_op({}, rng);
    for (const auto& a : testkit::oracle_positions(op)) {
      EXPECT_EQ(testkit::oracle_nbhd(op, a), apply_nbhd(op, a));
      EXPECT_EQ(testkit::oracle_nbhd(op, a.child(9)), apply_nbhd(op, a.child(9)));
    }
    EXPECT_EQ(testkit::oracle_height(op), op.height());
    EXPECT_EQ(testkit::oracle_width(op), op.max_width());
  }
}

TEST(Oracles, BruteForceModulusExamples) {
  const auto binary = FanTree::full_binary();
  EXPECT_EQ(testkit::brute_force_modulus(ContinuousFn::realised_by(BrouwerOp::leaf(3)), binary, 4), Nat{0});
  EXPECT_EQ(testkit::brute_force_modulus(ContinuousFn::realised_by(testkit::sum_first_two_op()), binary, 4), Nat{2});
  // Without a realiser the default grid is used.
  const ContinuousFn first([](const Point& a) { return std::min<Nat>(a.at(0), 1); });
  EXPECT_EQ(testkit::brute_force_modulus(first, binary, 4), Nat{1});
}

TEST(Oracles, SumOpComputesTheSum) {
  const auto op = testkit::sum_first_two_op();
  for (Nat x = 0; x < 2; ++x) {
    for (Nat y = 0; y < 2; ++y) EXPECT_EQ(eval(op, Point::zeros({x, y})).value, x + y);
  }
  EXPECT_EQ(eval(op, Point::zeros({7, 9})).value, 4u);
}

TEST(Oracles, UniformSkeletonBarIsTheCylinder) {
  for (Nat k = 0; k < 4; ++k) EXPECT_EQ(testkit::oracle_bar(testkit::uniform_skeleton(k), 3), cylinder({}, k, 3));
}

TEST(Suites, SmallRunsPass) {
  for (const auto& name : suites::suite_names()) {
    const auto r = suites::run_suite(name, {99, 10, 10});
    EXPECT_TRUE(r.passed()) << name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checked, 0u) << name;
  }
  EXPECT_THROW(suites::run_suite("nope", {}), SchemaError);
}

}  // namespace
}  // namespace baire
