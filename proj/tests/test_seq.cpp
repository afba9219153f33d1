#include <gtest/gtest.h>

#include "baire/seq.hpp"
#include "helpers.hpp"

namespace baire {
namespace {

TEST(Concat, EmptyIsIdentity) {
  EXPECT_EQ(concat(FinSeq{}, FinSeq{2, 3}), (FinSeq{2, 3}));
  EXPECT_EQ(concat(FinSeq{2, 3}, FinSeq{}), (FinSeq{2, 3}));
}

TEST(Concat, Appends) { EXPECT_EQ(concat(FinSeq{1}, FinSeq{2}), (FinSeq{1, 2})); }

TEST(Concat, Associative) {
  const FinSeq a{1}, b{2}, c{3};
  EXPECT_EQ(concat(concat(a, b), c), concat(a, concat(b, c)));
  EXPECT_EQ(concat(concat(a, b), c), (FinSeq{1, 2, 3}));
}

TEST(Concat, LengthAdds) {
  EXPECT_EQ(FinSeq{}.size(), 0u);
  EXPECT_EQ(concat(FinSeq{4, 4}, FinSeq{1, 2, 3}).size(), 5u);
}

TEST(Prefix, Antisymmetric) {
  const FinSeq a{1, 2}, b{1, 2, 3};
  EXPECT_TRUE(is_prefix(a, b));
  EXPECT_FALSE(is_prefix(b, a));
  EXPECT_TRUE(is_prefix(a, a));
  EXPECT_FALSE(is_strict_prefix(a, a));
  EXPECT_TRUE(is_strict_prefix(FinSeq{}, a));
  EXPECT_TRUE(comparable(b, a));
  EXPECT_FALSE(comparable(FinSeq{0}, FinSeq{1}));
}

TEST(FinSeqOps, TakeDropChild) {
  const FinSeq a{5, 6, 7};
  EXPECT_EQ(a.take(2), (FinSeq{5, 6}));
  EXPECT_EQ(a.drop(2), (FinSeq{7}));
  EXPECT_EQ(a.child(0), (FinSeq{5, 6, 7, 0}));
  EXPECT_EQ(concat(a.take(1), a.drop(1)), a);
}

TEST(PointAt, ZeroTail) {
  const auto p = Point::zeros({5, 7});
  EXPECT_EQ(p.at(0), 5u);
  EXPECT_EQ(p.at(1), 7u);
  for (Nat n = 2; n < 20; ++n) EXPECT_EQ(p.at(n), 0u);
}

TEST(PointAt, CycleTail) {
  const auto p = Point::cycle({9}, {1, 2, 3});
  for (Nat q = 0; q < 4; ++q) {
    for (Nat r = 0; r < 3; ++r) EXPECT_EQ(p.at(1 + q * 3 + r), r + 1);
  }
  EXPECT_THROW(Point::cycle({}, {}), SchemaError);
}

TEST(PointAt, GeneratedTailIsMemoisedAndPure) {
  int calls = 0;
  const auto p = Point::generated({4}, [&calls](Nat n) {
    ++calls;
    return n * n;
  });
  EXPECT_EQ(p.at(0), 4u);
  EXPECT_EQ(p.at(3), 9u);
  const int after = calls;
  EXPECT_EQ(p.at(3), 9u);
  EXPECT_EQ(calls, after);
  EXPECT_EQ(p.prepended({1, 1}).at(5), 9u);
}

TEST(Iseg, Examples) {
  EXPECT_EQ(iseg(Point::zeros(), 3), (FinSeq{0, 0, 0}));
  EXPECT_EQ(iseg(Point::zeros({5, 7}), 4), (FinSeq{5, 7, 0, 0}));
  EXPECT_EQ(iseg(Point::cycle({}, {1, 2}), 0), FinSeq{});
}

TEST(ExtMember, Examples) {
  const auto u = DecidableSet::from_list({FinSeq{1}});
  EXPECT_TRUE(ext_member(u, {1, 4, 4}));
  EXPECT_FALSE(ext_member(u, {}));
  EXPECT_FALSE(ext_member(u, {2, 1}));
  const auto root = DecidableSet::from_list({FinSeq{}});
  for (const FinSeq& a : {FinSeq{}, FinSeq{3}, FinSeq{0, 9, 9}}) EXPECT_TRUE(ext_member(root, a));
}

TEST(ExtMember, PredicateOnly) {
  const auto even = DecidableSet::from_predicate([](const FinSeq& a) { return a.size() == 2 && a[1] % 2 == 0; });
  EXPECT_FALSE(even.has_extent());
  EXPECT_TRUE(ext_member(even, {1, 4, 7}));
  EXPECT_FALSE(ext_member(even, {1, 3, 7}));
}

TEST(Cylinder, Examples) {
  EXPECT_EQ(cylinder({}, 0, std::nullopt), std::vector<FinSeq>{FinSeq{}});
  EXPECT_EQ(cylinder({1}, 1, 2), (std::vector<FinSeq>{{1, 0}, {1, 1}}));
  EXPECT_EQ(cylinder({}, 2, 2), (std::vector<FinSeq>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(Cylinder, RefusesUnboundedListing) { EXPECT_THROW(cylinder({}, 1, std::nullopt), SchemaError); }

TEST(Cylinder, SetHasExactExtent) {
  const auto c = cylinder_set({2}, 2);
  ASSERT_TRUE(c.has_extent());
  EXPECT_TRUE(c.contains({2, 100, 7}));
  EXPECT_FALSE(c.contains({2, 100}));
  EXPECT_FALSE(c.contains({3, 0, 0}));
}

TEST(AddrPatternTest, OpenStepsMatchFamilies) {
  const AddrPattern p({{1, false}, {2, true}});
  EXPECT_TRUE(p.matches({1, 2}));
  EXPECT_TRUE(p.matches({1, 50}));
  EXPECT_FALSE(p.matches({1, 1}));
  EXPECT_FALSE(p.matches({1}));
  EXPECT_TRUE(p.matches_prefix_of({1, 3, 0}));
  EXPECT_EQ(p.least_instance(), (FinSeq{1, 2}));
  EXPECT_EQ(p.expand(4), (std::vector<FinSeq>{{1, 2}, {1, 3}}));
  EXPECT_FALSE(p.is_exact());
  EXPECT_TRUE(AddrPattern::exact({1, 2}).is_exact());
}

TEST(AddrPatternTest, Intersect) {
  const AddrPattern a({{1, true}}), b({{3, false}}), c({{0, false}});
  EXPECT_EQ(intersect(a, b), AddrPattern({{3, false}}));
  EXPECT_EQ(intersect(a, c), std::nullopt);
  EXPECT_EQ(intersect(a, AddrPattern({{4, true}})), AddrPattern({{4, true}}));
  EXPECT_EQ(intersect(a, AddrPattern({{1, true}, {0, false}})), std::nullopt);
}

TEST(AddrPatternTest, RepresentativesCoverBreakpoints) {
  const AddrPattern q({{2, true}});
  const std::vector<AddrPattern> against{AddrPattern({{5, false}}), AddrPattern({{7, true}})};
  const auto reps = representatives(q, against);
  // One per class: [2,5), {5}, (5,7), [7,∞).
  EXPECT_EQ(reps, (std::vector<FinSeq>{{2}, {5}, {6}, {7}}));
}

TEST(ExtClosure, ListsPrefixExtensionsUpToLength) {
  const auto u = DecidableSet::from_list({FinSeq{1}});
  const auto closed = ext_closure_listing(u, 3);
  ASSERT_TRUE(closed.has_extent());
  EXPECT_TRUE(closed.contains({1}));
  EXPECT_TRUE(closed.contains({1, 9, 9}));
  EXPECT_FALSE(closed.contains({1, 9, 9, 9}));
  EXPECT_FALSE(closed.contains({0, 1}));
}

TEST(Checked, OverflowThrows) {
  EXPECT_EQ(checked_add(2, 3), 5u);
  EXPECT_THROW(checked_add(~Nat{0}, 1), NaturalOverflow);
  EXPECT_THROW(checked_mul(Nat{1} << 40, Nat{1} << 40), NaturalOverflow);
}

}  // namespace
}  // namespace baire
