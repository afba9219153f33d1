#include <gtest/gtest.h>

#include "baire/bars_fans.hpp"
#include "baire/formal_space.hpp"
#include "baire/json_io.hpp"
#include "baire/testkit.hpp"
#include "helpers.hpp"

namespace baire {
namespace {

class RandomOps : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  testkit::Rng rng{GetParam()};
  BrouwerOp next() { return testkit::gen_random_op({}, rng); }
};

TEST_P(RandomOps, EvalStopsAtFirstPositivePrefix) {
  for (int i = 0; i < 40; ++i) {
    const auto op = next();
    for (const auto& alpha : testkit::random_points(rng, 20)) {
      const auto r = eval(op, alpha);
      EXPECT_EQ(r.value + 1, apply_nbhd(op, iseg(alpha, r.modulus)));
      for (Nat n = 0; n < r.modulus; ++n) EXPECT_EQ(apply_nbhd(op, iseg(alpha, n)), 0u);
    }
  }
}

TEST_P(RandomOps, SkeletonIdempotentAndUnlabelled) {
  for (int i = 0; i < 40; ++i) {
    const auto op = next();
    const auto sk = skeleton(op);
    EXPECT_TRUE(same_op(skeleton(sk), sk));
    for (const auto& b : bar_patterns(sk)) EXPECT_EQ(b.value, 1u);
  }
}

TEST_P(RandomOps, BarPatternsAreDisjoint) {
  for (int i = 0; i < 40; ++i) {
    const auto ps = bar_patterns(next());
    for (std::size_t x = 0; x < ps.size(); ++x) {
      for (std::size_t y = x + 1; y < ps.size(); ++y) {
        const auto& p = ps[x].address;
        const auto& q = ps[y].address;
        const std::size_t k = std::min(p.size(), q.size());
        const AddrPattern pk(std::vector<PatternStep>(p.steps().begin(), p.steps().begin() + k));
        const AddrPattern qk(std::vector<PatternStep>(q.steps().begin(), q.steps().begin() + k));
        EXPECT_FALSE(intersect(pk, qk)) << p.to_string() << " vs " << q.to_string();
      }
    }
  }
}

TEST_P(RandomOps, ExtractingFromOwnShapeIsIdentity) {
  for (int i = 0; i < 30; ++i) {
    const auto op = next();
    EXPECT_TRUE(same_op(extract_realiser(ContinuousFn::realised_by(op), skeleton(op)), op)) << describe(op);
  }
}

TEST_P(RandomOps, JsonRoundTrip) {
  for (int i = 0; i < 40; ++i) {
    const auto op = next();
    const auto text = json_io::to_json(op).dump();
    EXPECT_TRUE(same_op(json_io::op_from_json(json_io::parse(text)), op));
    const auto r = map_from_realisable(ContinuousFn::realised_by(op));
    const auto back = json_io::map_from_json(json_io::parse(json_io::to_json(r).dump()));
    EXPECT_EQ(back.table(), r.table());
  }
}

TEST_P(RandomOps, CBarsAreMonotone) {
  for (int i = 0; i < 30; ++i) {
    const auto p = cbar_from_function(ContinuousFn::realised_by(next()));
    std::vector<FinSeq> frontier{FinSeq{}};
    for (Nat depth = 0; depth < 4; ++depth) {
      std::vector<FinSeq> next_level;
      for (const auto& a : frontier) {
        const bool yes = cbar_member(p, a).verdict == Verdict::yes;
        for (Nat n = 0; n < 4; ++n) {
          if (yes) {
            EXPECT_EQ(cbar_member(p, a.child(n)).verdict, Verdict::yes) << a.to_string();
          }
          next_level.push_back(a.child(n));
        }
      }
      frontier = std::move(next_level);
    }
  }
}

TEST_P(RandomOps, UniformModulusIsSound) {
  const auto fans = {FanTree::full_binary(), FanTree::bounded_by({3, 2})};
  for (int i = 0; i < 30; ++i) {
    const auto f = ContinuousFn::realised_by(next());
    for (const auto& t : fans) {
      const Nat n = uniform_modulus(f, t);
      for (const auto& a : t.slice(n)) {
        const Nat v = f.at_zero_extension(a);
        for (const auto& tail : testkit::random_points(rng, 8)) EXPECT_EQ(f.apply(tail.prepended(a)), v);
      }
    }
  }
}

TEST_P(RandomOps, RealisableMapsSatisfyAxioms) {
  for (int i = 0; i < 30; ++i) {
    const auto f = ContinuousFn::realised_by(next());
    const auto pts = testkit::random_points(rng, 20);
    const auto report = validate_map(map_from_realisable(f), &f, pts);
    EXPECT_TRUE(report.ok()) << report.violations.front().kind << " " << report.violations.front().detail;
    const auto via_cbar = validate_map(map_from_cbar(cbar_from_function(f), f), &f, pts);
    EXPECT_TRUE(via_cbar.ok()) << via_cbar.violations.front().kind << " " << via_cbar.violations.front().detail;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomOps, ::testing::Values(1u, 2u, 3u, 1000u));

}  // namespace
}  // namespace baire
