#pragma once

// Seeded generators and brute-force oracles. The oracles walk trees and fans
// with their own code (only seq.hpp and the raw tree accessors are shared)
// so that agreement with the engine is evidence rather than tautology.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "baire/bars_fans.hpp"
#include "baire/brouwer.hpp"
#include "baire/seq.hpp"

namespace baire::testkit {

using Rng = std::mt19937_64;

struct OpGenSpec {
  Nat max_depth = 5;
  Nat max_width = 4;
  Nat max_leaf_value = 9;
  std::uint64_t seed = 0;
};

/// A finite op with height <= max_depth, explicit widths <= max_width and
/// leaf values in [1, max_leaf_value]. Deterministic in the seed.
BrouwerOp gen_random_op(const OpGenSpec& spec);
BrouwerOp gen_random_op(const OpGenSpec& spec, Rng& rng);

/// Finite prefix (length <= max_prefix, entries <= max_entry) followed by a
/// zero or cyclic tail with entries <= max_entry.
Point random_point(Rng& rng, Nat max_entry = 5, Nat max_prefix = 7);
std::vector<Point> random_points(Rng& rng, std::size_t count, Nat max_entry = 5);

/// Random list of addresses of length <= max_len with entries < max_entry.
std::vector<FinSeq> random_finite_set(Rng& rng, std::size_t max_items, Nat max_len, Nat max_entry);

// ---------------------------------------------------------------------------
// Oracles

/// γ(a) by direct descent.
Nat oracle_nbhd(const BrouwerOp& op, const FinSeq& a);
Nat oracle_height(const BrouwerOp& op);
Nat oracle_width(const BrouwerOp& op);

/// Every node position of a finite op, the default child standing at index
/// width, in preorder.
std::vector<FinSeq> oracle_positions(const BrouwerOp& op);

/// The bar of a finite op by brute force: all addresses up to its height
/// with entries below `cutoff` whose value is positive and whose parent's
/// value is zero. Sorted.
std::vector<FinSeq> oracle_bar(const BrouwerOp& op, Nat cutoff);

/// Least N <= max_depth such that, for every member node a of T at depth
/// N, F takes one value on the sampled extensions a*b*0^ω. With a finite
/// realiser the extension grid is exhaustive (|b| up to the remaining
/// height, entries up to the widest explicit child list); without one it
/// is |b| <= 3, entries < 3.
std::optional<Nat> brute_force_modulus(const ContinuousFn& f, const FanTree& t, Nat max_depth);

/// max({n < horizon : δ(ᾱn) ≠ δ(ᾱ(n+1))} ∪ {1}) scanned directly along α.
Nat oracle_max_change(const CBar& p, const Point& alpha, Nat horizon);

/// Finite realiser of α ↦ min(α(0), width) + min(α(1), width): explicit
/// children below `width`, the default child saturating.
BrouwerOp sum_first_two_op(Nat width = 2);

/// Uniform depth-k unlabeled op: every address of length k is a bar address.
BrouwerOp uniform_skeleton(Nat k);

}  // namespace baire::testkit
