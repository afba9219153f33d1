#pragma once

// Spreads, fans and c-bars, with the constructions that move between
// pointwise continuous functions, c-bars and uniform moduli over fans.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "baire/brouwer.hpp"
#include "baire/formal_space.hpp"
#include "baire/seq.hpp"

namespace baire {

/// A decidable, prefix-closed, finitely branching tree in which every node
/// has a child. Children of a member node a are the members a*<n> with
/// n <= bound(a).
class FanTree {
 public:
  enum class Kind { full_binary, bounded, explicit_table, custom };
  using Member = std::function<bool(const FinSeq&)>;
  using Bound = std::function<Nat(const FinSeq&)>;

  /// All sequences with entries < 2.
  static FanTree full_binary();
  /// Entry i ranges below widths[i], entries past the list below tail_width.
  /// Every width must be >= 1.
  static FanTree bounded_by(std::vector<Nat> widths, Nat tail_width = 1);
  /// The prefix closure of `nodes`; below each address in `full` the tree
  /// continues as the full binary tree. Every node not under a `full`
  /// marker must have a child in the table.
  static FanTree explicit_table(std::vector<FinSeq> nodes, std::vector<FinSeq> full);
  /// Caller guarantees the spread and fan laws.
  static FanTree custom(Member member, Bound bound);

  Kind kind() const { return kind_; }
  bool member(const FinSeq& a) const { return member_(a); }
  Nat bound(const FinSeq& a) const { return bound_(a); }
  std::vector<FinSeq> children(const FinSeq& a) const;
  /// Member nodes at the given depth, in lexicographic order.
  std::vector<FinSeq> slice(Nat depth) const;

  const std::vector<Nat>& widths() const { return widths_; }
  Nat tail_width() const { return tail_width_; }
  const std::vector<FinSeq>& nodes() const { return nodes_; }
  const std::vector<FinSeq>& full() const { return full_; }

 private:
  FanTree() = default;

  Kind kind_ = Kind::custom;
  Member member_;
  Bound bound_;
  std::vector<Nat> widths_;
  Nat tail_width_ = 1;
  std::vector<FinSeq> nodes_;
  std::vector<FinSeq> full_;
};

/// A c-bar P: P(a) iff δ(a) = δ(a*b) for all b, together with a Brouwer-
/// operation whose bar lies in P (its well-foundedness certificate).
class CBar {
 public:
  enum class Source { from_brouwer, from_function, opaque };
  using Delta = std::function<Nat(const FinSeq&)>;

  /// The characteristic c-bar of ext(|γ|): δ(a) = min(γ(a), 1).
  static CBar from_brouwer(BrouwerOp op, Nat fuel = kDefaultFuel);
  /// δ(a) = F(a * 0^ω); P decided exactly through F's finite realiser,
  /// which also serves as the witness. Throws SchemaError without one.
  static CBar from_function(ContinuousFn f);
  /// An arbitrary δ. The caller guarantees δ is constant below every bar
  /// address of `witness`.
  static CBar opaque(Delta delta, BrouwerOp witness);

  Nat delta(const FinSeq& a) const { return delta_(a); }
  Source source() const { return source_; }
  const BrouwerOp& witness() const { return witness_; }
  const std::optional<ContinuousFn>& function() const { return function_; }

 private:
  CBar(Source source, Delta delta, BrouwerOp witness, std::optional<ContinuousFn> f)
      : source_(source), delta_(std::move(delta)), witness_(std::move(witness)), function_(std::move(f)) {}

  Source source_;
  Delta delta_;
  BrouwerOp witness_;
  std::optional<ContinuousFn> function_;
};

std::string to_string(CBar::Source s);

/// P from F by a ↦ (∀b) F(a*0^ω) = F(a*b*0^ω).
CBar cbar_from_function(const ContinuousFn& f);

/// Membership P(a). Exact for functions and Brouwer-operations; for opaque
/// δ exact at or below a witness bar address, otherwise a bounded search
/// for a change of δ that can only refute.
ConstancyAnswer cbar_member(const CBar& p, const FinSeq& a, Nat cutoff = 4, Nat fuel = kDefaultFuel);

/// max({n < |u| : δ(u↾n) ≠ δ(u↾(n+1))} ∪ {1})
Nat max_change_depth(const CBar& p, const FinSeq& u);

/// F(α) = max D_α with D_α = {n : δ(ᾱn) ≠ δ(ᾱ(n+1))} ∪ {1}. D_α is complete
/// once ᾱn reaches the witness bar, so evaluation stops there. The result
/// carries the witness skeleton labelled by these values as its realiser.
ContinuousFn function_from_cbar(const CBar& p, Nat fuel = kDefaultFuel);

/// Least N such that F is constant on the cylinder of every member node of
/// T at depth N. Throws FuelExhausted past `depth_budget`.
Nat uniform_modulus(const ContinuousFn& f, const FanTree& t, Nat depth_budget = kDefaultDepthBudget);

/// max{N, max{F(a*0^ω) : a ∈ T, |a| = N}} + 1
Nat modulus_M(const ContinuousFn& f, const FanTree& t, Nat n);

/// Least N with P(a) = yes for every member a of T at depth N. With
/// `accept_unverified`, bounded answers that found no violation count as yes.
Nat uniform_bar_modulus(const CBar& p, const FanTree& t, Nat depth_budget = kDefaultDepthBudget,
                        Nat cutoff = 4, bool accept_unverified = false, Nat fuel = kDefaultFuel);

/// a r n :⇔ P(a) and F(a*0^ω) = n, with totality witnessed by P's witness.
/// Opaque c-bars and generated witnesses are rejected.
FormalMap map_from_cbar(const CBar& p, const ContinuousFn& f);

}  // namespace baire
