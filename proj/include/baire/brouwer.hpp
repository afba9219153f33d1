#pragma once

// Brouwer-operations: well-founded, countably branching trees whose leaves
// carry (output value + 1). They certify continuity of the functions
// N^N -> N they realise.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "baire/seq.hpp"

namespace baire {

class BrouwerOp {
 public:
  using Rule = std::function<BrouwerOp(Nat)>;

  /// Leaf(1).
  BrouwerOp();

  /// The constant neighbourhood function a ↦ value; value must be >= 1.
  static BrouwerOp leaf(Nat value);
  /// A finite sup node: child(i) = children[i] for i < |children|, else
  /// default_child.
  static BrouwerOp sup(std::vector<BrouwerOp> children, BrouwerOp default_child);
  /// A sup node whose children come from a pure rule. `cutoff_hint` bounds
  /// how many children bounded searches look at.
  static BrouwerOp generated(Rule rule, Nat cutoff_hint);

  bool is_leaf() const;
  bool is_sup() const { return !is_leaf(); }
  bool is_generated_node() const;
  /// The whole tree is finite: only leaves and tabular sup nodes.
  bool is_finite() const;

  Nat leaf_value() const;
  /// Number of explicit children (tabular) or the cutoff hint (generated).
  Nat width() const;
  std::span<const BrouwerOp> explicit_children() const;
  const BrouwerOp& default_child() const;
  BrouwerOp child(Nat i) const;

  /// Length of the longest root-to-leaf path (finite trees only).
  Nat height() const;
  /// Largest explicit width of any sup node (finite trees only).
  Nat max_width() const;

  /// Identity of the underlying node, for cheap sharing checks.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit BrouwerOp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const { return *node_; }

  std::shared_ptr<const Node> node_;
};

/// Structural equality of finite operations, insensitive to how a constant
/// default family is split into explicit children. Throws SchemaError on
/// non-finite input.
bool same_op(const BrouwerOp& a, const BrouwerOp& b);

std::string describe(const BrouwerOp& op);

enum class Verdict { yes, no, unverified };
std::string to_string(Verdict v);

/// γ(a) by descent. Every sup node passed consumes one unit of fuel.
Nat apply_nbhd(const BrouwerOp& op, const FinSeq& a, Nat fuel = kDefaultFuel);

struct EvalResult {
  Nat value = 0;
  Nat modulus = 0;
  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// Value γ(ᾱn) ∸ 1 at the least n with γ(ᾱn) > 0, together with that n.
EvalResult eval(const BrouwerOp& op, const Point& alpha, Nat fuel = kDefaultFuel);

struct BarItem {
  FinSeq address;
  Nat value = 0;
  friend bool operator==(const BarItem&, const BarItem&) = default;
};

struct BarListing {
  std::vector<BarItem> items;
  bool truncated = false;
};

/// Cutoff used when listing default-child families of a finite op:
/// max(widest explicit child list + 1, 2), so every family shows at least
/// one member.
Nat default_expansion_cutoff(const BrouwerOp& op);

/// Lists |γ| with labels in lexicographic order. Sup nodes list indices
/// below max(width, cutoff); generated nodes list indices below the cutoff
/// (their hint when none is given) and mark the listing truncated.
BarListing bar_enumerate(const BrouwerOp& op, std::optional<Nat> limit = std::nullopt,
                         std::optional<Nat> cutoff = std::nullopt, Nat fuel = kDefaultFuel);

struct BarPattern {
  AddrPattern address;
  Nat value = 0;
  friend bool operator==(const BarPattern&, const BarPattern&) = default;
};

/// The exact bar of a finite op: each default family appears once as an
/// open pattern component ">= width".
std::vector<BarPattern> bar_patterns(const BrouwerOp& op);

/// Every leaf value replaced by 1.
BrouwerOp skeleton(const BrouwerOp& op);

/// A function N^N -> N, optionally carrying a Brouwer-operation realiser.
class ContinuousFn {
 public:
  using Apply = std::function<Nat(const Point&)>;

  explicit ContinuousFn(Apply apply, std::optional<BrouwerOp> realiser = std::nullopt)
      : apply_(std::move(apply)), realiser_(std::move(realiser)) {}

  /// α ↦ eval(op, α).value, with `op` attached as realiser.
  static ContinuousFn realised_by(const BrouwerOp& op, Nat fuel = kDefaultFuel);

  Nat apply(const Point& alpha) const { return apply_(alpha); }
  Nat operator()(const Point& alpha) const { return apply_(alpha); }
  /// F(a * 0^ω)
  Nat at_zero_extension(const FinSeq& a) const { return apply_(Point::zeros(a)); }

  const std::optional<BrouwerOp>& realiser() const { return realiser_; }
  bool has_finite_realiser() const { return realiser_ && realiser_->is_finite(); }

 private:
  Apply apply_;
  std::optional<BrouwerOp> realiser_;
};

struct RealiseReport {
  struct Failure {
    std::size_t sample = 0;
    Nat expected = 0;  // F(α)
    Nat got = 0;       // eval(γ, α).value
  };
  std::vector<Failure> failures;
  std::size_t checked = 0;
  bool ok() const { return failures.empty(); }
};

/// Checks eval(γ, α).value = F(α) on every sample.
RealiseReport check_realises(const ContinuousFn& f, const BrouwerOp& op,
                             std::span<const Point> samples, Nat fuel = kDefaultFuel);

struct ConstancyAnswer {
  Verdict verdict = Verdict::unverified;
  /// Two addresses below the queried one carrying different values.
  std::optional<std::pair<FinSeq, FinSeq>> witness;
  Nat cutoff = 0;
};

/// Whether the op takes a single value on the whole cylinder at `a`. Exact
/// on finite subtrees; generated subtrees are searched below `cutoff` and
/// can only be refuted.
ConstancyAnswer is_constant_below(const BrouwerOp& op, const FinSeq& a, Nat cutoff = 4,
                                  Nat fuel = kDefaultFuel);

/// Per-instance constancy of a finite op below every address matched by a
/// pattern. Returns an offending pair of addresses when some instance is not
/// constant.
std::optional<std::pair<FinSeq, FinSeq>> find_nonconstant_instance(const BrouwerOp& op,
                                                                    const AddrPattern& p);

/// Labels the leaves of `shape` (placed at `root`) with `label(address)`.
///
/// Finite shapes yield finite ops. A default family is labelled at its least
/// index unless `split(parent, width)` reports further indices where the
/// labelling may change; those become explicit children when their subtrees
/// actually differ. Generated shapes yield generated ops labelled lazily.
using LeafLabel = std::function<Nat(const FinSeq&)>;
using FamilySplit = std::function<std::vector<Nat>(const FinSeq& parent, Nat width)>;
BrouwerOp relabel(const BrouwerOp& shape, const FinSeq& root, const LeafLabel& label,
                  const FamilySplit& split = {});

/// Family split for labelling by a function with finite realiser `rho`:
/// below a parent address the labels can only change at indices where rho
/// itself still distinguishes children.
FamilySplit realiser_split(const BrouwerOp& rho);

/// A realiser of F with the same skeleton as `op`, each leaf at address a
/// valued F(a * 0^ω) + 1.
///
/// When `op` and F's realiser are both finite, constancy of F on the
/// cylinders of |op| is verified first and a PropertyViolation names an
/// offending address pair; otherwise it is assumed, including constancy of
/// F across each default family.
BrouwerOp extract_realiser(const ContinuousFn& f, const BrouwerOp& op);

}  // namespace baire
