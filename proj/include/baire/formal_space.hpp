#pragma once

// Formal Baire space: cover certificates from the set presentation Cov,
// formal points, and formal topology maps into the formal naturals.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "baire/brouwer.hpp"
#include "baire/seq.hpp"

namespace baire {

/// An element of Cov(root): the set root * |shape|, where `shape` is an
/// unlabeled Brouwer-operation (all leaves 1). A leaf shape is the clause
/// {a} ∈ Cov(a); a sup shape is the union of Cov(a*<n>) over all n.
class CovWitness {
 public:
  /// Throws SchemaError when a finite shape carries a leaf other than 1.
  CovWitness(FinSeq root, BrouwerOp shape);

  const FinSeq& root() const { return root_; }
  const BrouwerOp& shape() const { return shape_; }

  /// The denoted set as patterns (finite shapes only).
  std::vector<AddrPattern> denoted_patterns() const;
  /// The denoted set with default families listed below `cutoff`.
  std::vector<FinSeq> denoted(Nat cutoff) const;
  /// u ∈ root * |shape|, decided through the neighbourhood function.
  bool denotes(const FinSeq& u, Nat fuel = kDefaultFuel) const;

 private:
  FinSeq root_;
  BrouwerOp shape_;
};

/// Witness for a * |γ|, with labels forgotten.
CovWitness cov_from_brouwer(const FinSeq& a, const BrouwerOp& op);
/// The unlabeled op whose bar, prefixed by the root, is the witness set.
BrouwerOp brouwer_from_cov(const CovWitness& w);

/// Whether `w` certifies a ⊲ U: the root is `a` and every denoted address
/// lies in ext(U).
///
/// Exact for finite shapes when U carries an extent (one representative per
/// behaviour class of each default family) or when the denoted set is
/// finite. Otherwise families are listed below `cutoff` and a passing check
/// answers unverified.
Verdict check_cover(const FinSeq& a, const DecidableSet& u, const CovWitness& w, Nat cutoff = 4,
                    Nat fuel = kDefaultFuel);

/// The first depth+1 members {ᾱ0, ..., ᾱdepth} of the formal point i(α).
struct FormalPointFragment {
  Nat depth = 0;
  std::vector<FinSeq> chain;

  /// Throws SchemaError unless chain[k] has length k, chain[k] ≺ chain[k+1]
  /// and the chain has depth+1 members.
  void validate() const;
};

FormalPointFragment formal_point_fragment(const Point& alpha, Nat depth);
/// The longest member a_α of the fragment; its n-th entry is α(n).
FinSeq point_from_fragment(const FormalPointFragment& f);

/// One row of a listed relation: every address matching `addr` relates to n.
struct MapEntry {
  AddrPattern addr;
  Nat n = 0;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

/// A formal topology map from formal Baire space to the formal naturals,
/// packaged with the cover witness of its totality axiom.
class FormalMap {
 public:
  using Relate = std::function<bool(const FinSeq&, Nat)>;
  using ValueAt = std::function<std::optional<Nat>(const FinSeq&)>;

  /// Relation given by a finite list of rows.
  static FormalMap from_table(CovWitness witness, std::vector<MapEntry> table);
  /// Relation given by rules. An optional table lists the relation on the
  /// witness set and must agree with the rules there.
  static FormalMap from_rules(CovWitness witness, Relate relate, ValueAt value_at,
                              std::optional<std::vector<MapEntry>> table = std::nullopt);

  bool relate(const FinSeq& a, Nat n) const { return relate_(a, n); }
  std::optional<Nat> value_at(const FinSeq& a) const { return value_at_(a); }
  const CovWitness& witness() const { return witness_; }
  const std::optional<std::vector<MapEntry>>& table() const { return table_; }
  /// The relation is exactly the table.
  bool table_only() const { return table_only_; }

 private:
  FormalMap(CovWitness witness, Relate relate, ValueAt value_at,
            std::optional<std::vector<MapEntry>> table, bool table_only);

  CovWitness witness_;
  Relate relate_;
  ValueAt value_at_;
  std::optional<std::vector<MapEntry>> table_;
  bool table_only_ = false;
};

/// a r n :⇔ a ∈ |γ| and F(a*0^ω) = n, for the finite realiser γ of F.
/// Throws SchemaError when F has no finite realiser.
FormalMap map_from_realisable(const ContinuousFn& f);

/// Labels the witness skeleton with value_at + 1 and returns the realised
/// function. Throws PropertyViolation when value_at is undefined on a
/// witness address.
ContinuousFn realiser_from_map(const FormalMap& r, Nat fuel = kDefaultFuel);

/// Pt(r)(i(α)) as a single natural: the value at the first initial segment
/// of α lying in the witness set.
Nat apply_map(const FormalMap& r, const Point& alpha, Nat fuel = kDefaultFuel);

struct MapViolation {
  std::string kind;  // totality | single-valuedness | value-relation | commuting-square
  std::string detail;
};

struct MapReport {
  std::vector<MapViolation> violations;
  std::vector<std::string> notes;  // checks that could only run bounded
  bool ok() const { return violations.empty(); }
};

/// Checks both map axioms on the witness fragment and, when F is given,
/// that i_N ∘ F = Pt(r) ∘ i_B on every sample.
MapReport validate_map(const FormalMap& r, const ContinuousFn* f, std::span<const Point> samples,
                       Nat cutoff = 4, Nat fuel = kDefaultFuel);

}  // namespace baire
