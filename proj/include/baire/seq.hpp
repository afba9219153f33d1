#pragma once

// Address algebra for Baire space: finite sequences, points, prefix order,
// extension closure and cylinders.

#include <compare>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "baire/errors.hpp"

namespace baire {

/// An element of N*: a finite sequence of naturals.
class FinSeq {
 public:
  FinSeq() = default;
  FinSeq(std::initializer_list<Nat> items) : items_(items) {}
  explicit FinSeq(std::vector<Nat> items) : items_(std::move(items)) {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Nat operator[](std::size_t i) const { return items_[i]; }
  Nat at(std::size_t i) const { return items_.at(i); }
  std::span<const Nat> items() const { return items_; }
  const std::vector<Nat>& vec() const { return items_; }

  /// a * <n>
  FinSeq child(Nat n) const;
  /// The first k entries.
  FinSeq take(std::size_t k) const;
  /// Everything after the first k entries.
  FinSeq drop(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const FinSeq&, const FinSeq&) = default;
  friend auto operator<=>(const FinSeq&, const FinSeq&) = default;

 private:
  std::vector<Nat> items_;
};

FinSeq concat(const FinSeq& a, const FinSeq& b);

/// a ≼ b
bool is_prefix(const FinSeq& a, const FinSeq& b);
/// a ≺ b
bool is_strict_prefix(const FinSeq& a, const FinSeq& b);
inline bool comparable(const FinSeq& a, const FinSeq& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

/// One component of an address pattern: either exactly `lo`, or any
/// natural >= `lo`. Open components stand for the constant default-child
/// families of finitely described trees.
struct PatternStep {
  Nat lo = 0;
  bool open = false;

  bool matches(Nat v) const { return open ? v >= lo : v == lo; }
  friend bool operator==(const PatternStep&, const PatternStep&) = default;
  friend auto operator<=>(const PatternStep&, const PatternStep&) = default;
};

/// A finitely described set of equal-length addresses.
class AddrPattern {
 public:
  AddrPattern() = default;
  explicit AddrPattern(std::vector<PatternStep> steps) : steps_(std::move(steps)) {}
  static AddrPattern exact(const FinSeq& a);

  std::size_t size() const { return steps_.size(); }
  const std::vector<PatternStep>& steps() const { return steps_; }
  const PatternStep& operator[](std::size_t i) const { return steps_[i]; }

  bool is_exact() const;
  bool matches(const FinSeq& a) const;
  /// Some element of the pattern is a prefix of `a`.
  bool matches_prefix_of(const FinSeq& a) const;
  /// The first |a| components accept `a` (|a| <= size()).
  bool head_matches(const FinSeq& a) const;
  /// The instance obtained by taking the least value at every component.
  FinSeq least_instance() const;
  /// All instances whose open components take values below `cutoff`
  /// (an open component with lo >= cutoff contributes just `lo`).
  std::vector<FinSeq> expand(Nat cutoff) const;

  AddrPattern append(PatternStep s) const;
  AddrPattern prepend(const FinSeq& root) const;

  std::string to_string() const;

  friend bool operator==(const AddrPattern&, const AddrPattern&) = default;
  friend auto operator<=>(const AddrPattern&, const AddrPattern&) = default;

 private:
  std::vector<PatternStep> steps_;
};

/// Intersection of two patterns; nullopt when disjoint (or of different
/// lengths).
std::optional<AddrPattern> intersect(const AddrPattern& a, const AddrPattern& b);

/// Instances of `q` covering every behaviour class with respect to the
/// patterns in `against`: two instances agreeing on which components fall in
/// which interval between the breakpoints of `against` match exactly the
/// same prefixes of those patterns. Exact components contribute one value;
/// open ones contribute their least value plus every larger breakpoint.
std::vector<FinSeq> representatives(const AddrPattern& q, std::span<const AddrPattern> against);

/// A point of Baire space: a finite prefix followed by a finitely described
/// infinite tail.
class Point {
 public:
  struct Zeros {};
  struct Cycle {
    FinSeq period;
  };
  using Rule = std::function<Nat(Nat)>;

  /// 0^ω
  Point() = default;
  static Point zeros(FinSeq prefix = {});
  static Point cycle(FinSeq prefix, FinSeq period);
  /// Tail generated by `rule(n)` for absolute index n >= |prefix|. The rule
  /// must be pure; values are memoized on first read.
  static Point generated(FinSeq prefix, Rule rule);

  Nat at(Nat n) const;
  const FinSeq& prefix() const { return prefix_; }
  bool has_zero_tail() const { return std::holds_alternative<Zeros>(tail_); }
  const Cycle* cycle_tail() const { return std::get_if<Cycle>(&tail_); }
  bool is_generated() const;

  /// a * this
  Point prepended(const FinSeq& a) const;

  std::string to_string() const;

 private:
  struct Memo {
    Rule rule;
    std::mutex mu;
    std::vector<Nat> cache;  // cache[i] = rule(|prefix| + i)
  };
  using Generated = std::shared_ptr<Memo>;

  FinSeq prefix_;
  std::variant<Zeros, Cycle, Generated> tail_;
};

/// ᾱn
FinSeq iseg(const Point& alpha, Nat n);

/// a * 0^ω
inline Point zero_extension(const FinSeq& a) { return Point::zeros(a); }

/// A decidable subset of N*. The optional extent lists the set exactly as a
/// finite union of patterns; predicate-only sets answer membership queries.
class DecidableSet {
 public:
  using Predicate = std::function<bool(const FinSeq&)>;

  static DecidableSet from_predicate(Predicate membership);
  static DecidableSet from_list(std::vector<FinSeq> items);
  static DecidableSet from_patterns(std::vector<AddrPattern> extent);

  bool contains(const FinSeq& a) const { return membership_(a); }
  const std::optional<std::vector<AddrPattern>>& extent() const { return extent_; }
  bool has_extent() const { return extent_.has_value(); }

 private:
  Predicate membership_;
  std::optional<std::vector<AddrPattern>> extent_;
};

/// Membership in ext(U): some prefix of `a` (including `a`) lies in U.
bool ext_member(const DecidableSet& u, const FinSeq& a);

/// The cylinder a[k] = {a*b : |b| = k} as a decidable set with an exact
/// pattern extent.
DecidableSet cylinder_set(const FinSeq& a, Nat k);

/// Finite listing of a[k] restricted to entries below `cutoff`, in
/// lexicographic order. Refuses (SchemaError) when k > 0 and no cutoff is
/// given.
std::vector<FinSeq> cylinder(const FinSeq& a, Nat k, std::optional<Nat> cutoff);

/// The extension closure of a finite listed set, restricted to addresses of
/// length <= max_len, as a finite pattern listing.
DecidableSet ext_closure_listing(const DecidableSet& u, Nat max_len);

}  // namespace baire
