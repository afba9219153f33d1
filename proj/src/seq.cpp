#include "baire/seq.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace baire {

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) {
    throw NaturalOverflow("natural addition overflows 64 bits");
  }
  return a + b;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a) {
    throw NaturalOverflow("natural multiplication overflows 64 bits");
  }
  return a * b;
}

FinSeq FinSeq::child(Nat n) const {
  auto out = items_;
  out.push_back(n);
  return FinSeq(std::move(out));
}

FinSeq FinSeq::take(std::size_t k) const {
  k = std::min(k, items_.size());
  return FinSeq(std::vector<Nat>(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(k)));
}

FinSeq FinSeq::drop(std::size_t k) const {
  k = std::min(k, items_.size());
  return FinSeq(std::vector<Nat>(items_.begin() + static_cast<std::ptrdiff_t>(k), items_.end()));
}

std::string FinSeq::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) os << ',';
    os << items_[i];
  }
  os << '>';
  return os.str();
}

FinSeq concat(const FinSeq& a, const FinSeq& b) {
  std::vector<Nat> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.vec().begin(), a.vec().end());
  out.insert(out.end(), b.vec().begin(), b.vec().end());
  return FinSeq(std::move(out));
}

bool is_prefix(const FinSeq& a, const FinSeq& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.vec().begin(), a.vec().end(), b.vec().begin());
}

bool is_strict_prefix(const FinSeq& a, const FinSeq& b) {
  return a.size() < b.size() && is_prefix(a, b);
}

// ---------------------------------------------------------------------------
// AddrPattern

AddrPattern AddrPattern::exact(const FinSeq& a) {
  std::vector<PatternStep> steps;
  steps.reserve(a.size());
  for (Nat v : a.items()) steps.push_back({v, false});
  return AddrPattern(std::move(steps));
}

bool AddrPattern::is_exact() const {
  return std::none_of(steps_.begin(), steps_.end(), [](const PatternStep& s) { return s.open; });
}

bool AddrPattern::matches(const FinSeq& a) const {
  if (a.size() != steps_.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (!steps_[i].matches(a[i])) return false;
  }
  return true;
}

bool AddrPattern::matches_prefix_of(const FinSeq& a) const {
  if (steps_.size() > a.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (!steps_[i].matches(a[i])) return false;
  }
  return true;
}

bool AddrPattern::head_matches(const FinSeq& a) const {
  if (a.size() > steps_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!steps_[i].matches(a[i])) return false;
  }
  return true;
}

FinSeq AddrPattern::least_instance() const {
  std::vector<Nat> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.lo);
  return FinSeq(std::move(out));
}

std::vector<FinSeq> AddrPattern::expand(Nat cutoff) const {
  std::vector<std::vector<Nat>> acc{{}};
  for (const auto& s : steps_) {
    Nat hi = s.open ? std::max(cutoff, s.lo + 1) : s.lo + 1;
    std::vector<std::vector<Nat>> next;
    next.reserve(acc.size() * static_cast<std::size_t>(hi - s.lo));
    for (const auto& prefix : acc) {
      for (Nat v = s.lo; v < hi; ++v) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    acc = std::move(next);
  }
  std::vector<FinSeq> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return out;
}

AddrPattern AddrPattern::append(PatternStep s) const {
  auto steps = steps_;
  steps.push_back(s);
  return AddrPattern(std::move(steps));
}

AddrPattern AddrPattern::prepend(const FinSeq& root) const {
  std::vector<PatternStep> steps;
  steps.reserve(root.size() + steps_.size());
  for (Nat v : root.items()) steps.push_back({v, false});
  steps.insert(steps.end(), steps_.begin(), steps_.end());
  return AddrPattern(std::move(steps));
}

std::string AddrPattern::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) os << ',';
    os << steps_[i].lo;
    if (steps_[i].open) os << '+';
  }
  os << '>';
  return os.str();
}

std::optional<AddrPattern> intersect(const AddrPattern& a, const AddrPattern& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<PatternStep> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    if (x.open && y.open) {
      out.push_back({std::max(x.lo, y.lo), true});
    } else if (!x.open && !y.open) {
      if (x.lo != y.lo) return std::nullopt;
      out.push_back(x);
    } else {
      const auto& exact = x.open ? y : x;
      const auto& range = x.open ? x : y;
      if (exact.lo < range.lo) return std::nullopt;
      out.push_back(exact);
    }
  }
  return AddrPattern(std::move(out));
}

std::vector<FinSeq> representatives(const AddrPattern& q, std::span<const AddrPattern> against) {
  std::vector<std::vector<Nat>> choices(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& s = q[i];
    choices[i].push_back(s.lo);
    if (!s.open) continue;
    for (const auto& p : against) {
      if (p.size() <= i) continue;
      const auto& t = p[i];
      if (t.lo > s.lo) choices[i].push_back(t.lo);
      if (!t.open && t.lo + 1 > s.lo) choices[i].push_back(checked_add(t.lo, 1));
    }
    std::sort(choices[i].begin(), choices[i].end());
    choices[i].erase(std::unique(choices[i].begin(), choices[i].end()), choices[i].end());
  }
  std::vector<std::vector<Nat>> acc{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<Nat>> next;
    next.reserve(acc.size() * c.size());
    for (const auto& prefix : acc) {
      for (Nat v : c) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    acc = std::move(next);
  }
  std::vector<FinSeq> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return out;
}

// ---------------------------------------------------------------------------
// Point

Point Point::zeros(FinSeq prefix) {
  Point p;
  p.prefix_ = std::move(prefix);
  return p;
}

Point Point::cycle(FinSeq prefix, FinSeq period) {
  if (period.empty()) throw SchemaError("cycle tail must be non-empty");
  Point p;
  p.prefix_ = std::move(prefix);
  p.tail_ = Cycle{std::move(period)};
  return p;
}

Point Point::generated(FinSeq prefix, Rule rule) {
  if (!rule) throw SchemaError("generated tail needs a rule");
  Point p;
  p.prefix_ = std::move(prefix);
  auto memo = std::make_shared<Memo>();
  memo->rule = std::move(rule);
  p.tail_ = std::move(memo);
  return p;
}

bool Point::is_generated() const { return std::holds_alternative<Generated>(tail_); }

Nat Point::at(Nat n) const {
  if (n < prefix_.size()) return prefix_[static_cast<std::size_t>(n)];
  const Nat off = n - prefix_.size();
  if (std::holds_alternative<Zeros>(tail_)) return 0;
  if (const auto* c = std::get_if<Cycle>(&tail_)) {
    return c->period[static_cast<std::size_t>(off % c->period.size())];
  }
  auto& memo = *std::get<Generated>(tail_);
  std::lock_guard lock(memo.mu);
  while (memo.cache.size() <= off) {
    memo.cache.push_back(memo.rule(prefix_.size() + memo.cache.size()));
  }
  return memo.cache[static_cast<std::size_t>(off)];
}

Point Point::prepended(const FinSeq& a) const {
  if (!is_generated()) {
    Point p = *this;
    p.prefix_ = concat(a, prefix_);
    return p;
  }
  // Shares the original memo through the captured copy.
  const Nat shift = a.size();
  Point original = *this;
  return generated(concat(a, prefix_), [original, shift](Nat n) { return original.at(n - shift); });
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << prefix_.to_string() << '*';
  if (std::holds_alternative<Zeros>(tail_)) {
    os << "0^w";
  } else if (const auto* c = std::get_if<Cycle>(&tail_)) {
    os << '(' << c->period.to_string() << ")^w";
  } else {
    os << "<generated>";
  }
  return os.str();
}

FinSeq iseg(const Point& alpha, Nat n) {
  std::vector<Nat> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Nat i = 0; i < n; ++i) out.push_back(alpha.at(i));
  return FinSeq(std::move(out));
}

// ---------------------------------------------------------------------------
// DecidableSet

DecidableSet DecidableSet::from_predicate(Predicate membership) {
  DecidableSet s;
  s.membership_ = std::move(membership);
  return s;
}

DecidableSet DecidableSet::from_list(std::vector<FinSeq> items) {
  std::vector<AddrPattern> extent;
  extent.reserve(items.size());
  for (const auto& a : items) extent.push_back(AddrPattern::exact(a));
  return from_patterns(std::move(extent));
}

DecidableSet DecidableSet::from_patterns(std::vector<AddrPattern> extent) {
  DecidableSet s;
  s.membership_ = [extent](const FinSeq& a) {
    return std::any_of(extent.begin(), extent.end(),
                       [&](const AddrPattern& p) { return p.matches(a); });
  };
  s.extent_ = std::move(extent);
  return s;
}

bool ext_member(const DecidableSet& u, const FinSeq& a) {
  for (std::size_t n = 0; n <= a.size(); ++n) {
    if (u.contains(a.take(n))) return true;
  }
  return false;
}

DecidableSet cylinder_set(const FinSeq& a, Nat k) {
  std::vector<PatternStep> steps;
  for (Nat v : a.items()) steps.push_back({v, false});
  for (Nat i = 0; i < k; ++i) steps.push_back({0, true});
  return DecidableSet::from_patterns({AddrPattern(std::move(steps))});
}

std::vector<FinSeq> cylinder(const FinSeq& a, Nat k, std::optional<Nat> cutoff) {
  if (k == 0) return {a};
  if (!cutoff) throw SchemaError("finite cylinder listing with k > 0 needs a branching cutoff");
  std::vector<PatternStep> steps;
  for (Nat v : a.items()) steps.push_back({v, false});
  for (Nat i = 0; i < k; ++i) steps.push_back({0, true});
  if (*cutoff == 0) return {};
  return AddrPattern(std::move(steps)).expand(*cutoff);
}

DecidableSet ext_closure_listing(const DecidableSet& u, Nat max_len) {
  if (!u.has_extent()) throw SchemaError("extension-closure listing needs a listed set");
  std::vector<AddrPattern> out;
  for (const auto& p : *u.extent()) {
    for (Nat len = p.size(); len <= max_len; ++len) {
      auto q = p;
      for (Nat i = p.size(); i < len; ++i) q = q.append({0, true});
      out.push_back(std::move(q));
    }
  }
  return DecidableSet::from_patterns(std::move(out));
}

}  // namespace baire
