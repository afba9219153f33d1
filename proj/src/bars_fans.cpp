#include "baire/bars_fans.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace baire {

// ---------------------------------------------------------------------------
// FanTree

FanTree FanTree::full_binary() {
  FanTree t;
  t.kind_ = Kind::full_binary;
  t.member_ = [](const FinSeq& a) {
    return std::all_of(a.items().begin(), a.items().end(), [](Nat v) { return v < 2; });
  };
  t.bound_ = [](const FinSeq&) -> Nat { return 1; };
  t.widths_ = {};
  t.tail_width_ = 2;
  return t;
}

FanTree FanTree::bounded_by(std::vector<Nat> widths, Nat tail_width) {
  if (tail_width == 0 || std::find(widths.begin(), widths.end(), Nat{0}) != widths.end()) {
    throw SchemaError("fan widths must be >= 1 (every node needs a child)");
  }
  FanTree t;
  t.kind_ = Kind::bounded;
  t.widths_ = widths;
  t.tail_width_ = tail_width;
  auto width_at = [widths, tail_width](std::size_t i) { return i < widths.size() ? widths[i] : tail_width; };
  t.member_ = [width_at](const FinSeq& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] >= width_at(i)) return false;
    }
    return true;
  };
  t.bound_ = [width_at](const FinSeq& a) { return width_at(a.size()) - 1; };
  return t;
}

FanTree FanTree::explicit_table(std::vector<FinSeq> nodes, std::vector<FinSeq> full) {
  std::set<FinSeq> closed;
  closed.insert(FinSeq{});
  for (const auto& list : {nodes, full}) {
    for (const auto& a : list) {
      for (std::size_t k = 0; k <= a.size(); ++k) closed.insert(a.take(k));
    }
  }
  auto under_full = [full](const FinSeq& a) {
    return std::any_of(full.begin(), full.end(), [&](const FinSeq& f) { return is_prefix(f, a); });
  };
  for (const auto& a : closed) {
    if (under_full(a)) continue;
    const bool found = std::any_of(closed.begin(), closed.end(), [&](const FinSeq& c) {
      return c.size() == a.size() + 1 && is_prefix(a, c);
    });
    if (!found) throw SchemaError("explicit fan node " + a.to_string() + " has no child (spread law)");
  }
  auto table = std::make_shared<const std::set<FinSeq>>(closed);
  FanTree t;
  t.kind_ = Kind::explicit_table;
  t.nodes_ = std::vector<FinSeq>(closed.begin(), closed.end());
  t.full_ = full;
  t.member_ = [table, full](const FinSeq& a) {
    if (table->count(a)) return true;
    for (const auto& f : full) {
      if (!is_prefix(f, a)) continue;
      const auto rest = a.drop(f.size());
      if (std::all_of(rest.items().begin(), rest.items().end(), [](Nat v) { return v < 2; })) return true;
    }
    return false;
  };
  t.bound_ = [table, under_full](const FinSeq& a) -> Nat {
    if (under_full(a)) return 1;
    Nat hi = 0;
    for (auto it = table->upper_bound(a); it != table->end() && is_prefix(a, *it); ++it) {
      if (it->size() == a.size() + 1) hi = std::max(hi, (*it)[a.size()]);
    }
    return hi;
  };
  return t;
}

FanTree FanTree::custom(Member member, Bound bound) {
  FanTree t;
  t.kind_ = Kind::custom;
  t.member_ = std::move(member);
  t.bound_ = std::move(bound);
  return t;
}

std::vector<FinSeq> FanTree::children(const FinSeq& a) const {
  std::vector<FinSeq> out;
  const Nat hi = bound(a);
  for (Nat n = 0; n <= hi; ++n) {
    auto c = a.child(n);
    if (member(c)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<FinSeq> FanTree::slice(Nat depth) const {
  std::vector<FinSeq> level{FinSeq{}};
  for (Nat d = 0; d < depth; ++d) {
    std::vector<FinSeq> next;
    for (const auto& a : level) {
      auto cs = children(a);
      next.insert(next.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
    }
    level = std::move(next);
  }
  return level;
}

// ---------------------------------------------------------------------------
// CBar

CBar CBar::from_brouwer(BrouwerOp op, Nat fuel) {
  auto delta = [op, fuel](const FinSeq& a) -> Nat { return std::min<Nat>(apply_nbhd(op, a, fuel), 1); };
  return CBar(Source::from_brouwer, std::move(delta), std::move(op), std::nullopt);
}

CBar CBar::from_function(ContinuousFn f) {
  if (!f.has_finite_realiser()) throw SchemaError("c-bar from a function needs a finite realiser");
  auto delta = [f](const FinSeq& a) { return f.at_zero_extension(a); };
  BrouwerOp witness = *f.realiser();
  return CBar(Source::from_function, std::move(delta), std::move(witness), std::move(f));
}

CBar CBar::opaque(Delta delta, BrouwerOp witness) {
  if (!delta) throw SchemaError("opaque c-bar needs a delta rule");
  return CBar(Source::opaque, std::move(delta), std::move(witness), std::nullopt);
}

std::string to_string(CBar::Source s) {
  switch (s) {
    case CBar::Source::from_brouwer:
      return "fromBrouwer";
    case CBar::Source::from_function:
      return "fromFunction";
    case CBar::Source::opaque:
      return "opaque";
  }
  return "?";
}

CBar cbar_from_function(const ContinuousFn& f) { return CBar::from_function(f); }

namespace {

// First bar address of `op` at or below `a` along the leftmost branch.
FinSeq leftmost_bar_below(const BrouwerOp& op, const FinSeq& a, Nat fuel) {
  BrouwerOp node = op;
  Nat used = 0;
  std::vector<Nat> path;
  for (Nat v : a.items()) {
    if (node.is_leaf()) return FinSeq(path);
    node = node.child(v);
    path.push_back(v);
  }
  while (!node.is_leaf()) {
    if (used++ >= fuel) throw FuelExhausted("no bar address found below " + a.to_string());
    node = node.child(0);
    path.push_back(0);
  }
  return FinSeq(std::move(path));
}

struct DeltaSearch {
  const CBar& p;
  Nat base;
  Nat cutoff;
  std::optional<std::pair<FinSeq, FinSeq>> witness;
  std::vector<Nat> path;
  FinSeq root;

  // Looks for b with δ(root*b) != δ(root), |b| <= depth_left, entries < cutoff.
  bool walk(Nat depth_left) {
    if (depth_left == 0) return true;
    for (Nat i = 0; i < cutoff; ++i) {
      path.push_back(i);
      const FinSeq at = concat(root, FinSeq(path));
      if (p.delta(at) != base) {
        witness.emplace(root, at);
        return false;
      }
      const bool more = walk(depth_left - 1);
      path.pop_back();
      if (!more) return false;
    }
    return true;
  }
};

}  // namespace

ConstancyAnswer cbar_member(const CBar& p, const FinSeq& a, Nat cutoff, Nat fuel) {
  switch (p.source()) {
    case CBar::Source::from_function:
      return is_constant_below(p.witness(), a, cutoff, fuel);
    case CBar::Source::from_brouwer: {
      if (apply_nbhd(p.witness(), a, fuel) > 0) return {Verdict::yes, std::nullopt, cutoff};
      return {Verdict::no, std::make_pair(a, leftmost_bar_below(p.witness(), a, fuel)), cutoff};
    }
    case CBar::Source::opaque: {
      if (apply_nbhd(p.witness(), a, fuel) > 0) return {Verdict::yes, std::nullopt, cutoff};
      Nat depth = cutoff;
      if (p.witness().is_finite()) {
        // Below the witness bar δ is constant, so the search can stop there.
        BrouwerOp node = p.witness();
        for (Nat v : a.items()) node = node.child(v);
        depth = node.height();
      }
      DeltaSearch search{p, p.delta(a), cutoff, std::nullopt, {}, a};
      search.walk(depth);
      if (search.witness) return {Verdict::no, search.witness, cutoff};
      return {Verdict::unverified, std::nullopt, cutoff};
    }
  }
  throw std::logic_error("unreachable");
}

Nat max_change_depth(const CBar& p, const FinSeq& u) {
  Nat best = 1;
  Nat prev = p.delta(u.take(0));
  for (std::size_t n = 0; n < u.size(); ++n) {
    const Nat next = p.delta(u.take(n + 1));
    if (next != prev) best = std::max<Nat>(best, n);
    prev = next;
  }
  return best;
}

ContinuousFn function_from_cbar(const CBar& p, Nat fuel) {
  BrouwerOp realiser = relabel(skeleton(p.witness()), FinSeq{},
                               [p](const FinSeq& u) { return checked_add(max_change_depth(p, u), 1); });
  auto apply = [p, fuel](const Point& alpha) {
    const Nat m = eval(p.witness(), alpha, fuel).modulus;
    return max_change_depth(p, iseg(alpha, m));
  };
  return ContinuousFn(std::move(apply), std::move(realiser));
}

Nat uniform_modulus(const ContinuousFn& f, const FanTree& t, Nat depth_budget) {
  if (!f.has_finite_realiser()) throw SchemaError("uniform_modulus needs a finite realiser");
  const BrouwerOp& rho = *f.realiser();
  for (Nat n = 0; n <= depth_budget; ++n) {
    const auto nodes = t.slice(n);
    const bool all = std::all_of(nodes.begin(), nodes.end(), [&](const FinSeq& a) {
      return is_constant_below(rho, a).verdict == Verdict::yes;
    });
    if (all) return n;
  }
  throw FuelExhausted("no uniform modulus within depth budget " + std::to_string(depth_budget));
}

Nat modulus_M(const ContinuousFn& f, const FanTree& t, Nat n) {
  Nat top = n;
  for (const auto& a : t.slice(n)) top = std::max(top, f.at_zero_extension(a));
  return checked_add(top, 1);
}

Nat uniform_bar_modulus(const CBar& p, const FanTree& t, Nat depth_budget, Nat cutoff, bool accept_unverified,
                        Nat fuel) {
  for (Nat n = 0; n <= depth_budget; ++n) {
    const auto nodes = t.slice(n);
    const bool all = std::all_of(nodes.begin(), nodes.end(), [&](const FinSeq& a) {
      const auto v = cbar_member(p, a, cutoff, fuel).verdict;
      return v == Verdict::yes || (accept_unverified && v == Verdict::unverified);
    });
    if (all) return n;
  }
  throw FuelExhausted("c-bar is not uniform on the fan within depth budget " + std::to_string(depth_budget));
}

FormalMap map_from_cbar(const CBar& p, const ContinuousFn& f) {
  if (p.source() == CBar::Source::opaque) throw SchemaError("map_from_cbar rejects opaque c-bars");
  if (!p.witness().is_finite()) throw SchemaError("map_from_cbar needs a finite witness");
  CovWitness witness = cov_from_brouwer(FinSeq{}, p.witness());

  FamilySplit split;
  if (f.has_finite_realiser()) split = realiser_split(*f.realiser());
  const BrouwerOp labelled = relabel(
      witness.shape(), FinSeq{}, [f](const FinSeq& u) { return checked_add(f.at_zero_extension(u), 1); }, split);
  std::vector<MapEntry> table;
  for (const auto& item : bar_patterns(labelled)) table.push_back({item.address, item.value - 1});

  auto relate = [p, f](const FinSeq& a, Nat n) {
    return cbar_member(p, a).verdict == Verdict::yes && f.at_zero_extension(a) == n;
  };
  auto value_at = [p, f](const FinSeq& a) -> std::optional<Nat> {
    if (cbar_member(p, a).verdict != Verdict::yes) return std::nullopt;
    return f.at_zero_extension(a);
  };
  return FormalMap::from_rules(std::move(witness), std::move(relate), std::move(value_at), std::move(table));
}

}  // namespace baire
