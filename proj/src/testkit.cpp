#include "baire/testkit.hpp"

#include <algorithm>
#include <set>

namespace baire::testkit {

namespace {

Nat uniform(Rng& rng, Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng); }

BrouwerOp gen_node(const OpGenSpec& spec, Rng& rng, Nat depth) {
  const bool forced_leaf = depth >= spec.max_depth;
  // Shallow nodes branch more often so that deep trees actually occur.
  const double leaf_p = depth == 0 ? 0.15 : 0.3 + 0.1 * static_cast<double>(depth);
  if (forced_leaf || std::bernoulli_distribution(std::min(leaf_p, 0.9))(rng)) {
    return BrouwerOp::leaf(uniform(rng, 1, std::max<Nat>(spec.max_leaf_value, 1)));
  }
  const Nat w = uniform(rng, 0, spec.max_width);
  std::vector<BrouwerOp> kids;
  kids.reserve(static_cast<std::size_t>(w));
  for (Nat i = 0; i < w; ++i) kids.push_back(gen_node(spec, rng, depth + 1));
  BrouwerOp def = gen_node(spec, rng, depth + 1);
  return BrouwerOp::sup(std::move(kids), std::move(def));
}

}  // namespace

BrouwerOp gen_random_op(const OpGenSpec& spec) {
  Rng rng(spec.seed);
  return gen_random_op(spec, rng);
}

BrouwerOp gen_random_op(const OpGenSpec& spec, Rng& rng) { return gen_node(spec, rng, 0); }

Point random_point(Rng& rng, Nat max_entry, Nat max_prefix) {
  const Nat len = uniform(rng, 0, max_prefix);
  std::vector<Nat> prefix;
  for (Nat i = 0; i < len; ++i) prefix.push_back(uniform(rng, 0, max_entry));
  if (uniform(rng, 0, 1) == 0) return Point::zeros(FinSeq(std::move(prefix)));
  const Nat plen = uniform(rng, 1, 3);
  std::vector<Nat> period;
  for (Nat i = 0; i < plen; ++i) period.push_back(uniform(rng, 0, max_entry));
  return Point::cycle(FinSeq(std::move(prefix)), FinSeq(std::move(period)));
}

std::vector<Point> random_points(Rng& rng, std::size_t count, Nat max_entry) {
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point(rng, max_entry));
  return out;
}

std::vector<FinSeq> random_finite_set(Rng& rng, std::size_t max_items, Nat max_len, Nat max_entry) {
  const Nat count = uniform(rng, 1, max_items);
  std::vector<FinSeq> out;
  for (Nat i = 0; i < count; ++i) {
    const Nat len = uniform(rng, 0, max_len);
    std::vector<Nat> xs;
    for (Nat k = 0; k < len; ++k) xs.push_back(uniform(rng, 0, max_entry - 1));
    out.emplace_back(std::move(xs));
  }
  return out;
}

Nat oracle_nbhd(const BrouwerOp& op, const FinSeq& a) {
  const BrouwerOp* node = &op;
  BrouwerOp holder;
  for (std::size_t i = 0;; ++i) {
    if (node->is_leaf()) return node->leaf_value();
    if (i == a.size()) return 0;
    const auto kids = node->explicit_children();
    holder = a[i] < kids.size() ? kids[static_cast<std::size_t>(a[i])] : node->default_child();
    node = &holder;
  }
}

Nat oracle_height(const BrouwerOp& op) {
  if (op.is_leaf()) return 0;
  Nat h = oracle_height(op.default_child());
  for (const auto& c : op.explicit_children()) h = std::max(h, oracle_height(c));
  return h + 1;
}

Nat oracle_width(const BrouwerOp& op) {
  if (op.is_leaf()) return 0;
  Nat w = std::max<Nat>(op.explicit_children().size(), oracle_width(op.default_child()));
  for (const auto& c : op.explicit_children()) w = std::max(w, oracle_width(c));
  return w;
}

namespace {

void positions(const BrouwerOp& op, std::vector<Nat>& path, std::vector<FinSeq>& out) {
  out.emplace_back(path);
  if (op.is_leaf()) return;
  const auto kids = op.explicit_children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    path.push_back(i);
    positions(kids[i], path, out);
    path.pop_back();
  }
  path.push_back(kids.size());
  positions(op.default_child(), path, out);
  path.pop_back();
}

void grid(Nat len, Nat entries, std::vector<Nat>& cur, const std::function<void(const FinSeq&)>& visit) {
  visit(FinSeq(cur));
  if (len == 0) return;
  for (Nat v = 0; v < entries; ++v) {
    cur.push_back(v);
    grid(len - 1, entries, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FinSeq> oracle_positions(const BrouwerOp& op) {
  std::vector<FinSeq> out;
  std::vector<Nat> path;
  positions(op, path, out);
  return out;
}

std::vector<FinSeq> oracle_bar(const BrouwerOp& op, Nat cutoff) {
  std::vector<FinSeq> out;
  std::vector<Nat> cur;
  grid(oracle_height(op), cutoff, cur, [&](const FinSeq& a) {
    if (oracle_nbhd(op, a) == 0) return;
    if (!a.empty() && oracle_nbhd(op, a.take(a.size() - 1)) != 0) return;
    out.push_back(a);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Nat> brute_force_modulus(const ContinuousFn& f, const FanTree& t, Nat max_depth) {
  Nat height = 3;
  Nat entries = 3;
  if (f.has_finite_realiser()) {
    height = oracle_height(*f.realiser());
    entries = oracle_width(*f.realiser()) + 1;
  }
  std::vector<FinSeq> level{FinSeq{}};
  for (Nat n = 0; n <= max_depth; ++n) {
    bool agree = true;
    for (const auto& a : level) {
      const Nat len = f.has_finite_realiser() ? (height > n ? height - n : 0) : height;
      std::set<Nat> values;
      std::vector<Nat> cur;
      grid(len, entries, cur, [&](const FinSeq& b) { values.insert(f.apply(Point::zeros(concat(a, b)))); });
      if (values.size() > 1) {
        agree = false;
        break;
      }
    }
    if (agree) return n;
    // Next fan level straight from member/bound.
    std::vector<FinSeq> next;
    for (const auto& a : level) {
      for (Nat k = 0; k <= t.bound(a); ++k) {
        FinSeq c = a.child(k);
        if (t.member(c)) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

Nat oracle_max_change(const CBar& p, const Point& alpha, Nat horizon) {
  Nat best = 1;
  for (Nat n = 0; n < horizon; ++n) {
    if (p.delta(iseg(alpha, n)) != p.delta(iseg(alpha, n + 1))) best = std::max(best, n);
  }
  return best;
}

BrouwerOp sum_first_two_op(Nat width) {
  auto inner = [width](Nat first) {
    std::vector<BrouwerOp> kids;
    for (Nat m = 0; m < width; ++m) kids.push_back(BrouwerOp::leaf(first + m + 1));
    return BrouwerOp::sup(std::move(kids), BrouwerOp::leaf(first + width + 1));
  };
  std::vector<BrouwerOp> kids;
  for (Nat n = 0; n < width; ++n) kids.push_back(inner(n));
  return BrouwerOp::sup(std::move(kids), inner(width));
}

BrouwerOp uniform_skeleton(Nat k) {
  BrouwerOp op = BrouwerOp::leaf(1);
  for (Nat i = 0; i < k; ++i) op = BrouwerOp::sup({}, op);
  return op;
}

}  // namespace baire::testkit
