#include "baire/brouwer.hpp"

#include <algorithm>
#include <sstream>

namespace baire {

struct BrouwerOp::Node {
  enum class Kind { leaf, tabular, generated } kind = Kind::leaf;
  Nat value = 1;
  std::vector<BrouwerOp> children;
  std::optional<BrouwerOp> fallback;
  Rule rule;
  Nat hint = 0;
  bool finite = true;
  Nat height = 0;
  Nat max_width = 0;
};

BrouwerOp::BrouwerOp() : BrouwerOp(leaf(1)) {}

BrouwerOp BrouwerOp::leaf(Nat value) {
  if (value == 0) throw SchemaError("leaf values must be >= 1");
  auto n = std::make_shared<Node>();
  n->value = value;
  return BrouwerOp(std::move(n));
}

BrouwerOp BrouwerOp::sup(std::vector<BrouwerOp> children, BrouwerOp default_child) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::tabular;
  n->finite = default_child.is_finite();
  n->height = default_child.node().finite ? default_child.node().height : 0;
  n->max_width = children.size();
  for (const auto& c : children) {
    n->finite = n->finite && c.is_finite();
    if (c.node().finite) {
      n->height = std::max(n->height, c.node().height);
      n->max_width = std::max(n->max_width, c.node().max_width);
    }
  }
  if (default_child.node().finite) n->max_width = std::max(n->max_width, default_child.node().max_width);
  n->height = checked_add(n->height, 1);
  n->children = std::move(children);
  n->fallback = std::move(default_child);
  return BrouwerOp(std::move(n));
}

BrouwerOp BrouwerOp::generated(Rule rule, Nat cutoff_hint) {
  if (!rule) throw SchemaError("generated sup node needs a rule");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::generated;
  n->rule = std::move(rule);
  n->hint = cutoff_hint;
  n->finite = false;
  return BrouwerOp(std::move(n));
}

bool BrouwerOp::is_leaf() const { return node().kind == Node::Kind::leaf; }
bool BrouwerOp::is_generated_node() const { return node().kind == Node::Kind::generated; }
bool BrouwerOp::is_finite() const { return node().finite; }

Nat BrouwerOp::leaf_value() const {
  if (!is_leaf()) throw std::logic_error("leaf_value on a sup node");
  return node().value;
}

Nat BrouwerOp::width() const {
  switch (node().kind) {
    case Node::Kind::leaf:
      return 0;
    case Node::Kind::tabular:
      return node().children.size();
    case Node::Kind::generated:
      return node().hint;
  }
  return 0;
}

std::span<const BrouwerOp> BrouwerOp::explicit_children() const { return node().children; }

const BrouwerOp& BrouwerOp::default_child() const {
  if (node().kind != Node::Kind::tabular) throw std::logic_error("default_child on a non-tabular node");
  return *node().fallback;
}

BrouwerOp BrouwerOp::child(Nat i) const {
  const auto& n = node();
  switch (n.kind) {
    case Node::Kind::leaf:
      throw std::logic_error("child of a leaf");
    case Node::Kind::tabular:
      return i < n.children.size() ? n.children[static_cast<std::size_t>(i)] : *n.fallback;
    case Node::Kind::generated:
      return n.rule(i);
  }
  throw std::logic_error("unreachable");
}

Nat BrouwerOp::height() const {
  if (!is_finite()) throw SchemaError("height of a generated op is not computable");
  return node().height;
}

Nat BrouwerOp::max_width() const {
  if (!is_finite()) throw SchemaError("max_width of a generated op is not computable");
  return node().max_width;
}

bool same_op(const BrouwerOp& a, const BrouwerOp& b) {
  if (!a.is_finite() || !b.is_finite()) throw SchemaError("structural equality needs finite ops");
  if (a.id() == b.id()) return true;
  if (a.is_leaf() || b.is_leaf()) {
    return a.is_leaf() && b.is_leaf() && a.leaf_value() == b.leaf_value();
  }
  const Nat w = std::max(a.width(), b.width());
  // Index w reaches the default child of both.
  for (Nat i = 0; i <= w; ++i) {
    if (!same_op(a.child(i), b.child(i))) return false;
  }
  return true;
}

std::string describe(const BrouwerOp& op) {
  if (op.is_leaf()) return "L" + std::to_string(op.leaf_value());
  if (op.is_generated_node()) return "G(hint " + std::to_string(op.width()) + ")";
  std::string s = "S[";
  for (const auto& c : op.explicit_children()) s += describe(c) + ",";
  s += "|" + describe(op.default_child()) + "]";
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unverified:
      return "unverified";
  }
  return "?";
}

namespace {

void spend(Nat& used, Nat fuel, const char* what) {
  if (used >= fuel) {
    throw FuelExhausted(std::string(what) + ": no bar element found within fuel " + std::to_string(fuel));
  }
  ++used;
}

}  // namespace

Nat apply_nbhd(const BrouwerOp& op, const FinSeq& a, Nat fuel) {
  BrouwerOp node = op;
  Nat used = 0;
  for (Nat v : a.items()) {
    if (node.is_leaf()) return node.leaf_value();
    spend(used, fuel, "apply_nbhd");
    node = node.child(v);
  }
  return node.is_leaf() ? node.leaf_value() : 0;
}

EvalResult eval(const BrouwerOp& op, const Point& alpha, Nat fuel) {
  BrouwerOp node = op;
  Nat n = 0;
  Nat used = 0;
  while (!node.is_leaf()) {
    spend(used, fuel, "eval");
    node = node.child(alpha.at(n));
    ++n;
  }
  return {node.leaf_value() - 1, n};
}

Nat default_expansion_cutoff(const BrouwerOp& op) {
  return std::max<Nat>(checked_add(op.max_width(), 1), 2);
}

namespace {

struct BarWalker {
  std::optional<Nat> limit;
  std::optional<Nat> cutoff;
  Nat fuel;
  BarListing out;
  std::vector<Nat> path;

  // Returns false once the limit is reached.
  bool walk(const BrouwerOp& node) {
    if (node.is_leaf()) {
      if (limit && out.items.size() >= *limit) {
        out.truncated = true;
        return false;
      }
      out.items.push_back({FinSeq(path), node.leaf_value()});
      return true;
    }
    if (path.size() >= fuel) {
      throw FuelExhausted("bar_enumerate: depth exceeds fuel " + std::to_string(fuel));
    }
    Nat upto = 0;
    if (node.is_generated_node()) {
      upto = cutoff.value_or(node.width());
      out.truncated = true;
    } else {
      upto = std::max(node.width(), cutoff.value_or(0));
    }
    for (Nat i = 0; i < upto; ++i) {
      path.push_back(i);
      const bool more = walk(node.child(i));
      path.pop_back();
      if (!more) return false;
    }
    return true;
  }
};

void collect_patterns(const BrouwerOp& node, std::vector<PatternStep>& path,
                      std::vector<BarPattern>& out) {
  if (node.is_leaf()) {
    out.push_back({AddrPattern(path), node.leaf_value()});
    return;
  }
  const auto kids = node.explicit_children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    path.push_back({i, false});
    collect_patterns(kids[i], path, out);
    path.pop_back();
  }
  path.push_back({kids.size(), true});
  collect_patterns(node.default_child(), path, out);
  path.pop_back();
}

// Scans the leaves of the subtree at `node`, whose address is `path`.
// Stops at the first leaf whose value differs from the first one seen.
struct LeafScan {
  explicit LeafScan(Nat c) : cutoff(c) {}

  Nat cutoff;
  bool complete = true;
  std::optional<std::pair<FinSeq, Nat>> first;
  std::optional<std::pair<FinSeq, FinSeq>> witness;
  std::vector<Nat> path;

  bool walk(const BrouwerOp& node, Nat depth_left) {
    if (node.is_leaf()) {
      if (!first) {
        first.emplace(FinSeq(path), node.leaf_value());
      } else if (first->second != node.leaf_value()) {
        witness.emplace(first->first, FinSeq(path));
        return false;
      }
      return true;
    }
    // Tabular nodes: explicit children plus index width for the default.
    Nat count = node.width() + 1;
    Nat next_depth = depth_left;
    if (node.is_generated_node()) {
      complete = false;
      if (depth_left == 0) return true;
      count = cutoff;
      next_depth = depth_left - 1;
    }
    for (Nat i = 0; i < count; ++i) {
      path.push_back(i);
      const bool more = walk(node.child(i), next_depth);
      path.pop_back();
      if (!more) return false;
    }
    return true;
  }
};

}  // namespace

BarListing bar_enumerate(const BrouwerOp& op, std::optional<Nat> limit, std::optional<Nat> cutoff,
                         Nat fuel) {
  if (!cutoff && op.is_finite()) cutoff = default_expansion_cutoff(op);
  BarWalker w{limit, cutoff, fuel, {}, {}};
  w.walk(op);
  return std::move(w.out);
}

std::vector<BarPattern> bar_patterns(const BrouwerOp& op) {
  if (!op.is_finite()) throw SchemaError("bar_patterns needs a finite op");
  std::vector<BarPattern> out;
  std::vector<PatternStep> path;
  collect_patterns(op, path, out);
  return out;
}

BrouwerOp skeleton(const BrouwerOp& op) {
  if (op.is_leaf()) return op.leaf_value() == 1 ? op : BrouwerOp::leaf(1);
  if (op.is_generated_node()) {
    return BrouwerOp::generated([op](Nat i) { return skeleton(op.child(i)); }, op.width());
  }
  std::vector<BrouwerOp> kids;
  kids.reserve(op.explicit_children().size());
  for (const auto& c : op.explicit_children()) kids.push_back(skeleton(c));
  return BrouwerOp::sup(std::move(kids), skeleton(op.default_child()));
}

ContinuousFn ContinuousFn::realised_by(const BrouwerOp& op, Nat fuel) {
  return ContinuousFn([op, fuel](const Point& a) { return eval(op, a, fuel).value; }, op);
}

RealiseReport check_realises(const ContinuousFn& f, const BrouwerOp& op,
                             std::span<const Point> samples, Nat fuel) {
  RealiseReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Nat want = f.apply(samples[i]);
    const Nat got = eval(op, samples[i], fuel).value;
    ++report.checked;
    if (want != got) report.failures.push_back({i, want, got});
  }
  return report;
}

ConstancyAnswer is_constant_below(const BrouwerOp& op, const FinSeq& a, Nat cutoff, Nat fuel) {
  BrouwerOp node = op;
  Nat used = 0;
  for (Nat v : a.items()) {
    if (node.is_leaf()) return {Verdict::yes, std::nullopt, cutoff};
    spend(used, fuel, "is_constant_below");
    node = node.child(v);
  }
  LeafScan scan(cutoff);
  scan.path = a.vec();
  scan.walk(node, cutoff);
  if (scan.witness) return {Verdict::no, scan.witness, cutoff};
  return {scan.complete ? Verdict::yes : Verdict::unverified, std::nullopt, cutoff};
}

namespace {

std::optional<std::pair<FinSeq, FinSeq>> nonconstant_walk(const BrouwerOp& node, const AddrPattern& p,
                                                          std::size_t idx, std::vector<Nat>& path) {
  if (node.is_leaf()) return std::nullopt;
  if (idx == p.size()) {
    LeafScan scan(0);
    scan.path = path;
    scan.walk(node, 0);
    return scan.witness;
  }
  const auto& step = p[idx];
  std::vector<Nat> indices;
  if (!step.open) {
    indices.push_back(step.lo);
  } else {
    for (Nat j = step.lo; j < node.width(); ++j) indices.push_back(j);
    indices.push_back(std::max(step.lo, node.width()));
  }
  for (Nat j : indices) {
    path.push_back(j);
    auto w = nonconstant_walk(node.child(j), p, idx + 1, path);
    path.pop_back();
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<FinSeq, FinSeq>> find_nonconstant_instance(const BrouwerOp& op,
                                                                    const AddrPattern& p) {
  if (!op.is_finite()) throw SchemaError("exact constancy check needs a finite op");
  std::vector<Nat> path;
  return nonconstant_walk(op, p, 0, path);
}

BrouwerOp relabel(const BrouwerOp& shape, const FinSeq& root, const LeafLabel& label,
                  const FamilySplit& split) {
  if (shape.is_leaf()) return BrouwerOp::leaf(label(root));
  if (shape.is_generated_node()) {
    return BrouwerOp::generated(
        [shape, root, label, split](Nat i) { return relabel(shape.child(i), root.child(i), label, split); },
        shape.width());
  }
  const Nat w = shape.width();
  std::vector<BrouwerOp> kids;
  for (Nat i = 0; i < w; ++i) kids.push_back(relabel(shape.child(i), root.child(i), label, split));

  std::vector<Nat> reps{w};
  if (split) {
    for (Nat r : split(root, w)) {
      if (r > w) reps.push_back(r);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  }
  std::vector<BrouwerOp> family;
  family.reserve(reps.size());
  for (Nat r : reps) family.push_back(relabel(shape.default_child(), root.child(r), label, split));

  const bool uniform = std::all_of(family.begin(), family.end(),
                                   [&](const BrouwerOp& t) { return same_op(t, family.back()); });
  if (!uniform) {
    // Index j in [reps[k], reps[k+1]) behaves like reps[k].
    std::size_t k = 0;
    for (Nat j = w; j < reps.back(); ++j) {
      while (k + 1 < reps.size() && reps[k + 1] <= j) ++k;
      kids.push_back(family[k]);
    }
    while (kids.size() > w && same_op(kids.back(), family.back())) kids.pop_back();
  }
  return BrouwerOp::sup(std::move(kids), family.back());
}

FamilySplit realiser_split(const BrouwerOp& rho) {
  return [rho](const FinSeq& parent, Nat w) {
    std::vector<Nat> out;
    BrouwerOp node = rho;
    for (Nat v : parent.items()) {
      if (node.is_leaf()) return out;
      node = node.child(v);
    }
    if (node.is_leaf() || node.is_generated_node()) return out;
    for (Nat j = w + 1; j <= node.width(); ++j) out.push_back(j);
    return out;
  };
}

BrouwerOp extract_realiser(const ContinuousFn& f, const BrouwerOp& op) {
  FamilySplit split;
  if (f.has_finite_realiser()) {
    const BrouwerOp rho = *f.realiser();
    if (op.is_finite()) {
      for (const auto& item : bar_patterns(op)) {
        if (auto bad = find_nonconstant_instance(rho, item.address)) {
          throw PropertyViolation("function is not constant on the cylinder of bar address " +
                                  item.address.to_string() + ": " + bad->first.to_string() + " vs " +
                                  bad->second.to_string());
        }
      }
    }
    split = realiser_split(rho);
  }
  return relabel(
      op, FinSeq{}, [f](const FinSeq& a) { return checked_add(f.at_zero_extension(a), 1); }, split);
}

}  // namespace baire
