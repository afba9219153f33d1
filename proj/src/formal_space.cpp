#include "baire/formal_space.hpp"

#include <algorithm>
#include <memory>

namespace baire {

namespace {

void require_unit_leaves(const BrouwerOp& op) {
  if (!op.is_finite()) return;  // generated shapes are checked lazily
  if (op.is_leaf()) {
    if (op.leaf_value() != 1) throw SchemaError("cover witness shapes must have unit leaves");
    return;
  }
  for (const auto& c : op.explicit_children()) require_unit_leaves(c);
  require_unit_leaves(op.default_child());
}

// Cov clauses: {a} ∈ Cov(a), and ⋃ U_n ∈ Cov(a) from U_n ∈ Cov(a*<n>).
void cov_union(const BrouwerOp& shape, const AddrPattern& at, std::vector<AddrPattern>& out) {
  if (shape.is_leaf()) {
    out.push_back(at);
    return;
  }
  const Nat w = shape.width();
  for (Nat i = 0; i < w; ++i) cov_union(shape.child(i), at.append({i, false}), out);
  cov_union(shape.default_child(), at.append({w, true}), out);
}

}  // namespace

CovWitness::CovWitness(FinSeq root, BrouwerOp shape) : root_(std::move(root)), shape_(std::move(shape)) {
  require_unit_leaves(shape_);
}

std::vector<AddrPattern> CovWitness::denoted_patterns() const {
  if (!shape_.is_finite()) throw SchemaError("denoted patterns need a finite shape");
  std::vector<AddrPattern> out;
  cov_union(shape_, AddrPattern::exact(root_), out);
  return out;
}

std::vector<FinSeq> CovWitness::denoted(Nat cutoff) const {
  std::vector<FinSeq> out;
  for (const auto& p : denoted_patterns()) {
    auto xs = p.expand(cutoff);
    out.insert(out.end(), xs.begin(), xs.end());
  }
  return out;
}

bool CovWitness::denotes(const FinSeq& u, Nat fuel) const {
  if (!is_prefix(root_, u)) return false;
  const FinSeq b = u.drop(root_.size());
  if (apply_nbhd(shape_, b, fuel) == 0) return false;
  return b.empty() || apply_nbhd(shape_, b.take(b.size() - 1), fuel) == 0;
}

CovWitness cov_from_brouwer(const FinSeq& a, const BrouwerOp& op) { return CovWitness(a, skeleton(op)); }

BrouwerOp brouwer_from_cov(const CovWitness& w) { return w.shape(); }

Verdict check_cover(const FinSeq& a, const DecidableSet& u, const CovWitness& w, Nat cutoff, Nat fuel) {
  if (w.root() != a) return Verdict::no;
  bool bounded = false;
  if (w.shape().is_finite()) {
    for (const auto& q : w.denoted_patterns()) {
      std::vector<FinSeq> instances;
      if (q.is_exact()) {
        instances.push_back(q.least_instance());
      } else if (u.has_extent()) {
        instances = representatives(q, *u.extent());
      } else {
        instances = q.expand(cutoff);
        bounded = true;
      }
      for (const auto& x : instances) {
        if (!ext_member(u, x)) return Verdict::no;
      }
    }
    return bounded ? Verdict::unverified : Verdict::yes;
  }
  const auto listing = bar_enumerate(w.shape(), std::nullopt, cutoff, fuel);
  for (const auto& item : listing.items) {
    if (!ext_member(u, concat(w.root(), item.address))) return Verdict::no;
  }
  return Verdict::unverified;
}

void FormalPointFragment::validate() const {
  if (chain.size() != depth + 1) throw SchemaError("fragment chain must have depth+1 members");
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].size() != k) throw SchemaError("fragment member " + std::to_string(k) + " has wrong length");
    if (k > 0 && !is_strict_prefix(chain[k - 1], chain[k])) {
      throw SchemaError("fragment members " + std::to_string(k - 1) + " and " + std::to_string(k) +
                        " are not a chain");
    }
  }
}

FormalPointFragment formal_point_fragment(const Point& alpha, Nat depth) {
  FormalPointFragment f;
  f.depth = depth;
  const FinSeq top = iseg(alpha, depth);
  f.chain.reserve(static_cast<std::size_t>(depth) + 1);
  for (Nat n = 0; n <= depth; ++n) f.chain.push_back(top.take(n));
  return f;
}

FinSeq point_from_fragment(const FormalPointFragment& f) {
  f.validate();
  return f.chain.back();
}

// ---------------------------------------------------------------------------
// FormalMap

FormalMap::FormalMap(CovWitness witness, Relate relate, ValueAt value_at,
                     std::optional<std::vector<MapEntry>> table, bool table_only)
    : witness_(std::move(witness)),
      relate_(std::move(relate)),
      value_at_(std::move(value_at)),
      table_(std::move(table)),
      table_only_(table_only) {
  if (!witness_.root().empty()) throw SchemaError("a map's totality witness must be rooted at <>");
}

FormalMap FormalMap::from_table(CovWitness witness, std::vector<MapEntry> table) {
  auto rows = std::make_shared<const std::vector<MapEntry>>(table);
  Relate relate = [rows](const FinSeq& a, Nat n) {
    return std::any_of(rows->begin(), rows->end(), [&](const MapEntry& e) { return e.n == n && e.addr.matches(a); });
  };
  ValueAt value_at = [rows](const FinSeq& a) -> std::optional<Nat> {
    for (const auto& e : *rows) {
      if (e.addr.matches(a)) return e.n;
    }
    return std::nullopt;
  };
  return FormalMap(std::move(witness), std::move(relate), std::move(value_at), std::move(table), true);
}

FormalMap FormalMap::from_rules(CovWitness witness, Relate relate, ValueAt value_at,
                                std::optional<std::vector<MapEntry>> table) {
  return FormalMap(std::move(witness), std::move(relate), std::move(value_at), std::move(table), false);
}

FormalMap map_from_realisable(const ContinuousFn& f) {
  if (!f.has_finite_realiser()) throw SchemaError("map_from_realisable needs a finite realiser");
  const BrouwerOp& op = *f.realiser();
  CovWitness witness = cov_from_brouwer(FinSeq{}, op);
  std::vector<MapEntry> table;
  for (const auto& item : bar_patterns(op)) {
    table.push_back({item.address, f.at_zero_extension(item.address.least_instance())});
  }
  auto relate = [witness, f](const FinSeq& a, Nat n) {
    return witness.denotes(a) && f.at_zero_extension(a) == n;
  };
  auto value_at = [witness, f](const FinSeq& a) -> std::optional<Nat> {
    if (!witness.denotes(a)) return std::nullopt;
    return f.at_zero_extension(a);
  };
  return FormalMap::from_rules(std::move(witness), std::move(relate), std::move(value_at), std::move(table));
}

namespace {

std::vector<AddrPattern> table_addresses(const FormalMap& r) {
  std::vector<AddrPattern> out;
  if (r.table()) {
    for (const auto& e : *r.table()) out.push_back(e.addr);
  }
  return out;
}

}  // namespace

ContinuousFn realiser_from_map(const FormalMap& r, Nat fuel) {
  const auto& shape = r.witness().shape();
  const auto rows = table_addresses(r);
  auto label = [r](const FinSeq& u) -> Nat {
    const auto v = r.value_at(u);
    if (!v) throw PropertyViolation("value undefined at witness address " + u.to_string());
    return checked_add(*v, 1);
  };
  if (shape.is_finite()) {
    for (const auto& q : r.witness().denoted_patterns()) {
      for (const auto& x : representatives(q, rows)) label(x);
    }
  }
  FamilySplit split;
  if (!rows.empty()) {
    split = [rows](const FinSeq& parent, Nat /*width*/) {
      std::vector<Nat> out;
      const std::size_t i = parent.size();
      for (const auto& p : rows) {
        if (p.size() <= i || !p.head_matches(parent)) continue;
        out.push_back(p[i].lo);
        if (!p[i].open) out.push_back(checked_add(p[i].lo, 1));
      }
      return out;
    };
  }
  return ContinuousFn::realised_by(relabel(shape, FinSeq{}, label, split), fuel);
}

Nat apply_map(const FormalMap& r, const Point& alpha, Nat fuel) {
  for (Nat n = 0; n <= fuel; ++n) {
    const FinSeq u = iseg(alpha, n);
    if (r.witness().denotes(u, fuel)) {
      if (auto v = r.value_at(u)) return *v;
      throw PropertyViolation("value undefined at witness address " + u.to_string());
    }
  }
  throw FuelExhausted("apply_map: no witness address met within fuel " + std::to_string(fuel));
}

MapReport validate_map(const FormalMap& r, const ContinuousFn* f, std::span<const Point> samples, Nat cutoff,
                       Nat fuel) {
  MapReport report;
  const auto& w = r.witness();
  const auto rows = table_addresses(r);

  // (i) totality: <> ⊲ r⁻N through the witness.
  const DecidableSet domain = r.table()
                                  ? DecidableSet::from_patterns(rows)
                                  : DecidableSet::from_predicate([&r](const FinSeq& a) { return r.value_at(a).has_value(); });
  switch (check_cover(FinSeq{}, domain, w, cutoff, fuel)) {
    case Verdict::no:
      report.violations.push_back({"totality", "witness set is not contained in ext(r^-N)"});
      break;
    case Verdict::unverified:
      report.notes.push_back("totality checked only below cutoff " + std::to_string(cutoff));
      break;
    case Verdict::yes:
      break;
  }

  // (ii) single-valuedness on the witness set.
  if (w.shape().is_finite()) {
    const auto witness_set = w.denoted_patterns();
    if (r.table()) {
      const auto& table = *r.table();
      for (const auto& q : witness_set) {
        for (std::size_t i = 0; i < table.size(); ++i) {
          const auto qi = intersect(q, table[i].addr);
          if (!qi) continue;
          for (std::size_t j = i + 1; j < table.size(); ++j) {
            if (table[i].n == table[j].n) continue;
            if (const auto both = intersect(*qi, table[j].addr)) {
              report.violations.push_back(
                  {"single-valuedness", both->least_instance().to_string() + " relates to both " +
                                            std::to_string(table[i].n) + " and " + std::to_string(table[j].n)});
            }
          }
        }
      }
    }
    if (!r.table_only()) {
      bool bounded = false;
      for (const auto& q : witness_set) {
        std::vector<FinSeq> xs;
        if (q.is_exact()) {
          xs.push_back(q.least_instance());
        } else if (!rows.empty()) {
          xs = representatives(q, rows);
        } else {
          xs = q.expand(cutoff);
          bounded = true;
        }
        for (const auto& x : xs) {
          const auto v = r.value_at(x);
          if (!v) continue;  // reported by totality
          if (!r.relate(x, *v)) {
            report.violations.push_back({"value-relation", x.to_string() + " does not relate to its value " +
                                                               std::to_string(*v)});
          }
          const Nat top = checked_add(*v, cutoff);
          for (Nat m = 0; m <= top; ++m) {
            if (m != *v && r.relate(x, m)) {
              report.violations.push_back({"single-valuedness", x.to_string() + " relates to both " +
                                                                    std::to_string(*v) + " and " + std::to_string(m)});
            }
          }
        }
      }
      report.notes.push_back("rule-based single-valuedness checked for values up to value+" + std::to_string(cutoff) +
                             (bounded ? " on families listed below the cutoff" : ""));
    }
  } else {
    report.notes.push_back("generated witness: single-valuedness not checked exactly");
  }

  // (iii) the commuting square.
  if (f) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      try {
        const Nat lhs = f->apply(samples[i]);
        const Nat rhs = apply_map(r, samples[i], fuel);
        if (lhs != rhs) {
          report.violations.push_back({"commuting-square", "sample " + samples[i].to_string() + ": F gives " +
                                                               std::to_string(lhs) + ", Pt(r) gives " +
                                                               std::to_string(rhs)});
        }
      } catch (const std::exception& e) {
        report.violations.push_back({"commuting-square", "sample " + samples[i].to_string() + ": " + e.what()});
      }
    }
  }
  return report;
}

}  // namespace baire
