#pragma once

#include <ostream>
#include <vector>

#include "baire/brouwer.hpp"

namespace baire {

inline void PrintTo(const FinSeq& a, std::ostream* os) { *os << a.to_string(); }
inline void PrintTo(const AddrPattern& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const BrouwerOp& op, std::ostream* os) { *os << describe(op); }

}  // namespace baire

namespace baire::test {

inline BrouwerOp L(Nat v) { return BrouwerOp::leaf(v); }
inline BrouwerOp S(std::vector<BrouwerOp> kids, BrouwerOp def) { return BrouwerOp::sup(std::move(kids), std::move(def)); }

/// Sup(n ↦ Leaf(n+1)), i.e. F(α) = α(0).
inline BrouwerOp first_entry_op(Nat hint = 4) {
  return BrouwerOp::generated([](Nat n) { return BrouwerOp::leaf(n + 1); }, hint);
}

/// Sup(n ↦ Sup(m ↦ Leaf(n+m+1))), i.e. F(α) = α(0) + α(1).
inline BrouwerOp sum_op_generated(Nat hint = 4) {
  return BrouwerOp::generated(
      [hint](Nat n) { return BrouwerOp::generated([n](Nat m) { return BrouwerOp::leaf(n + m + 1); }, hint); }, hint);
}

/// Tabular realiser of min(α(0), 1).
inline BrouwerOp min_first_one_op() { return S({L(1)}, L(2)); }

}  // namespace baire::test
