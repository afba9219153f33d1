#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace baire {

/// Raised when a bounded search (descent fuel, depth budget) runs out
/// before an answer is found.
class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: bad JSON shape, zero leaf values, invalid fans.
class SchemaError : public std::invalid_argument {
 public:
  explicit SchemaError(const std::string& what) : std::invalid_argument(what) {}
};

/// A precondition or law of the mathematical object was found violated.
class PropertyViolation : public std::logic_error {
 public:
  explicit PropertyViolation(const std::string& what) : std::logic_error(what) {}
};

/// Arithmetic on naturals that would leave the 64-bit range.
class NaturalOverflow : public std::overflow_error {
 public:
  explicit NaturalOverflow(const std::string& what) : std::overflow_error(what) {}
};

using Nat = std::uint64_t;

inline constexpr Nat kDefaultFuel = 10000;
inline constexpr Nat kDefaultDepthBudget = 64;

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);

}  // namespace baire
