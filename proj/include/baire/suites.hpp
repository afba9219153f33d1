#pragma once

// Seeded invariant suites over random finite ops, each checked against the
// testkit oracles. Shared by the CLI `check` verb and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "baire/errors.hpp"

namespace baire::suites {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few, with witnesses
  std::size_t failure_count = 0;
  double seconds = 0.0;
  bool passed() const { return failure_count == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t count = 0;    // random objects; 0 selects the suite default
  std::size_t samples = 0;  // sampled points per object; 0 selects the default
};

/// γ(a*b) = γ(a) whenever γ(a) > 0 (|b| <= 3, entries < 4), and every
/// sampled point meets exactly one bar address (default 1000 ops, 50 points).
SuiteResult neighbourhood_law(const SuiteOptions& opt);
/// Denoted set of the cover witness equals the bar, and the round trip
/// returns the skeleton (default 300 ops).
SuiteResult cov_roundtrip(const SuiteOptions& opt);
/// Extracted realisers keep the skeleton and realise F (default 100 ops,
/// 50 points).
SuiteResult realiser_extraction(const SuiteOptions& opt);
/// apply_map ∘ map_from_realisable = F and validate_map passes (default 100
/// ops, 100 points).
SuiteResult commuting_diagram(const SuiteOptions& opt);
/// uniform_modulus = brute force on two fans, plus the worked sum example
/// (default 200 ops).
SuiteResult modulus_vs_oracle(const SuiteOptions& opt);
/// uniform_bar_modulus(cbar_from_function(F)) = uniform_modulus(F), plus
/// P(ᾱM) on the binary slice at the bound M (default 200 ops).
SuiteResult cbar_modulus(const SuiteOptions& opt);
/// Uniform cylinder covers, a refuted singleton cover, and extension-closure
/// invariance on random finite sets (default 100 sets).
SuiteResult cover_certificates(const SuiteOptions& opt);
/// function_from_cbar stops within the witness depth and matches the direct
/// max-change recomputation (default 100 c-bars, 50 points).
SuiteResult cbar_function(const SuiteOptions& opt);

std::vector<std::string> suite_names();
/// Throws SchemaError on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace baire::suites
