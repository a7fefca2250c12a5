#pragma once

// Deciding decomposability: exhaustive exact-multicover search for a
// proper subfactorization, an orbit-coherent search for Lemma-3 outputs,
// and an independent witness checker.

#include <cstdint>
#include <optional>
#include <vector>

#include "onefact/core.hpp"
#include "onefact/starters.hpp"

namespace onefact {

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
};

enum class Outcome { ProvenNone, Found, Exhausted };

const char *outcome_name(Outcome o);  // "proven_none", "found", "exhausted"

struct Witness {
  int lambda0 = 0;
  std::vector<std::size_t> indices;  // sorted, into mf.factors()
};

struct SearchResult {
  Outcome outcome = Outcome::ProvenNone;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// With lambda0 unset, tries lambda0 = 1 .. lambda/2 in turn (a witness for
/// lambda0 makes its complement one for lambda - lambda0).
/// Errors: InvalidInput (mf invalid, lambda < 2, lambda0 outside (0, lambda)).
SearchResult find_subfactorization(const MultiFactorization &mf,
                                   std::optional<int> lambda0 = std::nullopt,
                                   SearchBudget budget = {});

/// Searches only selections taking whole starter orbits, lambda0 of each
/// joined factor and any number of M_a copies. Complete when every starter
/// orbit is forced whole. Errors: HypothesesUnmet.
SearchResult orbit_granular_search(const MultiFactorization &mf, const StarterSet &starters,
                                   SearchBudget budget = {});

/// Recounts every pair over the selected factors; requires 0 < lambda0 < lambda.
bool decomposability_witness_check(const MultiFactorization &mf, const Witness &w);

/// Indices not in w, as a (lambda - lambda0) witness.
Witness complement(const MultiFactorization &mf, const Witness &w);

} // namespace onefact
