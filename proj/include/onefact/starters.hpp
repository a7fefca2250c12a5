#pragma once

// Orbit assembly of lambda*K_{2n} from starter factors, the counting
// certificate of indecomposability, and the searches that realize starters
// from their difference profiles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onefact/core.hpp"
#include "onefact/cyclic.hpp"

namespace onefact {

struct StarterSet {
  int n = 0;
  int lambda = 0;
  std::vector<CrossFactor> starters;

  /// t(M_a) summed over all starters.
  std::vector<int> aggregated() const;
  std::vector<DifferenceProfile> profiles() const;
};

enum class ViolationKind {
  WrongOrder,            // starter defined on a different n
  StabilizerNotTrivial,
  SharedOrbit,
  MultiplicityExceeded,  // t(M_a) > lambda
  NoFreeOrbit,           // odd n and every M_a is hit
};

struct Violation {
  ViolationKind kind;
  int index = -1;  // starter index, or orbit a for MultiplicityExceeded
  int other = -1;  // second starter for SharedOrbit; stabilizer order otherwise
  std::string message;
};

std::vector<Violation> check_starter_conditions(const StarterSet &s);

/// Smallest a with t(M_a) = 0; the near-factorization join uses M_b.
std::optional<int> free_orbit(const StarterSet &s);

/// Orbits of the starters, the side-edge join, and lambda - t(M_a) copies of
/// every M_a (M_b excluded for odd n). Errors: PreconditionFailed.
MultiFactorization assemble(const StarterSet &s,
                            std::optional<std::vector<int>> sigma = std::nullopt);

struct OrbitMultiplicity {
  std::vector<int> mu;  // multiplicity of the edges of M_a in the orbit of F
  bool uniform = true;  // every edge of a given M_a got the same count
  bool matches_profile = false;
};

/// Brute-force count of M_a edges over the H-orbit of f.
/// Errors: StabilizerNotTrivial.
OrbitMultiplicity orbit_multiplicity_check(const CrossFactor &f);

struct OrderStep {
  int starter = 0;
  int orbit = 0;
  bool exclusive = false;  // no other starter touches M_orbit
};

struct CertificateOrder {
  bool complete = false;
  std::vector<OrderStep> steps;
};

/// Greedy closure marking starters whose orbit must be taken whole or not at all.
CertificateOrder certificate_order(const std::vector<DifferenceProfile> &profiles);
CertificateOrder certificate_order(const StarterSet &s);

enum class CertificateStatus { Proven, Unknown };

struct TraceEntry {
  std::uint32_t selection = 0;  // bit i set: orbit of starter i included
  int lambda0 = 0;
  int orbit = 0;
  bool lower = true;  // true: copies of M_orbit would be negative; false: too many needed
};

struct Certificate {
  CertificateStatus status = CertificateStatus::Unknown;
  CertificateOrder ordering;
  std::vector<TraceEntry> trace;
  std::optional<std::pair<std::uint32_t, int>> feasible;  // first (selection, lambda0)
};

/// Errors: PreconditionFailed (lambda < 2), OrderingFailed.
Certificate certificate_indecomposable(const std::vector<DifferenceProfile> &profiles, int n,
                                       int lambda);
Certificate certificate_indecomposable(const StarterSet &s);

struct StarterSearchOptions {
  std::uint64_t max_nodes = 0;  // 0: unlimited
};

/// Permutation of Z_n with displacement multiset `target` and trivial
/// stabilizer; x = 0..n-1 in turn, differences tried in ascending order.
/// Errors: ProfileSumInvalid, Infeasible, NoneFound (node budget spent).
CrossFactor find_starter(int n, const DifferenceProfile &target,
                         StarterSearchOptions options = {});

struct ProfileSearchConstraints {
  std::vector<DifferenceProfile> fixed;  // leading members of every tuple
  int max_support = 4;
  std::size_t max_solutions = 1;
  std::uint64_t starter_node_budget = 200000;
};

/// Tuples of m profiles (fixed ones first) that are realizable, respect
/// t(M_a) <= lambda, leave a free orbit for odd n, and certify Proven.
/// Errors: NoneFound.
std::vector<std::vector<DifferenceProfile>> find_profiles(int n, int lambda, int m,
                                                          const ProfileSearchConstraints &c = {});

/// The candidate pool find_profiles draws from, in enumeration order.
std::vector<DifferenceProfile> profile_pool(int n, int max_support);

} // namespace onefact
