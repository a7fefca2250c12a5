#pragma once

// Family dispatcher: which starter profiles build an indecomposable,
// non-simple factorization of lambda*K_{2n}, plus the coverage table for
// lambda*K_{2s} and the admissibility bounds on lambda.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "onefact/core.hpp"
#include "onefact/cyclic.hpp"
#include "onefact/starters.hpp"

namespace onefact {

enum class Family { P1, P2, P3, P4, P5, P6, P7, P8, T3 };

const char *family_name(Family f);  // "P1" ... "T3"
/// Case-insensitive. Errors: InvalidArgument.
Family parse_family(const std::string &name);
const std::vector<Family> &all_families();

/// Hypotheses of each family on (n, lambda). P2 starts at ceil((n-2)/3)
/// instead of (n+1)/3 so that every lambda of the n >= 9 range is claimed.
bool in_domain(Family f, int n, int lambda);

/// Cyclic family claiming (n, lambda) under the fixed precedence.
/// Errors: NoFamily.
Family dispatch(int n, int lambda);

/// ceil((n-2)/3), the smallest lambda of the cyclic range at n.
int lambda_floor(int n);

/// One starter position of a family template.
struct Slot {
  std::string name;                         // "A", "B_r", "C", ...
  std::optional<DifferenceProfile> profile;  // pinned profile; empty: discovered
  std::optional<std::vector<int>> explicit_starter;  // edge list given outright
};

/// Errors: OutOfDomain.
std::vector<Slot> family_slots(Family f, int n, int lambda);

/// Profiles in slot order. Discovered slots come from the fixture set, or
/// from a live search when the fixture has no entry.
/// Errors: OutOfDomain, FixtureError, NoneFound.
std::vector<DifferenceProfile> family_profiles(Family f, int n, int lambda);

/// Discovered profiles by a fresh search, ignoring fixtures.
std::vector<DifferenceProfile> search_family_profiles(Family f, int n, int lambda);

struct Construction {
  Family family = Family::P1;
  StarterSet starters;
  MultiFactorization mf;
};

/// Errors: NoFamily, OutOfDomain, StarterSearchFailed, FixtureError.
Construction construct(int n, int lambda);
Construction construct_family(Family f, int n, int lambda);

/// AGL orbit factorization for 2n - 1 = p^m.
/// Errors: NotPrime, EvenP, InvalidArgument.
MultiFactorization construct_t3(int p, int m);

struct CoverageEntry {
  int lambda = 0;
  int base_n = 0;
  Family family = Family::P1;
};

/// lambda = 2 .. 2*floor(s/2) - 1. Errors: STooSmall.
std::vector<CoverageEntry> coverage_table(int s);

/// simple: 3*4*...*(2n-3); otherwise [n(2n-1)]^{n(2n-1)} * C(2n^3+n^2-n+1, 2n^2-n).
/// Errors: InvalidArgument (n < 2).
boost::multiprecision::cpp_int upper_bound(int n, bool simple);

// Fixture set of discovered profiles.

struct FixtureEntry {
  Family family = Family::P2;
  int n = 0;
  int lambda = 0;
  std::vector<DifferenceProfile> profiles;
  std::string provenance;
};

/// Errors: ParseError, FixtureError.
std::vector<FixtureEntry> parse_fixtures(const std::string &text);
std::string serialize_fixtures(const std::vector<FixtureEntry> &entries);

/// Replaces the active fixture set with the file at `path`; empty path
/// restores the built-in set. Errors: ParseError, FixtureError.
void set_fixture_path(const std::string &path);

/// Active entries (built-in unless overridden by set_fixture_path or the
/// ONEFACT_FIXTURES environment variable).
std::vector<FixtureEntry> active_fixtures();

/// Fresh search for every discovered family slot with n_min <= n <= n_max.
std::vector<FixtureEntry> generate_fixtures(int n_min, int n_max);

} // namespace onefact
