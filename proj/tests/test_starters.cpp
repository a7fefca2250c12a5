#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "onefact/catalog.hpp"
#include "onefact/starters.hpp"
#include "onefact/verify.hpp"
#include "oracle.hpp"

using namespace onefact;

namespace {

DifferenceProfile prof(int n, std::map<int, int> t) { return DifferenceProfile(n, t); }

StarterSet starters(int n, int lambda, const std::vector<DifferenceProfile> &ps) {
  StarterSet s{n, lambda, {}};
  for (const auto &p : ps)
    s.starters.push_back(find_starter(n, p));
  return s;
}

// every permutation of Z_n with the given profile and trivial stabilizer
int count_realizations(int n, const DifferenceProfile &target) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  int count = 0;
  do {
    DifferenceProfile p(n);
    for (int x = 0; x < n; ++x)
      ++p[(pi[static_cast<std::size_t>(x)] - x + n) % n];
    if (p != target)
      continue;
    int fixed_by = 0;
    for (int h = 0; h < n; ++h) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = pi[static_cast<std::size_t>((x + h) % n)] == (pi[static_cast<std::size_t>(x)] + h) % n;
      fixed_by += ok;
    }
    count += fixed_by == 1;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

// Prop 1 single starter {0:lambda, 1:k, n-1:k, 2:1, n-2:1}
DifferenceProfile prop1(int n, int lambda) {
  const int k = (n - lambda - 2) / 2;
  std::map<int, int> t{{0, lambda}, {2, 1}, {n - 2, 1}};
  if (k) {
    t[1] += k;
    t[n - 1] += k;
  }
  return prof(n, t);
}

} // namespace

TEST_SUITE("lemma3") {
  TEST_CASE("starter conditions") {
    CHECK(check_starter_conditions(
              starters(9, 8, {prof(9, {{0, 7}, {3, 1}, {6, 1}}), prof(9, {{0, 1}, {1, 7}, {2, 1}})}))
              .empty());

    StarterSet m0{5, 3, {CrossFactor(std::vector<int>{0, 1, 2, 3, 4})}};
    const auto v = check_starter_conditions(m0);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].kind == ViolationKind::StabilizerNotTrivial);
    CHECK(v[0].other == 5);

    auto twice = starters(5, 3, {prof(5, {{0, 3}, {2, 1}, {3, 1}})});
    twice.starters.push_back(twice.starters[0].shifted(2));
    twice.lambda = 6;
    const auto w = check_starter_conditions(twice);
    CHECK(std::any_of(w.begin(), w.end(),
                      [](const Violation &x) { return x.kind == ViolationKind::SharedOrbit; }));

    auto over = starters(5, 2, {prof(5, {{0, 3}, {2, 1}, {3, 1}})});
    const auto o = check_starter_conditions(over);
    CHECK(std::any_of(o.begin(), o.end(), [](const Violation &x) {
      return x.kind == ViolationKind::MultiplicityExceeded && x.index == 0;
    }));
    CHECK_CODE(assemble(over), ErrorCode::PreconditionFailed);
  }

  TEST_CASE("assembly sizes and validity") {
    const auto s = starters(5, 3, {prof(5, {{0, 3}, {2, 1}, {3, 1}})});
    const auto mf = assemble(s);
    CHECK(mf.size() == 27);
    CHECK(validate_factorization(mf).valid);
    CHECK(oracle::is_factorization(mf));
    REQUIRE(mf.model().joined_orbit);
    CHECK(*mf.model().joined_orbit == 1);

    const auto s10 =
        starters(10, 9, {prof(10, {{0, 8}, {3, 1}, {7, 1}}), prof(10, {{0, 1}, {1, 8}, {2, 1}})});
    const auto mf10 = assemble(s10);
    CHECK(mf10.size() == 171);
    CHECK(oracle::is_factorization(mf10));

    for (int lambda : {1, 2, 5}) {
      const auto empty = assemble(StarterSet{6, lambda, {}});
      CHECK(empty.size() == static_cast<std::size_t>(11 * lambda));
      CHECK(oracle::is_factorization(empty));
    }
  }

  TEST_CASE("orbit multiplicities follow the profile") {
    const auto a = find_starter(9, prof(9, {{0, 7}, {2, 1}, {7, 1}}));
    const auto m = orbit_multiplicity_check(a);
    CHECK(m.uniform);
    CHECK(m.matches_profile);
    CHECK(m.mu[0] == 7);
    CHECK(m.mu[4] == 0);

    const auto s = find_starter(5, prof(5, {{0, 3}, {2, 1}, {3, 1}}));
    // count M_2 edges over the five shifts directly
    std::map<oracle::Pair, int> hits;
    for (int h = 0; h < 5; ++h) {
      const auto shifted = s.shifted(h).to_factor();
      for (const auto &e : shifted.edges())
        if ((e.v - e.u) % 5 == 2)
          ++hits[{e.u, e.v}];
    }
    CHECK(hits.size() == 5);
    for (const auto &[e, c] : hits)
      CHECK(c == 1);
    CHECK(orbit_multiplicity_check(s).mu[2] == 1);

    CHECK_CODE(orbit_multiplicity_check(CrossFactor(std::vector<int>{1, 2, 0})),
               ErrorCode::StabilizerNotTrivial);
  }

  TEST_CASE("certificate ordering") {
    const auto one = certificate_order(std::vector<DifferenceProfile>{prop1(9, 3)});
    CHECK(one.complete);
    REQUIRE(one.steps.size() == 1);
    CHECK(one.steps[0].orbit == 2);
    CHECK(one.steps[0].exclusive);

    const auto p4 = certificate_order(
        std::vector<DifferenceProfile>{prof(9, {{0, 7}, {3, 1}, {6, 1}}), prof(9, {{0, 1}, {1, 7}, {2, 1}})});
    CHECK(p4.complete);
    REQUIRE(p4.steps.size() == 2);
    CHECK(p4.steps[0].starter == 0);
    CHECK(p4.steps[0].orbit == 3);
    CHECK(p4.steps[1].starter == 1);
    CHECK(p4.steps[1].orbit == 0);  // lowest qualifying orbit; M_0 is closed once A is marked

    const std::vector<DifferenceProfile> stuck = {prof(7, {{0, 5}, {5, 2}}), prof(7, {{1, 5}, {5, 2}})};
    CHECK_FALSE(certificate_order(stuck).complete);
    CHECK_CODE(certificate_indecomposable(stuck, 7, 6), ErrorCode::OrderingFailed);
  }

  TEST_CASE("certificate verdicts") {
    for (int n = 6; n <= 14; ++n)
      for (int lambda = 2; lambda < n - 2; ++lambda) {
        if (3 * lambda < n - 2 || (n - lambda) % 2)
          continue;
        const auto c = certificate_indecomposable(std::vector<DifferenceProfile>{prop1(n, lambda)}, n, lambda);
        CHECK_MESSAGE(c.status == CertificateStatus::Proven, "n=" << n << " lambda=" << lambda);
        CHECK_FALSE(c.feasible);
      }

    const std::vector<DifferenceProfile> p4_9 = {prof(9, {{0, 7}, {3, 1}, {6, 1}}),
                                                 prof(9, {{0, 1}, {1, 7}, {2, 1}})};
    CHECK(certificate_indecomposable(p4_9, 9, 8).status == CertificateStatus::Proven);

    // n = 5: r = 0 still certifies, r = 1 does not
    const std::vector<DifferenceProfile> r0 = {prof(5, {{0, 3}, {2, 1}, {3, 1}}),
                                               prof(5, {{0, 1}, {1, 3}, {2, 1}})};
    CHECK(certificate_indecomposable(r0, 5, 4).status == CertificateStatus::Proven);
    const std::vector<DifferenceProfile> r1 = {prof(5, {{0, 3}, {2, 1}, {3, 1}}),
                                               prof(5, {{0, 2}, {1, 2}, {3, 1}})};
    const auto c1 = certificate_indecomposable(r1, 5, 5);
    CHECK(c1.status == CertificateStatus::Unknown);
    REQUIRE(c1.feasible);

    CHECK_CODE(certificate_indecomposable(r0, 5, 1), ErrorCode::PreconditionFailed);
  }

  TEST_CASE("certificate agrees with exhaustive search on the n = 5 pair") {
    const auto r0 = assemble(starters(5, 4, {prof(5, {{0, 3}, {2, 1}, {3, 1}}),
                                             prof(5, {{0, 1}, {1, 3}, {2, 1}})}));
    CHECK_FALSE(oracle::decomposable(r0));
    CHECK(find_subfactorization(r0).outcome == Outcome::ProvenNone);

    const auto r1 = assemble(starters(5, 5, {prof(5, {{0, 3}, {2, 1}, {3, 1}}),
                                             prof(5, {{0, 2}, {1, 2}, {3, 1}})}));
    CHECK(oracle::decomposable(r1));
    const auto res = find_subfactorization(r1);
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(decomposability_witness_check(r1, *res.witness));
  }

  TEST_CASE("find_starter") {
    const auto target = prof(5, {{0, 3}, {2, 1}, {3, 1}});
    const auto f = find_starter(5, target);
    CHECK(f.profile() == target);
    CHECK(f.stabilizer_order() == 1);
    CHECK(count_realizations(5, target) > 0);

    CHECK_CODE(find_starter(5, prof(5, {{0, 4}, {1, 1}})), ErrorCode::ProfileSumInvalid);
    CHECK_CODE(find_starter(5, prof(5, {{0, 4}})), ErrorCode::ProfileSumInvalid);
    CHECK_CODE(find_starter(5, prof(5, {{1, 5}})), ErrorCode::Infeasible);
    CHECK(count_realizations(5, prof(5, {{1, 5}})) == 0);
    CHECK_CODE(find_starter(9, prof(9, {{0, 2}, {1, 6}, {3, 1}}), {1}), ErrorCode::NoneFound);
  }

  TEST_CASE("find_starter agrees with brute force on small pools") {
    for (int n = 3; n <= 7; ++n)
      for (const auto &p : profile_pool(n, 3)) {
        const bool exists = count_realizations(n, p) > 0;
        bool found = false;
        try {
          const auto f = find_starter(n, p);
          found = true;
          CHECK(f.profile() == p);
          CHECK(f.stabilizer_order() == 1);
        } catch (const Error &e) {
          CHECK(e.code() == ErrorCode::Infeasible);
        }
        CHECK_MESSAGE(found == exists, "n=" << n << " " << p.to_string());
      }
  }

  TEST_CASE("profile search") {
    const auto five = find_profiles(5, 2, 1);
    REQUIRE_FALSE(five.empty());
    CHECK(five[0][0][0] == 2);
    const auto s = starters(5, 2, five[0]);
    CHECK(certificate_indecomposable(s).status == CertificateStatus::Proven);
    CHECK(oracle::is_factorization(assemble(s)));

    CHECK_CODE(find_profiles(4, 1, 1), ErrorCode::NoneFound);

    // two fixed A-shaped starters plus three found ones
    const std::vector<DifferenceProfile> fixed = {prof(9, {{0, 7}, {2, 1}, {7, 1}}),
                                                  prof(9, {{0, 7}, {3, 1}, {6, 1}})};
    ProfileSearchConstraints c;
    c.fixed = fixed;
    const auto nine = find_profiles(9, 17, 5, c);
    REQUIRE_FALSE(nine.empty());
    const auto &tuple = nine[0];
    REQUIRE(tuple.size() == 5);
    CHECK(tuple[0] == fixed[0]);
    CHECK(tuple[1] == fixed[1]);
    const auto built = starters(9, 17, tuple);
    CHECK(check_starter_conditions(built).empty());
    CHECK(certificate_indecomposable(built).status == CertificateStatus::Proven);
    CHECK(oracle::is_factorization(assemble(built)));
  }

  TEST_CASE("pool members are well formed") {
    for (int n : {5, 8, 11})
      for (const auto &p : profile_pool(n, 4)) {
        CHECK(p.total() == n);
        CHECK(p.displacement_sum() == 0);
        CHECK(p.max_value() < n);
      }
  }
}
