#include "doctest.h"

#include <numeric>
#include <random>

#include "onefact/catalog.hpp"
#include "onefact/cyclic.hpp"
#include "onefact/field.hpp"
#include "onefact/verify.hpp"
#include "oracle.hpp"

using namespace onefact;

namespace {

std::vector<OneFactor> k4_matchings() { return lucas_factorization(4); }

MultiFactorization k4_multi(int a, int b, int c) {
  const auto m = k4_matchings();
  std::vector<OneFactor> fs;
  for (int i = 0; i < a; ++i)
    fs.push_back(m[0]);
  for (int i = 0; i < b; ++i)
    fs.push_back(m[1]);
  for (int i = 0; i < c; ++i)
    fs.push_back(m[2]);
  return MultiFactorization(2, a, fs);
}

MultiFactorization relabelled_lucas(int n2, int lambda, std::mt19937 &rng) {
  std::vector<int> perm(static_cast<std::size_t>(n2));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<OneFactor> fs;
  for (int c = 0; c < lambda; ++c)
    for (const auto &f : lucas_factorization(n2)) {
      std::vector<Edge> e;
      for (const auto &x : f.edges())
        e.push_back(make_edge(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]));
      fs.push_back(canonicalize_factor(e, n2 / 2));
    }
  std::shuffle(fs.begin(), fs.end(), rng);
  return MultiFactorization(n2 / 2, lambda, fs);
}

} // namespace

TEST_SUITE("verify") {
  TEST_CASE("lambda K4 splits off one copy of each matching") {
    const auto mf = k4_multi(2, 2, 2);
    const auto r = find_subfactorization(mf);
    REQUIRE(r.outcome == Outcome::Found);
    REQUIRE(r.witness);
    CHECK(r.witness->lambda0 == 1);
    REQUIRE(r.witness->indices.size() == 3);
    std::set<OneFactor> picked;
    for (auto i : r.witness->indices)
      picked.insert(mf.factors()[i]);
    CHECK(picked.size() == 3);
    CHECK(decomposability_witness_check(mf, *r.witness));
    CHECK(oracle::covers_exactly(mf.factors(), r.witness->indices, 4, 1));
  }

  TEST_CASE("witness checker") {
    const auto mf = k4_multi(2, 2, 2);
    const Witness good{1, {0, 2, 4}};
    CHECK(decomposability_witness_check(mf, good));
    CHECK_FALSE(decomposability_witness_check(mf, Witness{1, {0, 2}}));
    CHECK_FALSE(decomposability_witness_check(mf, Witness{2, {0, 1, 2, 3, 4, 5}}));
    CHECK_FALSE(decomposability_witness_check(mf, Witness{1, {0, 0, 2}}));
    CHECK_FALSE(decomposability_witness_check(mf, Witness{1, {0, 2, 9}}));
    const auto rest = complement(mf, good);
    CHECK(rest.lambda0 == 1);
    CHECK(rest.indices == std::vector<std::size_t>{1, 3, 5});
    CHECK(decomposability_witness_check(mf, rest));
  }

  TEST_CASE("inputs are validated") {
    const auto mf = k4_multi(1, 1, 1);
    CHECK_CODE(find_subfactorization(mf), ErrorCode::InvalidInput);
    auto broken = k4_matchings();
    broken.push_back(broken[0]);
    CHECK_CODE(find_subfactorization(MultiFactorization(2, 2, broken)), ErrorCode::InvalidInput);
    CHECK_CODE(find_subfactorization(k4_multi(2, 2, 2), 2), ErrorCode::InvalidInput);
    CHECK_CODE(find_subfactorization(k4_multi(2, 2, 2), 0), ErrorCode::InvalidInput);
  }

  TEST_CASE("field orbit at q = 5 has no subfactorization") {
    const auto mf = agl_orbit_factorization(field_ctx(5, 1));
    const auto r = find_subfactorization(mf);
    CHECK(r.outcome == Outcome::ProvenNone);
    CHECK_FALSE(r.witness);
    CHECK_FALSE(oracle::witness(mf, 1));
  }

  TEST_CASE("budgets end in Exhausted, never in a false verdict") {
    const auto mf = agl_orbit_factorization(field_ctx(7, 1));
    const auto r = find_subfactorization(mf, std::nullopt, {3, 0});
    CHECK(r.outcome == Outcome::Exhausted);
    CHECK_FALSE(r.witness);
    CHECK(find_subfactorization(mf).outcome == Outcome::ProvenNone);
  }

  TEST_CASE("negative controls: relabelled Lucas copies always split") {
    std::mt19937 rng(4242);
    for (int n2 : {4, 6, 8, 10})
      for (int lambda : {2, 3})
        for (int trial = 0; trial < 4; ++trial) {
          const auto mf = relabelled_lucas(n2, lambda, rng);
          const auto r = find_subfactorization(mf, 1);
          REQUIRE(r.outcome == Outcome::Found);
          CHECK(r.witness->lambda0 == 1);
          CHECK(decomposability_witness_check(mf, *r.witness));
          CHECK(oracle::covers_exactly(mf.factors(), r.witness->indices, n2, 1));
        }
  }

  TEST_CASE("stacked factorizations split along the seam") {
    std::mt19937 rng(77);
    const auto t3 = agl_orbit_factorization(field_ctx(5, 1));
    for (int trial = 0; trial < 6; ++trial) {
      // T3 on K_6 under a random relabelling, stacked on the original
      std::vector<int> perm(6);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto fs = t3.factors();
      for (const auto &f : t3.factors()) {
        std::vector<Edge> e;
        for (const auto &x : f.edges())
          e.push_back(make_edge(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]));
        fs.push_back(canonicalize_factor(e, 3));
      }
      const bool with_lucas = trial % 2;
      int lambda = 4;
      if (with_lucas) {
        const auto l = lucas_factorization(6);
        fs.insert(fs.end(), l.begin(), l.end());
        lambda = 5;
      }
      const MultiFactorization mf(3, lambda, fs);
      REQUIRE(oracle::is_factorization(mf));
      const auto r = find_subfactorization(mf);
      REQUIRE(r.outcome == Outcome::Found);
      CHECK(decomposability_witness_check(mf, *r.witness));
      CHECK(oracle::covers_exactly(mf.factors(), r.witness->indices, 6, r.witness->lambda0));
      CHECK(oracle::witness(mf, r.witness->lambda0));
      if (with_lucas)
        CHECK(r.witness->lambda0 == 1);
    }
  }

  TEST_CASE("every lambda K4 factorization is decomposable") {
    int valid = 0;
    for (int lambda = 2; lambda <= 4; ++lambda)
      for (int a = 0; a <= lambda; ++a)
        for (int b = 0; b <= lambda; ++b)
          for (int c = 0; c <= lambda; ++c) {
          const auto m = k4_matchings();
          std::vector<OneFactor> fs;
          for (int i = 0; i < a; ++i)
            fs.push_back(m[0]);
          for (int i = 0; i < b; ++i)
            fs.push_back(m[1]);
          for (int i = 0; i < c; ++i)
            fs.push_back(m[2]);
          const MultiFactorization mf(2, lambda, fs);
          if (!validate_factorization(mf).valid)
            continue;
          ++valid;
          const auto r = find_subfactorization(mf);
          REQUIRE(r.outcome == Outcome::Found);
          CHECK(decomposability_witness_check(mf, *r.witness));
        }
    CHECK(valid == 3);
  }

  TEST_CASE("orbit-granular search") {
    const auto c = construct(9, 3);
    const auto r = orbit_granular_search(c.mf, c.starters);
    CHECK(r.outcome == Outcome::ProvenNone);

    const auto c5 = construct(5, 3);
    CHECK(orbit_granular_search(c5.mf, c5.starters).outcome ==
          find_subfactorization(c5.mf).outcome);

    // starters whose orbits are not forced whole
    StarterSet loose{7, 4, {}};
    loose.starters.push_back(find_starter(7, DifferenceProfile(7, {{0, 4}, {1, 2}, {5, 1}})));
    loose.starters.push_back(find_starter(7, DifferenceProfile(7, {{1, 1}, {2, 2}, {5, 1}, {6, 3}})));
    CHECK_FALSE(certificate_order(loose).complete);
    CHECK_CODE(orbit_granular_search(assemble(loose), loose), ErrorCode::HypothesesUnmet);

    CHECK_CODE(orbit_granular_search(c5.mf, c.starters), ErrorCode::HypothesesUnmet);
  }

  TEST_CASE("an Unknown certificate comes with a granular witness") {
    StarterSet s{5, 5, {}};
    s.starters.push_back(find_starter(5, DifferenceProfile(5, {{0, 3}, {2, 1}, {3, 1}})));
    s.starters.push_back(find_starter(5, DifferenceProfile(5, {{0, 2}, {1, 2}, {3, 1}})));
    const auto mf = assemble(s);
    const auto r = orbit_granular_search(mf, s);
    REQUIRE(r.outcome == Outcome::Found);
    CHECK(decomposability_witness_check(mf, *r.witness));
    CHECK(oracle::covers_exactly(mf.factors(), r.witness->indices, 10, r.witness->lambda0));
  }
}
