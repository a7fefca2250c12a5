#include "doctest.h"

#include "onefact/core.hpp"
#include "onefact/cyclic.hpp"
#include "onefact/catalog.hpp"
#include "onefact/field.hpp"
#include "oracle.hpp"

using namespace onefact;

namespace {

// the three perfect matchings of K_4
std::vector<OneFactor> k4_matchings() {
  const std::vector<std::vector<Edge>> raw = {
      {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  std::vector<OneFactor> out;
  for (const auto &e : raw)
    out.push_back(canonicalize_factor(e, 2));
  return out;
}

std::vector<OneFactor> copies(const std::vector<OneFactor> &fs, int k) {
  std::vector<OneFactor> out;
  for (int i = 0; i < k; ++i)
    out.insert(out.end(), fs.begin(), fs.end());
  return out;
}

} // namespace

TEST_SUITE("core") {
  TEST_CASE("canonical form sorts endpoints and edges") {
    const std::vector<Edge> in = {{2, 1}, {3, 0}};
    const auto f = canonicalize_factor(in, 2);
    REQUIRE(f.size() == 2);
    CHECK(f.edges()[0] == Edge{0, 3});
    CHECK(f.edges()[1] == Edge{1, 2});
    CHECK(f.to_string() == "{[0,3],[1,2]}");
  }

  TEST_CASE("canonicalization rejects non-matchings") {
    const std::vector<Edge> shared = {{0, 1}, {1, 2}};
    CHECK_CODE(canonicalize_factor(shared, 2), ErrorCode::NotAMatching);
    const std::vector<Edge> outside = {{0, 1}, {2, 4}};
    CHECK_CODE(canonicalize_factor(outside, 2), ErrorCode::VertexOutOfRange);
    const std::vector<Edge> short_ = {{0, 1}};
    CHECK_CODE(canonicalize_factor(short_, 2), ErrorCode::WrongSize);
    CHECK_CODE(make_edge(3, 3), ErrorCode::NotAMatching);
  }

  TEST_CASE("canonicalization is idempotent") {
    const auto m = m_factor(5, 2);
    const auto again = canonicalize_factor(m.edges(), 5);
    CHECK(again == m);
  }

  TEST_CASE("pair index is a bijection") {
    for (int v : {2, 6, 11}) {
      std::size_t expect = 0;
      for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
          CHECK(pair_index({a, b}, v) == expect);
          CHECK(pair_from_index(expect, v) == Edge{a, b});
          ++expect;
        }
      CHECK(expect == pair_count(v));
    }
  }

  TEST_CASE("lambda copies of the K4 matchings validate") {
    const MultiFactorization mf(2, 3, copies(k4_matchings(), 3));
    const auto rep = validate_factorization(mf);
    CHECK(rep.valid);
    CHECK(rep.discrepancies.empty());
    CHECK(oracle::is_factorization(mf));
  }

  TEST_CASE("one factor removed leaves two edges short") {
    auto fs = copies(k4_matchings(), 3);
    fs.pop_back();
    const MultiFactorization mf(2, 3, fs);
    const auto rep = validate_factorization(mf);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.discrepancies.size() == 2);
    for (const auto &d : rep.discrepancies) {
      CHECK(d.observed == 2);
      CHECK(d.expected == 3);
    }
    CHECK_FALSE(oracle::is_factorization(mf));
  }

  TEST_CASE("field orbit validates, cross-checked by naive pair counts") {
    const auto mf = agl_orbit_factorization(field_ctx(5, 1));
    CHECK(mf.n() == 3);
    CHECK(mf.lambda() == 2);
    CHECK(mf.size() == 10);
    CHECK(validate_factorization(mf).valid);
    CHECK(oracle::is_factorization(mf));
  }

  TEST_CASE("simplicity") {
    const MultiFactorization twice(2, 2, copies(k4_matchings(), 2));
    const auto s = is_simple(twice);
    CHECK_FALSE(s.simple);
    CHECK(s.repeated.size() == 3);
    for (const auto &[f, k] : s.repeated)
      CHECK(k == 2);

    const auto t3 = agl_orbit_factorization(field_ctx(5, 1));
    CHECK(is_simple(t3).simple);
    CHECK(is_simple(t3).repeated.empty());
    CHECK_FALSE(oracle::has_repeat(t3.factors()));

    const auto c = construct(5, 3);
    const auto rep = is_simple(c.mf);
    CHECK_FALSE(rep.simple);
    const auto m3 = m_factor(5, 3);
    bool saw = false;
    for (const auto &[f, k] : rep.repeated)
      if (f == m3) {
        saw = true;
        CHECK(k == 3);
      }
    CHECK(saw);
  }

  TEST_CASE("edge multiplicity table") {
    const MultiFactorization lucas(2, 1, lucas_factorization(4));
    const auto t = edge_multiplicity_table(lucas);
    for (int c : t.counts())
      CHECK(c == 1);

    const auto f = m_factor(3, 1);
    const EdgeMultiplicity twice(6, std::vector<OneFactor>{f, f});
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        CHECK(twice.count({u, v}) == (f.contains({u, v}) ? 2 : 0));

    const auto c = construct(5, 3);
    const auto naive = oracle::pair_counts(c.mf.factors());
    const auto table = edge_multiplicity_table(c.mf);
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v) {
        CHECK(table.count({u, v}) == 3);
        CHECK(naive.at({u, v}) == 3);
      }
  }

  TEST_CASE("factorization keeps a sorted multiset") {
    auto fs = copies(k4_matchings(), 2);
    std::reverse(fs.begin(), fs.end());
    const MultiFactorization mf(2, 2, fs);
    CHECK(std::is_sorted(mf.factors().begin(), mf.factors().end()));
    CHECK(mf.expected_size() == 6);
  }
}
