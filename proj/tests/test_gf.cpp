#include "doctest.h"

#include <set>

#include "onefact/field.hpp"
#include "onefact/verify.hpp"
#include "oracle.hpp"

using namespace onefact;

namespace {

const std::vector<std::pair<int, int>> kFields = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1},
                                                  {13, 1}, {5, 2}, {3, 3}};

int power(int p, int m) {
  int q = 1;
  for (int i = 0; i < m; ++i)
    q *= p;
  return q;
}

// base factor straight from the definition of the A_j
std::set<oracle::Pair> base_oracle(int p, int m, const oracle::Poly &modulus) {
  const int q = power(p, m);
  std::set<oracle::Pair> out{{0, q}};
  for (int j = 0; j < m; ++j) {
    // v^j is the monomial x^j, reduced when j >= m (never here)
    const int tails = power(p, m - j - 1);
    for (int t = 0; t < tails; ++t)
      for (int i = 1; i <= (p - 1) / 2; ++i) {
        oracle::Poly lo(static_cast<std::size_t>(m), 0), hi(static_cast<std::size_t>(m), 0);
        lo[static_cast<std::size_t>(j)] = 2 * i - 1;
        hi[static_cast<std::size_t>(j)] = 2 * i;
        int rest = t;
        for (int k = j + 1; k < m; ++k, rest /= p) {
          lo[static_cast<std::size_t>(k)] = rest % p;
          hi[static_cast<std::size_t>(k)] = rest % p;
        }
        out.insert(oracle::ordered(oracle::encode(oracle::poly_mod(lo, modulus, p), p),
                                   oracle::encode(oracle::poly_mod(hi, modulus, p), p)));
      }
  }
  return out;
}

} // namespace

TEST_SUITE("gf") {
  TEST_CASE("modulus choice") {
    const auto f31 = field_ctx(3, 1);
    CHECK(f31.modulus() == std::vector<int>{1, 1});  // x - 2
    CHECK(f31.generator() == 2);
    const auto f32 = field_ctx(3, 2);
    CHECK(f32.modulus() == std::vector<int>{2, 1, 1});  // x^2 + x + 2
    CHECK(f32.generator() == 3);                        // the residue of x
    CHECK(field_ctx(5, 1).generator() == 2);

    // x^2 + 1 is irreducible over Z_3 but its root has order 4
    CHECK(oracle::order_of_x({1, 0, 1}, 3) == 4);
    CHECK_FALSE(is_primitive_polynomial(3, {1, 0, 1}));
    CHECK(is_primitive_polynomial(3, {2, 1, 1}));

    for (auto [p, m] : kFields) {
      const auto ctx = field_ctx(p, m);
      CHECK_MESSAGE(ctx.modulus() == oracle::smallest_primitive(p, m), "p=" << p << " m=" << m);
      CHECK(ctx.element_order(ctx.generator()) == ctx.order() - 1);
    }
  }

  TEST_CASE("field errors") {
    CHECK_CODE(field_ctx(2, 3), ErrorCode::EvenP);
    CHECK_CODE(field_ctx(9, 1), ErrorCode::NotPrime);
    CHECK_CODE(field_ctx(1, 1), ErrorCode::NotPrime);
    CHECK_CODE(field_ctx(3, 0), ErrorCode::InvalidArgument);
    CHECK_CODE(field_ctx(5, 1).inv(0), ErrorCode::DivisionByZero);
  }

  TEST_CASE("arithmetic against schoolbook polynomials") {
    const auto f32 = field_ctx(3, 2);
    const int v = f32.generator();
    CHECK(f32.mul(v, v) == f32.encode({1, 2}));  // 2v + 1
    CHECK(field_ctx(5, 1).inv(2) == 3);

    for (auto [p, m] : kFields) {
      const auto ctx = field_ctx(p, m);
      const int q = ctx.order();
      for (int x = 0; x < q; ++x) {
        CHECK(ctx.add(x, ctx.neg(x)) == 0);
        CHECK(ctx.encode(ctx.coeffs(x)) == x);
        if (x)
          CHECK(ctx.mul(x, ctx.inv(x)) == 1);
        for (int y = 0; y < q; y += (q > 30 ? 3 : 1)) {
          const auto px = oracle::decode(x, p, m), py = oracle::decode(y, p, m);
          const int prod = oracle::encode(oracle::poly_mul(px, py, ctx.modulus(), p), p);
          CHECK(ctx.mul(x, y) == prod);
          CHECK(ctx.mul_reduce(x, y) == prod);
          oracle::Poly sum(static_cast<std::size_t>(m), 0);
          for (int i = 0; i < m; ++i) {
            const int a = i < static_cast<int>(px.size()) ? px[static_cast<std::size_t>(i)] : 0;
            const int b = i < static_cast<int>(py.size()) ? py[static_cast<std::size_t>(i)] : 0;
            sum[static_cast<std::size_t>(i)] = (a + b) % p;
          }
          CHECK(ctx.add(x, y) == oracle::encode(oracle::trim(sum), p));
          CHECK(ctx.sub(ctx.add(x, y), y) == x);
        }
      }
      CHECK(ctx.pow(ctx.generator(), q - 1) == 1);
    }
  }

  TEST_CASE("base factor") {
    auto edges = [](const OneFactor &f) {
      std::set<oracle::Pair> out;
      for (const auto &e : f.edges())
        out.insert({e.u, e.v});
      return out;
    };
    CHECK(edges(base_factor(field_ctx(3, 1))) == std::set<oracle::Pair>{{0, 3}, {1, 2}});
    CHECK(edges(base_factor(field_ctx(5, 1))) == std::set<oracle::Pair>{{0, 5}, {1, 2}, {3, 4}});
    // {[0,inf]} + {[1,2],[1+v,2+v],[1+2v,2+2v]} + {[v,2v]}, v encoded as 3
    CHECK(edges(base_factor(field_ctx(3, 2))) ==
          std::set<oracle::Pair>{{0, 9}, {1, 2}, {4, 5}, {7, 8}, {3, 6}});

    for (auto [p, m] : kFields) {
      const auto ctx = field_ctx(p, m);
      const auto f = base_factor(ctx);
      CHECK(f.size() == static_cast<std::size_t>((ctx.order() + 1) / 2));
      CHECK(oracle::perfect_matching(oracle::edges_of(f), ctx.order() + 1));
      CHECK(edges(f) == base_oracle(p, m, ctx.modulus()));
      // every A_j edge has difference +-v^j
      std::map<int, int> by_diff;
      for (const auto &e : f.edges())
        if (e.v != ctx.order()) {
          const int d = ctx.sub(e.v, e.u);
          const int vj = std::min(d, ctx.neg(d));
          ++by_diff[vj];
        }
      int j = 0;
      for (int vj = 1; j < m; vj = ctx.mul(vj, ctx.generator()), ++j) {
        const int key = std::min(vj, ctx.neg(vj));
        CHECK(by_diff[key] == power(p, m - j - 1) * (p - 1) / 2);
      }
    }
  }

  TEST_CASE("affine group") {
    const auto ctx = field_ctx(3, 2);
    const auto g = affine_group(ctx);
    CHECK(g.size() == 72);
    // closed under composition
    std::set<std::pair<int, int>> maps;
    for (const auto &m : g)
      maps.insert({m.b, m.a});
    for (const auto &f : g)
      for (const auto &h : g) {
        // x -> (x f.b + f.a) h.b + h.a
        const std::pair<int, int> comp{ctx.mul(f.b, h.b), ctx.add(ctx.mul(f.a, h.b), h.a)};
        CHECK(maps.contains(comp));
      }
    for (const auto &m : g)
      CHECK(m.apply(ctx, ctx.order()) == ctx.order());
  }

  TEST_CASE("orbit factorizations") {
    const auto t3 = agl_orbit_factorization(field_ctx(3, 1));
    CHECK(t3.lambda() == 1);
    CHECK(t3.size() == 3);
    CHECK(oracle::is_factorization(t3));

    for (auto [p, m] : kFields) {
      const auto ctx = field_ctx(p, m);
      const int q = ctx.order();
      const auto mf = agl_orbit_factorization(ctx);
      CHECK(mf.n() == (q + 1) / 2);
      CHECK(mf.size() == static_cast<std::size_t>(q * (q - 1) / 2));
      CHECK(oracle::is_factorization(mf));
      CHECK_FALSE(oracle::has_repeat(mf.factors()));
      CHECK(agl_stabilizer_order(ctx) == 2);
      // orbit-stabilizer by hand
      int fixing = 0;
      const auto f = base_factor(ctx);
      for (const auto &g : affine_group(ctx))
        fixing += g.apply(ctx, f) == f;
      CHECK(fixing == 2);
    }
  }

  TEST_CASE("small orbit factorizations are indecomposable") {
    for (int p : {5, 7}) {
      const auto mf = agl_orbit_factorization(field_ctx(p, 1));
      CHECK_FALSE(oracle::decomposable(mf));
      CHECK(find_subfactorization(mf).outcome == Outcome::ProvenNone);
    }
    const auto nine = agl_orbit_factorization(field_ctx(3, 2));
    CHECK(find_subfactorization(nine, std::nullopt, {0, 120}).outcome != Outcome::Found);
    CHECK_FALSE(oracle::decomposable(nine));
  }
}
