#include "onefact/field.hpp"

#include <algorithm>
#include <set>

namespace onefact {

namespace {

constexpr long long kMaxOrder = 1 << 22;

using Poly = std::vector<int>;  // constant term first

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::vector<long long> prime_factors(long long x) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0)
        x /= d;
    }
  if (x > 1)
    out.push_back(x);
  return out;
}

// a * b mod (monic f), coefficients mod p; a, b have degree < deg f
Poly mulmod(const Poly &a, const Poly &b, const Poly &f, int p) {
  const std::size_t m = f.size() - 1;
  std::vector<long long> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (a[i])
      for (std::size_t j = 0; j < m; ++j)
        prod[i + j] = (prod[i + j] + static_cast<long long>(a[i]) * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > m;) {
    const long long c = prod[k];
    if (!c)
      continue;
    // x^k = x^{k-m} * x^m and x^m = -(f_0 + ... + f_{m-1} x^{m-1})
    for (std::size_t i = 0; i < m; ++i)
      prod[k - m + i] = ((prod[k - m + i] - c * f[i]) % p + p) % p;
    prod[k] = 0;
  }
  Poly out(m);
  for (std::size_t i = 0; i < m; ++i)
    out[i] = static_cast<int>(prod[i]);
  return out;
}

Poly powmod(Poly base, long long e, const Poly &f, int p) {
  Poly r(f.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1)
      r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly x_mod(const Poly &f, int p) {
  const std::size_t m = f.size() - 1;
  Poly x(m, 0);
  if (m == 1)
    x[0] = ((-f[0]) % p + p) % p;
  else
    x[1] = 1;
  return x;
}

} // namespace

bool is_primitive_polynomial(int p, const std::vector<int> &modulus) {
  if (modulus.size() < 2 || modulus.back() != 1 || modulus[0] % p == 0)
    return false;
  const int m = static_cast<int>(modulus.size()) - 1;
  long long q = 1;
  for (int i = 0; i < m; ++i)
    q *= p;
  const Poly x = x_mod(modulus, p);
  Poly one(static_cast<std::size_t>(m), 0);
  one[0] = 1;
  if (powmod(x, q - 1, modulus, p) != one)
    return false;
  for (long long r : prime_factors(q - 1))
    if (powmod(x, (q - 1) / r, modulus, p) == one)
      return false;
  return true;
}

FieldCtx field_ctx(int p, int m) {
  if (p == 2)
    throw Error(ErrorCode::EvenP, "p must be odd");
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1)
    throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorCode::InvalidArgument, "p^m too large");
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.q_ = static_cast<int>(q);

  if (m == 1) {
    for (int g = 1; g < p; ++g) {
      const Poly f{(p - g) % p, 1};
      if (is_primitive_polynomial(p, f)) {
        ctx.modulus_ = f;
        break;
      }
    }
  } else {
    // (c_{m-1}, ..., c_0) counted upward in base p
    Poly f(static_cast<std::size_t>(m + 1), 0);
    f[static_cast<std::size_t>(m)] = 1;
    for (long long code = 0; code < q; ++code) {
      long long c = code;
      for (int i = 0; i < m; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      if (is_primitive_polynomial(p, f)) {
        ctx.modulus_ = f;
        break;
      }
    }
  }
  if (ctx.modulus_.empty())
    throw Error(ErrorCode::InvalidArgument, "no primitive polynomial found");

  ctx.exp_.resize(static_cast<std::size_t>(q - 1));
  ctx.log_.assign(static_cast<std::size_t>(q), -1);
  const Poly x = x_mod(ctx.modulus_, p);
  Poly cur(static_cast<std::size_t>(m), 0);
  cur[0] = 1;
  for (long long i = 0; i < q - 1; ++i) {
    const int enc = ctx.encode(cur);
    ctx.exp_[static_cast<std::size_t>(i)] = enc;
    ctx.log_[static_cast<std::size_t>(enc)] = static_cast<int>(i);
    cur = mulmod(cur, x, ctx.modulus_, p);
  }
  return ctx;
}

std::vector<int> FieldCtx::coeffs(FieldElement x) const {
  std::vector<int> out(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)] = x % p_;
    x /= p_;
  }
  return out;
}

FieldElement FieldCtx::encode(const std::vector<int> &c) const {
  int out = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    out = out * p_ + ((c[i] % p_) + p_) % p_;
  return out;
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  int out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FieldCtx::neg(FieldElement x) const {
  int out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FieldCtx::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FieldCtx::mul(FieldElement x, FieldElement y) const {
  if (x == 0 || y == 0)
    return 0;
  const int e = (log_[static_cast<std::size_t>(x)] + log_[static_cast<std::size_t>(y)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

FieldElement FieldCtx::mul_reduce(FieldElement x, FieldElement y) const {
  return encode(mulmod(coeffs(x), coeffs(y), modulus_, p_));
}

FieldElement FieldCtx::inv(FieldElement x) const {
  if (x == 0)
    throw Error(ErrorCode::DivisionByZero, "0 has no inverse");
  const int e = (q_ - 1 - log_[static_cast<std::size_t>(x)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

FieldElement FieldCtx::pow(FieldElement x, long long e) const {
  if (x == 0) {
    if (e < 0)
      throw Error(ErrorCode::DivisionByZero, "0 to a negative power");
    return e == 0 ? 1 : 0;
  }
  const long long n = q_ - 1;
  const long long k = ((static_cast<long long>(log_[static_cast<std::size_t>(x)]) * (e % n)) % n + n) % n;
  return exp_[static_cast<std::size_t>(k)];
}

long long FieldCtx::element_order(FieldElement x) const {
  if (x == 0)
    throw Error(ErrorCode::DivisionByZero, "0 has no multiplicative order");
  long long k = 1;
  for (FieldElement y = x; y != 1; y = mul(y, x))
    ++k;
  return k;
}

VertexId AffineMap::apply(const FieldCtx &ctx, VertexId x) const {
  if (x == ctx.order())
    return x;
  return ctx.add(ctx.mul(x, b), a);
}

OneFactor AffineMap::apply(const FieldCtx &ctx, const OneFactor &f) const {
  std::vector<Edge> edges;
  edges.reserve(f.size());
  for (const auto &e : f.edges())
    edges.push_back(make_edge(apply(ctx, e.u), apply(ctx, e.v)));
  return factor_from_canonical(std::move(edges));
}

OneFactor base_factor(const FieldCtx &ctx) {
  const int p = ctx.p();
  const int q = ctx.order();
  std::vector<Edge> edges{make_edge(0, q)};
  int place = 1;  // p^j
  for (int j = 0; j < ctx.m(); ++j, place *= p) {
    // every tail in coordinates j+1..m-1 is a multiple of p^{j+1} below q
    for (int tail = 0; tail < q; tail += place * p)
      for (int i = 1; i <= (p - 1) / 2; ++i)
        edges.push_back(make_edge((2 * i - 1) * place + tail, 2 * i * place + tail));
  }
  return canonicalize_factor(edges, (q + 1) / 2);
}

std::vector<AffineMap> affine_group(const FieldCtx &ctx) {
  std::vector<AffineMap> out;
  out.reserve(static_cast<std::size_t>(ctx.order()) * static_cast<std::size_t>(ctx.order() - 1));
  for (int b = 1; b < ctx.order(); ++b)
    for (int a = 0; a < ctx.order(); ++a)
      out.push_back({b, a});
  return out;
}

int agl_stabilizer_order(const FieldCtx &ctx) {
  const auto f = base_factor(ctx);
  int count = 0;
  for (const auto &phi : affine_group(ctx))
    if (phi.apply(ctx, f) == f)
      ++count;
  return count;
}

MultiFactorization agl_orbit_factorization(const FieldCtx &ctx) {
  const auto f = base_factor(ctx);
  std::set<OneFactor> orbit;
  for (const auto &phi : affine_group(ctx))
    orbit.insert(phi.apply(ctx, f));
  ModelInfo model;
  model.kind = ModelKind::Field;
  model.p = ctx.p();
  model.m = ctx.m();
  model.modulus = ctx.modulus();
  const int q = ctx.order();
  return MultiFactorization((q + 1) / 2, std::max(1, (q - 1) / 2),
                            std::vector<OneFactor>(orbit.begin(), orbit.end()), std::move(model));
}

} // namespace onefact
