#pragma once

// GF(p^m) arithmetic on integer-encoded elements (sum a_i p^i) and the
// affine-group orbit construction of a simple 1-factorization of
// ((q-1)/2) K_{q+1}, q = p^m odd.

#include <cstdint>
#include <vector>

#include "onefact/core.hpp"

namespace onefact {

using FieldElement = int;  // encoded as sum a_i p^i, 0 <= value < p^m

class FieldCtx {
public:
  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  int order() const noexcept { return q_; }
  /// Monic modulus, constant term first (size m + 1).
  const std::vector<int> &modulus() const noexcept { return modulus_; }
  /// The residue class of x, a generator of the multiplicative group.
  FieldElement generator() const noexcept { return exp_[1 % (q_ - 1)]; }

  std::vector<int> coeffs(FieldElement x) const;
  FieldElement encode(const std::vector<int> &coeffs) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  /// Schoolbook multiplication with reduction by the modulus; reference path for mul.
  FieldElement mul_reduce(FieldElement x, FieldElement y) const;
  /// Errors: DivisionByZero.
  FieldElement inv(FieldElement x) const;
  /// Errors: DivisionByZero (0 to a negative power).
  FieldElement pow(FieldElement x, long long e) const;

  /// Multiplicative order of a nonzero element.
  long long element_order(FieldElement x) const;

private:
  friend FieldCtx field_ctx(int p, int m);
  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_;  // exp_[i] = v^i, i < q-1
  std::vector<int> log_;  // log_[x] for x != 0
};

/// Modulus: for m = 1, x - g with g the smallest primitive root; otherwise the
/// primitive monic polynomial whose (c_{m-1}, ..., c_0) is lexicographically least.
/// Errors: NotPrime, EvenP, InvalidArgument (m < 1 or p^m too large).
FieldCtx field_ctx(int p, int m);

/// True iff x has multiplicative order p^m - 1 modulo `modulus` (which forces irreducibility).
bool is_primitive_polynomial(int p, const std::vector<int> &modulus);

/// x -> x*b + a on field elements, infinity (id p^m) fixed.
struct AffineMap {
  FieldElement b = 1;
  FieldElement a = 0;

  VertexId apply(const FieldCtx &ctx, VertexId x) const;
  OneFactor apply(const FieldCtx &ctx, const OneFactor &f) const;
};

/// {[0, inf]} together with A_0, ..., A_{m-1}.
OneFactor base_factor(const FieldCtx &ctx);

/// Every map of AGL(1, p^m), b-major then a.
std::vector<AffineMap> affine_group(const FieldCtx &ctx);

/// Number of affine maps fixing the base factor.
int agl_stabilizer_order(const FieldCtx &ctx);

/// Distinct images of the base factor, lambda = (p^m - 1)/2, n = (p^m + 1)/2.
MultiFactorization agl_orbit_factorization(const FieldCtx &ctx);

} // namespace onefact
