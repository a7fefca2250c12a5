#pragma once

// The Z_n x Z_2 model. H = Z_n acts by adding h to the Z_n coordinate of
// every vertex; M_a is the H-orbit of the cross edge [0_0, a_1].

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onefact/core.hpp"

namespace onefact {

/// Id of vertex a_side (a in Z_n, side in {0,1}).
inline VertexId cyclic_vertex(int n, int a, int side) {
  const int r = ((a % n) + n) % n;
  return static_cast<VertexId>(r + n * side);
}

/// Adds h to the Z_n coordinate of every vertex of f.
OneFactor shift_factor(const OneFactor &f, int n, int h);

/// M_a = {[x_0, (x+a)_1] : x in Z_n}.
OneFactor m_factor(int n, int a);

/// Lucas' 1-factorization of K_n (n even) on Z_{n-1} + {inf}, inf labelled n-1.
/// Element i of the result is L_i = L_0 + i. Errors: OddOrder.
std::vector<OneFactor> lucas_factorization(int n);

/// Near 1-factorization of K_n (n odd): element i misses vertex i.
/// Each near factor is a sorted edge list. Errors: EvenOrder.
std::vector<std::vector<Edge>> near_one_factorization(int n);

/// lambda copies of L_i(V_0) + L_sigma(i)(V_1), i in Z_{n-1}. n even.
/// sigma defaults to the identity. Errors: OddOrder, NotAPermutation.
std::vector<OneFactor> join_even(int n, int lambda,
                                 std::optional<std::vector<int>> sigma = std::nullopt);

/// lambda copies of L*_i(V_0) + L*_{i+b}(V_1) + [i_0, (i+b)_1], i in Z_n. n odd.
/// Errors: EvenOrder.
std::vector<OneFactor> join_odd(int n, int lambda, int b);

/// Distinct factors of {F + h : h in Z_n}, sorted.
std::vector<OneFactor> h_orbit(const OneFactor &f, int n);

/// |{h : F + h = F}|.
int h_stabilizer_order(const OneFactor &f, int n);

/// t[a] = number of edges in M_a, for a cross-edge factor.
class DifferenceProfile {
public:
  DifferenceProfile() = default;
  explicit DifferenceProfile(int n) : t_(static_cast<std::size_t>(n), 0) {}
  DifferenceProfile(int n, const std::map<int, int> &entries);

  int n() const noexcept { return static_cast<int>(t_.size()); }
  int operator[](int a) const { return t_[static_cast<std::size_t>(a)]; }
  int &operator[](int a) { return t_[static_cast<std::size_t>(a)]; }
  const std::vector<int> &values() const noexcept { return t_; }

  int total() const;
  /// sum a*t_a mod n; zero for every realizable profile.
  int displacement_sum() const;
  int max_value() const;

  std::map<int, int> nonzero() const;
  std::string to_string() const;  // "{0:3,2:1,3:1}"

  auto operator<=>(const DifferenceProfile &) const = default;

private:
  std::vector<int> t_;
};

/// A 1-factor made of cross edges only, stored as the permutation pi with
/// F = {[x_0, pi(x)_1]}.
class CrossFactor {
public:
  CrossFactor() = default;
  /// Errors: NotAPermutation.
  explicit CrossFactor(std::vector<int> pi);

  /// Errors: NotCrossOnly, WrongSize.
  static CrossFactor from_factor(const OneFactor &f, int n);

  int n() const noexcept { return static_cast<int>(pi_.size()); }
  const std::vector<int> &permutation() const noexcept { return pi_; }

  OneFactor to_factor() const;
  CrossFactor shifted(int h) const;
  DifferenceProfile profile() const;
  int stabilizer_order() const;

  auto operator<=>(const CrossFactor &) const = default;

private:
  std::vector<int> pi_;
};

DifferenceProfile profile(const CrossFactor &f);
/// Errors: NotCrossOnly.
DifferenceProfile profile(const OneFactor &f, int n);

} // namespace onefact
