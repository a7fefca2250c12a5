#pragma once

// Vertices, edges, 1-factors and multisets of 1-factors on 2n labelled
// vertices, plus the validity and simplicity checks.
//
// Vertex ids are dense integers in [0, 2n). Two encodings are in use:
//   cyclic model  a_j (a in Z_n, j in Z_2)      -> a + n*j
//   field model   sum a_i v^i over GF(p^m)      -> sum a_i p^i, infinity -> p^m

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onefact/error.hpp"

namespace onefact {

using VertexId = std::int32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const Edge &) const = default;
};

/// Edge with endpoints in canonical (ascending) order. Throws NotAMatching on a loop.
Edge make_edge(VertexId a, VertexId b);

/// Index of the unordered pair {u, v} (u < v) among the C(vertex_count, 2) pairs.
inline std::size_t pair_index(Edge e, int vertex_count) {
  const auto u = static_cast<std::size_t>(e.u);
  const auto v = static_cast<std::size_t>(e.v);
  const auto nv = static_cast<std::size_t>(vertex_count);
  return u * nv - u * (u + 1) / 2 + (v - u - 1);
}

inline std::size_t pair_count(int vertex_count) {
  const auto nv = static_cast<std::size_t>(vertex_count);
  return nv * (nv - 1) / 2;
}

Edge pair_from_index(std::size_t index, int vertex_count);

/// A perfect matching in canonical form: n edges, each (u < v), sorted.
class OneFactor {
public:
  OneFactor() = default;

  const std::vector<Edge> &edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  int vertex_count() const noexcept { return 2 * static_cast<int>(edges_.size()); }

  /// Partner of every vertex, indexed by vertex id.
  std::vector<VertexId> mate() const;

  bool contains(Edge e) const;

  auto operator<=>(const OneFactor &) const = default;

  std::string to_string() const;

private:
  friend OneFactor canonicalize_factor(std::span<const Edge>, int);
  friend OneFactor factor_from_canonical(std::vector<Edge>);
  std::vector<Edge> edges_;
};

/// Checks that `edges` is a perfect matching on 2n vertices and returns its
/// canonical form. Endpoint order and edge order are irrelevant.
/// Errors: VertexOutOfRange, WrongSize, NotAMatching.
OneFactor canonicalize_factor(std::span<const Edge> edges, int n);

/// Builds a factor from edges already known to form a perfect matching.
/// Only sorts; used on hot paths inside constructions.
OneFactor factor_from_canonical(std::vector<Edge> edges);

enum class ModelKind { Cyclic, Field, Plain };

const char *model_kind_name(ModelKind kind);

/// Model block: how vertex ids are to be read, and for cyclic constructions
/// the starter permutations that generated the factorization.
struct ModelInfo {
  ModelKind kind = ModelKind::Plain;
  // field model
  int p = 0;
  int m = 0;
  std::vector<int> modulus;  // constant term first, monic
  // cyclic model
  std::vector<std::vector<int>> starters;
  std::optional<int> joined_orbit;  // b for odd n

  bool operator==(const ModelInfo &) const = default;
};

/// A multiset of 1-factors of lambda*K_{2n}, kept as a sorted list with repeats.
class MultiFactorization {
public:
  MultiFactorization(int n, int lambda, std::vector<OneFactor> factors,
                     ModelInfo model = {});

  int n() const noexcept { return n_; }
  int lambda() const noexcept { return lambda_; }
  int vertex_count() const noexcept { return 2 * n_; }
  const std::vector<OneFactor> &factors() const noexcept { return factors_; }
  const ModelInfo &model() const noexcept { return model_; }
  std::size_t size() const noexcept { return factors_.size(); }

  /// Number of factors a valid factorization has: lambda(2n-1).
  std::size_t expected_size() const noexcept {
    return static_cast<std::size_t>(lambda_) * static_cast<std::size_t>(2 * n_ - 1);
  }

  bool operator==(const MultiFactorization &) const = default;

private:
  int n_;
  int lambda_;
  std::vector<OneFactor> factors_;
  ModelInfo model_;
};

/// Exact multiplicity of every vertex pair over a multiset of factors.
class EdgeMultiplicity {
public:
  EdgeMultiplicity(int vertex_count, std::span<const OneFactor> factors);

  int vertex_count() const noexcept { return vertex_count_; }
  int count(Edge e) const { return counts_[pair_index(e, vertex_count_)]; }
  const std::vector<int> &counts() const noexcept { return counts_; }

  /// Pairs whose multiplicity differs from `expected`.
  std::vector<std::pair<Edge, int>> deviations(int expected) const;

  std::map<Edge, int> as_map() const;

private:
  int vertex_count_;
  std::vector<int> counts_;
};

EdgeMultiplicity edge_multiplicity_table(const MultiFactorization &mf);

struct EdgeDiscrepancy {
  Edge edge;
  int observed = 0;
  int expected = 0;
};

struct FactorError {
  std::size_t index = 0;
  std::string reason;
};

struct ValidityReport {
  bool valid = false;
  std::vector<EdgeDiscrepancy> discrepancies;
  std::vector<FactorError> factor_errors;
};

ValidityReport validate_factorization(const MultiFactorization &mf);

struct SimplicityReport {
  bool simple = true;
  std::vector<std::pair<OneFactor, int>> repeated;  // factor and multiplicity >= 2
};

SimplicityReport is_simple(const MultiFactorization &mf);

} // namespace onefact
