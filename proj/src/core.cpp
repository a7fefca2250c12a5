#include "onefact/core.hpp"

#include <algorithm>
#include <sstream>

namespace onefact {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::NotAMatching: return "NotAMatching";
  case ErrorCode::WrongSize: return "WrongSize";
  case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
  case ErrorCode::OddOrder: return "OddOrder";
  case ErrorCode::EvenOrder: return "EvenOrder";
  case ErrorCode::NotAPermutation: return "NotAPermutation";
  case ErrorCode::NotCrossOnly: return "NotCrossOnly";
  case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  case ErrorCode::StabilizerNotTrivial: return "StabilizerNotTrivial";
  case ErrorCode::ProfileSumInvalid: return "ProfileSumInvalid";
  case ErrorCode::Infeasible: return "Infeasible";
  case ErrorCode::NoneFound: return "NoneFound";
  case ErrorCode::OrderingFailed: return "OrderingFailed";
  case ErrorCode::OutOfDomain: return "OutOfDomain";
  case ErrorCode::NoFamily: return "NoFamily";
  case ErrorCode::StarterSearchFailed: return "StarterSearchFailed";
  case ErrorCode::STooSmall: return "STooSmall";
  case ErrorCode::NotPrime: return "NotPrime";
  case ErrorCode::EvenP: return "EvenP";
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::HypothesesUnmet: return "HypothesesUnmet";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::FixtureError: return "FixtureError";
  }
  return "Unknown";
}

Edge make_edge(VertexId a, VertexId b) {
  if (a == b)
    throw Error(ErrorCode::NotAMatching, "loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Edge pair_from_index(std::size_t index, int vertex_count) {
  VertexId u = 0;
  std::size_t row = static_cast<std::size_t>(vertex_count - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++u;
  }
  return Edge{u, static_cast<VertexId>(u + 1 + static_cast<VertexId>(index))};
}

std::vector<VertexId> OneFactor::mate() const {
  std::vector<VertexId> out(static_cast<std::size_t>(vertex_count()), -1);
  for (const auto &e : edges_) {
    out[static_cast<std::size_t>(e.u)] = e.v;
    out[static_cast<std::size_t>(e.v)] = e.u;
  }
  return out;
}

bool OneFactor::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string OneFactor::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i)
      os << ',';
    os << '[' << edges_[i].u << ',' << edges_[i].v << ']';
  }
  os << '}';
  return os.str();
}

OneFactor canonicalize_factor(std::span<const Edge> edges, int n) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const int nv = 2 * n;
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto &e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "] outside [0," + std::to_string(nv) + ")");
    out.push_back(make_edge(e.u, e.v));
  }
  if (out.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::WrongSize, "expected " + std::to_string(n) + " edges, got " +
                                          std::to_string(out.size()));
  std::vector<bool> seen(static_cast<std::size_t>(nv), false);
  for (const auto &e : out) {
    for (VertexId x : {e.u, e.v}) {
      if (seen[static_cast<std::size_t>(x)])
        throw Error(ErrorCode::NotAMatching, "vertex " + std::to_string(x) + " repeated");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  std::sort(out.begin(), out.end());
  OneFactor f;
  f.edges_ = std::move(out);
  return f;
}

OneFactor factor_from_canonical(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  OneFactor f;
  f.edges_ = std::move(edges);
  return f;
}

const char *model_kind_name(ModelKind kind) {
  switch (kind) {
  case ModelKind::Cyclic: return "cyclic";
  case ModelKind::Field: return "field";
  case ModelKind::Plain: return "plain";
  }
  return "plain";
}

MultiFactorization::MultiFactorization(int n, int lambda, std::vector<OneFactor> factors,
                                       ModelInfo model)
    : n_(n), lambda_(lambda), factors_(std::move(factors)), model_(std::move(model)) {
  if (n_ < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (lambda_ < 1)
    throw Error(ErrorCode::InvalidArgument, "lambda must be >= 1");
  std::sort(factors_.begin(), factors_.end());
}

EdgeMultiplicity::EdgeMultiplicity(int vertex_count, std::span<const OneFactor> factors)
    : vertex_count_(vertex_count), counts_(pair_count(vertex_count), 0) {
  for (const auto &f : factors)
    for (const auto &e : f.edges())
      if (e.u >= 0 && e.u < e.v && e.v < vertex_count_)
        ++counts_[pair_index(e, vertex_count_)];
}

std::vector<std::pair<Edge, int>> EdgeMultiplicity::deviations(int expected) const {
  std::vector<std::pair<Edge, int>> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] != expected)
      out.emplace_back(pair_from_index(i, vertex_count_), counts_[i]);
  return out;
}

std::map<Edge, int> EdgeMultiplicity::as_map() const {
  std::map<Edge, int> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out.emplace(pair_from_index(i, vertex_count_), counts_[i]);
  return out;
}

EdgeMultiplicity edge_multiplicity_table(const MultiFactorization &mf) {
  return EdgeMultiplicity(mf.vertex_count(), mf.factors());
}

ValidityReport validate_factorization(const MultiFactorization &mf) {
  ValidityReport report;
  const int nv = mf.vertex_count();
  for (std::size_t i = 0; i < mf.factors().size(); ++i) {
    const auto &f = mf.factors()[i];
    if (f.size() != static_cast<std::size_t>(mf.n())) {
      report.factor_errors.push_back({i, "factor has " + std::to_string(f.size()) +
                                             " edges, expected " + std::to_string(mf.n())});
      continue;
    }
    std::vector<bool> seen(static_cast<std::size_t>(nv), false);
    for (const auto &e : f.edges()) {
      if (e.u < 0 || e.v >= nv || e.u >= e.v) {
        report.factor_errors.push_back({i, "edge outside vertex range"});
        break;
      }
      if (seen[static_cast<std::size_t>(e.u)] || seen[static_cast<std::size_t>(e.v)]) {
        report.factor_errors.push_back({i, "not a matching"});
        break;
      }
      seen[static_cast<std::size_t>(e.u)] = seen[static_cast<std::size_t>(e.v)] = true;
    }
  }
  const auto table = edge_multiplicity_table(mf);
  for (const auto &[edge, count] : table.deviations(mf.lambda()))
    report.discrepancies.push_back({edge, count, mf.lambda()});
  if (report.factor_errors.empty() && report.discrepancies.empty() &&
      mf.size() != mf.expected_size())
    report.factor_errors.push_back({mf.size(), "factor count " + std::to_string(mf.size()) +
                                                   " != lambda(2n-1) = " +
                                                   std::to_string(mf.expected_size())});
  report.valid = report.discrepancies.empty() && report.factor_errors.empty();
  return report;
}

SimplicityReport is_simple(const MultiFactorization &mf) {
  SimplicityReport report;
  const auto &fs = mf.factors();
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i + 1;
    while (j < fs.size() && fs[j] == fs[i])
      ++j;
    if (j - i >= 2) {
      report.simple = false;
      report.repeated.emplace_back(fs[i], static_cast<int>(j - i));
    }
    i = j;
  }
  return report;
}

} // namespace onefact
