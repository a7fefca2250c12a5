#include "onefact/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace onefact {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

VertexId shift_vertex(VertexId x, int n, int h) {
  const int side = x / n;
  return cyclic_vertex(n, x % n + h, side);
}

// Label of a_j in Lucas' K_n, where inf = n-1 and Z_{n-1} carries 0..n-2.
std::vector<Edge> lucas_edges(int n, int i) {
  const int q = n - 1;
  std::vector<Edge> out;
  out.push_back(make_edge(mod(i, q), q));
  for (int a = 1; a <= (q - 1) / 2; ++a)
    out.push_back(make_edge(mod(a + i, q), mod(-a + i, q)));
  std::sort(out.begin(), out.end());
  return out;
}

void place_side(std::vector<Edge> &dst, const std::vector<Edge> &src, int n, int side) {
  for (const auto &e : src)
    dst.push_back(make_edge(e.u + n * side, e.v + n * side));
}

} // namespace

OneFactor shift_factor(const OneFactor &f, int n, int h) {
  std::vector<Edge> out;
  out.reserve(f.size());
  for (const auto &e : f.edges())
    out.push_back(make_edge(shift_vertex(e.u, n, h), shift_vertex(e.v, n, h)));
  return factor_from_canonical(std::move(out));
}

OneFactor m_factor(int n, int a) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<Edge> out;
  for (int x = 0; x < n; ++x)
    out.push_back(make_edge(cyclic_vertex(n, x, 0), cyclic_vertex(n, x + a, 1)));
  return factor_from_canonical(std::move(out));
}

std::vector<OneFactor> lucas_factorization(int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorCode::OddOrder, "Lucas factorization needs even n >= 2, got " +
                                         std::to_string(n));
  std::vector<OneFactor> out;
  for (int i = 0; i < n - 1; ++i)
    out.push_back(factor_from_canonical(lucas_edges(n, i)));
  return out;
}

std::vector<std::vector<Edge>> near_one_factorization(int n) {
  if (n < 1 || n % 2 == 0)
    throw Error(ErrorCode::EvenOrder, "near 1-factorization needs odd n, got " +
                                          std::to_string(n));
  std::vector<std::vector<Edge>> out;
  for (int i = 0; i < n; ++i) {
    auto edges = lucas_edges(n + 1, i);
    std::erase_if(edges, [n](const Edge &e) { return e.v == n; });
    out.push_back(std::move(edges));
  }
  return out;
}

std::vector<OneFactor> join_even(int n, int lambda, std::optional<std::vector<int>> sigma) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorCode::OddOrder, "join_even needs even n, got " + std::to_string(n));
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 0);
  if (sigma) {
    auto sorted = *sigma;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm)
      throw Error(ErrorCode::NotAPermutation, "sigma is not a permutation of {0..n-2}");
    perm = *sigma;
  }
  const auto lucas = lucas_factorization(n);
  std::vector<OneFactor> once;
  for (int i = 0; i < n - 1; ++i) {
    std::vector<Edge> edges;
    place_side(edges, lucas[static_cast<std::size_t>(i)].edges(), n, 0);
    place_side(edges, lucas[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].edges(),
               n, 1);
    once.push_back(factor_from_canonical(std::move(edges)));
  }
  std::vector<OneFactor> out;
  for (int c = 0; c < lambda; ++c)
    out.insert(out.end(), once.begin(), once.end());
  return out;
}

std::vector<OneFactor> join_odd(int n, int lambda, int b) {
  if (n < 1 || n % 2 == 0)
    throw Error(ErrorCode::EvenOrder, "join_odd needs odd n, got " + std::to_string(n));
  const auto near = near_one_factorization(n);
  std::vector<OneFactor> once;
  for (int i = 0; i < n; ++i) {
    std::vector<Edge> edges;
    place_side(edges, near[static_cast<std::size_t>(i)], n, 0);
    place_side(edges, near[static_cast<std::size_t>(mod(i + b, n))], n, 1);
    edges.push_back(make_edge(cyclic_vertex(n, i, 0), cyclic_vertex(n, i + b, 1)));
    once.push_back(factor_from_canonical(std::move(edges)));
  }
  std::vector<OneFactor> out;
  for (int c = 0; c < lambda; ++c)
    out.insert(out.end(), once.begin(), once.end());
  return out;
}

std::vector<OneFactor> h_orbit(const OneFactor &f, int n) {
  std::vector<OneFactor> out;
  for (int h = 0; h < n; ++h)
    out.push_back(shift_factor(f, n, h));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int h_stabilizer_order(const OneFactor &f, int n) {
  int order = 0;
  for (int h = 0; h < n; ++h)
    if (shift_factor(f, n, h) == f)
      ++order;
  return order;
}

DifferenceProfile::DifferenceProfile(int n, const std::map<int, int> &entries)
    : t_(static_cast<std::size_t>(n), 0) {
  for (const auto &[a, t] : entries) {
    if (t < 0)
      throw Error(ErrorCode::InvalidArgument, "negative profile entry");
    t_[static_cast<std::size_t>(mod(a, n))] += t;
  }
}

int DifferenceProfile::total() const { return std::accumulate(t_.begin(), t_.end(), 0); }

int DifferenceProfile::displacement_sum() const {
  long long s = 0;
  for (std::size_t a = 0; a < t_.size(); ++a)
    s += static_cast<long long>(a) * t_[a];
  return n() == 0 ? 0 : static_cast<int>(s % n());
}

int DifferenceProfile::max_value() const {
  return t_.empty() ? 0 : *std::max_element(t_.begin(), t_.end());
}

std::map<int, int> DifferenceProfile::nonzero() const {
  std::map<int, int> out;
  for (std::size_t a = 0; a < t_.size(); ++a)
    if (t_[a])
      out.emplace(static_cast<int>(a), t_[a]);
  return out;
}

std::string DifferenceProfile::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto &[a, t] : nonzero()) {
    if (!first)
      os << ',';
    first = false;
    os << a << ':' << t;
  }
  os << '}';
  return os.str();
}

CrossFactor::CrossFactor(std::vector<int> pi) : pi_(std::move(pi)) {
  std::vector<bool> seen(pi_.size(), false);
  for (int y : pi_) {
    if (y < 0 || y >= n() || seen[static_cast<std::size_t>(y)])
      throw Error(ErrorCode::NotAPermutation, "cross factor needs a permutation of Z_n");
    seen[static_cast<std::size_t>(y)] = true;
  }
}

CrossFactor CrossFactor::from_factor(const OneFactor &f, int n) {
  if (f.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::WrongSize, "factor size differs from n");
  std::vector<int> pi(static_cast<std::size_t>(n), -1);
  for (const auto &e : f.edges()) {
    if (e.u >= n || e.v < n)
      throw Error(ErrorCode::NotCrossOnly, "edge [" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "] is a side edge");
    pi[static_cast<std::size_t>(e.u)] = e.v - n;
  }
  return CrossFactor(std::move(pi));
}

OneFactor CrossFactor::to_factor() const {
  std::vector<Edge> edges;
  for (int x = 0; x < n(); ++x)
    edges.push_back(Edge{x, pi_[static_cast<std::size_t>(x)] + n()});
  return factor_from_canonical(std::move(edges));
}

CrossFactor CrossFactor::shifted(int h) const {
  std::vector<int> out(pi_.size());
  for (int x = 0; x < n(); ++x)
    out[static_cast<std::size_t>(mod(x + h, n()))] = mod(pi_[static_cast<std::size_t>(x)] + h, n());
  CrossFactor c;
  c.pi_ = std::move(out);
  return c;
}

DifferenceProfile CrossFactor::profile() const {
  DifferenceProfile p(n());
  for (int x = 0; x < n(); ++x)
    ++p[mod(pi_[static_cast<std::size_t>(x)] - x, n())];
  return p;
}

int CrossFactor::stabilizer_order() const {
  // pi(x + h) = pi(x) + h for all x
  int order = 0;
  for (int h = 0; h < n(); ++h) {
    bool fixed = true;
    for (int x = 0; x < n() && fixed; ++x)
      fixed = pi_[static_cast<std::size_t>(mod(x + h, n()))] ==
              mod(pi_[static_cast<std::size_t>(x)] + h, n());
    if (fixed)
      ++order;
  }
  return order;
}

DifferenceProfile profile(const CrossFactor &f) { return f.profile(); }

DifferenceProfile profile(const OneFactor &f, int n) {
  return CrossFactor::from_factor(f, n).profile();
}

} // namespace onefact
