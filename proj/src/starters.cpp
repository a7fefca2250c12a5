#include "onefact/starters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace onefact {

std::vector<int> StarterSet::aggregated() const {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (const auto &s : starters) {
    const auto p = s.profile();
    for (int a = 0; a < n && a < p.n(); ++a)
      t[static_cast<std::size_t>(a)] += p[a];
  }
  return t;
}

std::vector<DifferenceProfile> StarterSet::profiles() const {
  std::vector<DifferenceProfile> out;
  for (const auto &s : starters)
    out.push_back(s.profile());
  return out;
}

std::vector<Violation> check_starter_conditions(const StarterSet &s) {
  std::vector<Violation> out;
  const int m = static_cast<int>(s.starters.size());
  bool sizes_ok = true;
  for (int i = 0; i < m; ++i) {
    const auto &f = s.starters[static_cast<std::size_t>(i)];
    if (f.n() != s.n) {
      out.push_back({ViolationKind::WrongOrder, i, f.n(),
                     "starter " + std::to_string(i) + " is defined on Z_" +
                         std::to_string(f.n())});
      sizes_ok = false;
      continue;
    }
    const int stab = f.stabilizer_order();
    if (stab != 1)
      out.push_back({ViolationKind::StabilizerNotTrivial, i, stab,
                     "starter " + std::to_string(i) + " has stabilizer order " +
                         std::to_string(stab)});
  }
  if (!sizes_ok)
    return out;

  // F_r in F_i^H iff some shift of F_i equals F_r
  for (int i = 0; i < m; ++i)
    for (int r = i + 1; r < m; ++r)
      for (int h = 0; h < s.n; ++h)
        if (s.starters[static_cast<std::size_t>(i)].shifted(h) ==
            s.starters[static_cast<std::size_t>(r)]) {
          out.push_back({ViolationKind::SharedOrbit, i, r,
                         "starters " + std::to_string(i) + " and " + std::to_string(r) +
                             " lie in the same H-orbit"});
          break;
        }

  const auto t = s.aggregated();
  for (int a = 0; a < s.n; ++a)
    if (t[static_cast<std::size_t>(a)] > s.lambda)
      out.push_back({ViolationKind::MultiplicityExceeded, a, t[static_cast<std::size_t>(a)],
                     "t(M_" + std::to_string(a) + ") = " +
                         std::to_string(t[static_cast<std::size_t>(a)]) + " > lambda"});
  if (s.n % 2 == 1 && !free_orbit(s))
    out.push_back({ViolationKind::NoFreeOrbit, -1, -1, "odd n and every M_a is used"});
  return out;
}

std::optional<int> free_orbit(const StarterSet &s) {
  const auto t = s.aggregated();
  for (int a = 0; a < s.n; ++a)
    if (t[static_cast<std::size_t>(a)] == 0)
      return a;
  return std::nullopt;
}

MultiFactorization assemble(const StarterSet &s, std::optional<std::vector<int>> sigma) {
  if (s.n < 2)
    throw Error(ErrorCode::PreconditionFailed, "n must be >= 2");
  const auto violations = check_starter_conditions(s);
  if (!violations.empty()) {
    std::string msg;
    for (const auto &v : violations)
      msg += (msg.empty() ? "" : "; ") + v.message;
    throw Error(ErrorCode::PreconditionFailed, msg);
  }

  ModelInfo model;
  model.kind = ModelKind::Cyclic;
  for (const auto &f : s.starters)
    model.starters.push_back(f.permutation());

  std::vector<OneFactor> factors;
  factors.reserve(static_cast<std::size_t>(s.lambda) * static_cast<std::size_t>(2 * s.n - 1));
  for (const auto &f : s.starters) {
    const auto base = f.to_factor();
    for (int h = 0; h < s.n; ++h)
      factors.push_back(shift_factor(base, s.n, h));
  }

  std::optional<int> b;
  if (s.n % 2 == 0) {
    auto joined = join_even(s.n, s.lambda, std::move(sigma));
    factors.insert(factors.end(), joined.begin(), joined.end());
  } else {
    b = free_orbit(s);
    auto joined = join_odd(s.n, s.lambda, *b);
    factors.insert(factors.end(), joined.begin(), joined.end());
  }
  model.joined_orbit = b;

  const auto t = s.aggregated();
  for (int a = 0; a < s.n; ++a) {
    if (b && a == *b)
      continue;
    const auto ma = m_factor(s.n, a);
    for (int c = 0; c < s.lambda - t[static_cast<std::size_t>(a)]; ++c)
      factors.push_back(ma);
  }
  return MultiFactorization(s.n, s.lambda, std::move(factors), std::move(model));
}

OrbitMultiplicity orbit_multiplicity_check(const CrossFactor &f) {
  const int n = f.n();
  if (f.stabilizer_order() != 1)
    throw Error(ErrorCode::StabilizerNotTrivial,
                "orbit multiplicity needs a trivial stabilizer, got order " +
                    std::to_string(f.stabilizer_order()));
  // counts[a][x]: multiplicity of [x_0, (x+a)_1]
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
  const auto base = f.to_factor();
  for (int h = 0; h < n; ++h) {
    const auto shifted = shift_factor(base, n, h);
    for (const auto &e : shifted.edges()) {
      const int x = e.u;
      const int y = e.v - n;
      const int a = ((y - x) % n + n) % n;
      ++counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
    }
  }
  OrbitMultiplicity out;
  out.mu.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const auto &row = counts[static_cast<std::size_t>(a)];
    out.mu[static_cast<std::size_t>(a)] = row[0];
    if (std::any_of(row.begin(), row.end(), [&](int c) { return c != row[0]; }))
      out.uniform = false;
  }
  out.matches_profile = out.uniform && out.mu == f.profile().values();
  return out;
}

CertificateOrder certificate_order(const std::vector<DifferenceProfile> &profiles) {
  CertificateOrder out;
  const int m = static_cast<int>(profiles.size());
  if (m == 0) {
    out.complete = true;
    return out;
  }
  const int n = profiles.front().n();
  std::vector<bool> marked(static_cast<std::size_t>(m), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < m && !progress; ++i) {
      if (marked[static_cast<std::size_t>(i)])
        continue;
      for (int a = 0; a < n; ++a) {
        if (profiles[static_cast<std::size_t>(i)][a] != 1)
          continue;
        bool exclusive = true;
        bool closed = true;
        for (int k = 0; k < m; ++k) {
          if (k == i || profiles[static_cast<std::size_t>(k)][a] == 0)
            continue;
          exclusive = false;
          if (!marked[static_cast<std::size_t>(k)])
            closed = false;
        }
        if (closed) {
          marked[static_cast<std::size_t>(i)] = true;
          out.steps.push_back({i, a, exclusive});
          progress = true;
          break;
        }
      }
    }
  }
  out.complete = std::all_of(marked.begin(), marked.end(), [](bool b) { return b; });
  return out;
}

CertificateOrder certificate_order(const StarterSet &s) { return certificate_order(s.profiles()); }

Certificate certificate_indecomposable(const std::vector<DifferenceProfile> &profiles, int n,
                                       int lambda) {
  if (lambda < 2)
    throw Error(ErrorCode::PreconditionFailed,
                "indecomposability is vacuous for lambda < 2");
  const int m = static_cast<int>(profiles.size());
  if (m > 20)
    throw Error(ErrorCode::PreconditionFailed, "too many starters for subset enumeration");
  for (const auto &p : profiles)
    if (p.n() != n)
      throw Error(ErrorCode::PreconditionFailed, "profile defined on a different n");

  Certificate cert;
  cert.ordering = certificate_order(profiles);
  if (!cert.ordering.complete)
    throw Error(ErrorCode::OrderingFailed, "not every starter orbit is forced whole");

  std::vector<int> total(static_cast<std::size_t>(n), 0);
  for (const auto &p : profiles)
    for (int a = 0; a < n; ++a)
      total[static_cast<std::size_t>(a)] += p[a];
  for (int a = 0; a < n; ++a)
    if (total[static_cast<std::size_t>(a)] > lambda)
      throw Error(ErrorCode::PreconditionFailed, "t(M_a) exceeds lambda");

  // With every orbit all-in or all-out, the edges of M_a receive
  // sum_{i selected} t_i(a) from orbits; the rest must come from the
  // lambda - t(M_a) available copies of M_a. The joined block contributes
  // lambda0 uniformly and imposes nothing further.
  std::vector<int> inside(static_cast<std::size_t>(n));
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    std::fill(inside.begin(), inside.end(), 0);
    for (int i = 0; i < m; ++i)
      if (x & (1u << i))
        for (int a = 0; a < n; ++a)
          inside[static_cast<std::size_t>(a)] += profiles[static_cast<std::size_t>(i)][a];
    for (int lambda0 = 1; lambda0 < lambda; ++lambda0) {
      std::optional<TraceEntry> violated;
      for (int a = 0; a < n && !violated; ++a) {
        const int copies = lambda0 - inside[static_cast<std::size_t>(a)];
        if (copies < 0)
          violated = TraceEntry{x, lambda0, a, true};
        else if (copies > lambda - total[static_cast<std::size_t>(a)])
          violated = TraceEntry{x, lambda0, a, false};
      }
      if (violated)
        cert.trace.push_back(*violated);
      else if (!cert.feasible)
        cert.feasible = std::make_pair(x, lambda0);
    }
  }
  cert.status = cert.feasible ? CertificateStatus::Unknown : CertificateStatus::Proven;
  return cert;
}

Certificate certificate_indecomposable(const StarterSet &s) {
  return certificate_indecomposable(s.profiles(), s.n, s.lambda);
}

} // namespace onefact
