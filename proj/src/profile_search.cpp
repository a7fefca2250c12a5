#include <algorithm>
#include <functional>
#include <map>

#include "onefact/starters.hpp"

namespace onefact {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

struct StarterDfs {
  int n;
  std::vector<int> diffs;  // distinct differences, ascending
  std::vector<int> left;   // remaining uses per entry of diffs
  std::vector<bool> used;
  std::vector<int> pi;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;

  bool run(int x) {
    if (max_nodes && ++nodes > max_nodes)
      throw Error(ErrorCode::NoneFound, "starter search exceeded its node budget");
    if (x == n) {
      // a non-trivial stabilizer would collapse the orbit; keep looking
      return CrossFactor(pi).stabilizer_order() == 1;
    }
    for (std::size_t k = 0; k < diffs.size(); ++k) {
      if (!left[k])
        continue;
      const int y = mod(x + diffs[k], n);
      if (used[static_cast<std::size_t>(y)])
        continue;
      --left[k];
      used[static_cast<std::size_t>(y)] = true;
      pi[static_cast<std::size_t>(x)] = y;
      if (run(x + 1))
        return true;
      ++left[k];
      used[static_cast<std::size_t>(y)] = false;
    }
    return false;
  }
};

// Sparse profile: at most max_support + 1 nonzero entries.
struct Sparse {
  std::vector<std::pair<int, int>> entries;  // (a, t) ascending in a
  int zero() const { return !entries.empty() && entries.front().first == 0 ? entries.front().second : 0; }
};

DifferenceProfile to_dense(const Sparse &s, int n) {
  DifferenceProfile p(n);
  for (const auto &[a, t] : s.entries)
    p[a] = t;
  return p;
}

// k-subsets of {1..n-1} in lexicographic order, each with every composition
// of `rest` into k positive parts, also lexicographic.
void enumerate_pool(int n, int max_support, const std::function<void(Sparse)> &emit) {
  for (int s = 1; s <= max_support; ++s)
    for (int u = 0; u <= n - 2; ++u) {
      const int rest = n - u;
      const int k = s - (u > 0 ? 1 : 0);
      if (k <= 0 || k > n - 1 || k > rest)
        continue;
      std::vector<int> sup(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        sup[static_cast<std::size_t>(i)] = i + 1;
      while (true) {
        std::vector<int> comp(static_cast<std::size_t>(k), 0);
        const std::function<void(int, int)> fill = [&](int i, int remaining) {
          if (i == k - 1) {
            comp[static_cast<std::size_t>(i)] = remaining;
            long long disp = 0;
            bool has_one = u == 1;
            int mx = u;
            for (int j = 0; j < k; ++j) {
              disp += static_cast<long long>(sup[static_cast<std::size_t>(j)]) *
                      comp[static_cast<std::size_t>(j)];
              has_one = has_one || comp[static_cast<std::size_t>(j)] == 1;
              mx = std::max(mx, comp[static_cast<std::size_t>(j)]);
            }
            if (disp % n != 0 || !has_one || mx == n)
              return;
            Sparse p;
            if (u)
              p.entries.emplace_back(0, u);
            for (int j = 0; j < k; ++j)
              p.entries.emplace_back(sup[static_cast<std::size_t>(j)],
                                     comp[static_cast<std::size_t>(j)]);
            emit(std::move(p));
            return;
          }
          for (int c = 1; c <= remaining - (k - 1 - i); ++c) {
            comp[static_cast<std::size_t>(i)] = c;
            fill(i + 1, remaining - c);
          }
        };
        fill(0, rest);

        int i = k - 1;
        while (i >= 0 && sup[static_cast<std::size_t>(i)] == n - k + i)
          --i;
        if (i < 0)
          break;
        ++sup[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          sup[static_cast<std::size_t>(j)] = sup[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
}

// No selection of whole orbits and 0 < lambda0 < lambda leaves a consistent
// number of M_a copies. Same test as the certificate, in closed form.
bool proven_fast(const std::vector<const std::vector<int> *> &dense, int n, int lambda) {
  const int m = static_cast<int>(dense.size());
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    int p = 0, q = 0;
    for (int a = 0; a < n; ++a) {
      int in = 0, out = 0;
      for (int i = 0; i < m; ++i)
        ((x >> i) & 1u ? in : out) += (*dense[static_cast<std::size_t>(i)])[static_cast<std::size_t>(a)];
      p = std::max(p, in);
      q = std::max(q, out);
    }
    if (std::max(p, 1) <= std::min(lambda - q, lambda - 1))
      return false;
  }
  return true;
}

} // namespace

CrossFactor find_starter(int n, const DifferenceProfile &target, StarterSearchOptions options) {
  if (n < 1 || target.n() != n)
    throw Error(ErrorCode::ProfileSumInvalid, "profile length differs from n");
  if (target.total() != n)
    throw Error(ErrorCode::ProfileSumInvalid,
                "profile entries sum to " + std::to_string(target.total()) + ", need " +
                    std::to_string(n));
  if (target.displacement_sum() != 0)
    throw Error(ErrorCode::ProfileSumInvalid, "sum of a*t_a is not 0 mod n");

  StarterDfs dfs{n, {}, {}, std::vector<bool>(static_cast<std::size_t>(n), false),
                 std::vector<int>(static_cast<std::size_t>(n), 0), 0, options.max_nodes};
  for (int a = 0; a < n; ++a)
    if (target[a] > 0) {
      dfs.diffs.push_back(a);
      dfs.left.push_back(target[a]);
    }
  if (!dfs.run(0))
    throw Error(ErrorCode::Infeasible,
                "no permutation with profile " + target.to_string() + " and trivial stabilizer");
  return CrossFactor(dfs.pi);
}

std::vector<DifferenceProfile> profile_pool(int n, int max_support) {
  std::vector<DifferenceProfile> out;
  enumerate_pool(n, max_support, [&](Sparse s) { out.push_back(to_dense(s, n)); });
  return out;
}

std::vector<std::vector<DifferenceProfile>> find_profiles(int n, int lambda, int m,
                                                          const ProfileSearchConstraints &c) {
  const int unknown = m - static_cast<int>(c.fixed.size());
  if (n < 2 || unknown < 0)
    throw Error(ErrorCode::InvalidArgument, "bad profile count");
  if (lambda < 2)
    throw Error(ErrorCode::NoneFound, "indecomposable needs lambda >= 2");

  std::vector<int> base(static_cast<std::size_t>(n), 0);
  for (const auto &p : c.fixed) {
    if (p.n() != n)
      throw Error(ErrorCode::InvalidArgument, "fixed profile on a different n");
    for (int a = 0; a < n; ++a)
      base[static_cast<std::size_t>(a)] += p[a];
  }

  std::vector<Sparse> pool;
  enumerate_pool(n, c.max_support, [&](Sparse s) { pool.push_back(std::move(s)); });
  std::vector<DifferenceProfile> dense_pool;
  dense_pool.reserve(pool.size());
  for (const auto &s : pool)
    dense_pool.push_back(to_dense(s, n));

  // pool indices grouped by t_0, so the last slot can jump straight to the
  // profiles that close the M_0 budget
  std::vector<std::vector<std::size_t>> by_zero(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < pool.size(); ++i)
    by_zero[static_cast<std::size_t>(pool[i].zero())].push_back(i);

  std::map<std::size_t, bool> realizable;
  auto is_realizable = [&](std::size_t idx) {
    auto it = realizable.find(idx);
    if (it != realizable.end())
      return it->second;
    bool ok = false;
    try {
      find_starter(n, dense_pool[idx], {c.starter_node_budget});
      ok = true;
    } catch (const Error &) {
    }
    realizable.emplace(idx, ok);
    return ok;
  };

  std::vector<std::vector<DifferenceProfile>> results;
  std::vector<std::size_t> chosen;
  std::vector<int> t = base;

  auto accept_leaf = [&]() {
    if (t[0] != lambda)
      return false;
    if (n % 2 == 1 && std::none_of(t.begin(), t.end(), [](int v) { return v == 0; }))
      return false;
    std::vector<DifferenceProfile> profs = c.fixed;
    for (auto idx : chosen)
      profs.push_back(dense_pool[idx]);
    if (!certificate_order(profs).complete)
      return false;
    std::vector<const std::vector<int> *> dense;
    for (const auto &p : profs)
      dense.push_back(&p.values());
    if (!proven_fast(dense, n, lambda))
      return false;
    for (auto idx : chosen)
      if (!is_realizable(idx))
        return false;
    results.push_back(std::move(profs));
    return true;
  };

  auto fits = [&](std::size_t idx) {
    for (const auto &[a, v] : pool[idx].entries)
      if (t[static_cast<std::size_t>(a)] + v > lambda)
        return false;
    return std::none_of(c.fixed.begin(), c.fixed.end(),
                        [&](const DifferenceProfile &f) { return f == dense_pool[idx]; });
  };
  auto add = [&](std::size_t idx, int sign) {
    for (const auto &[a, v] : pool[idx].entries)
      t[static_cast<std::size_t>(a)] += sign * v;
  };

  const std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == unknown)
      return accept_leaf() && results.size() >= c.max_solutions;
    const bool last = static_cast<int>(chosen.size()) == unknown - 1;
    auto visit = [&](std::size_t idx) {
      if (!fits(idx))
        return false;
      add(idx, 1);
      chosen.push_back(idx);
      const bool done = rec(idx + 1);
      chosen.pop_back();
      add(idx, -1);
      return done;
    };
    if (last) {
      const int need = lambda - t[0];
      if (need < 0 || need > n)
        return false;
      const auto &bucket = by_zero[static_cast<std::size_t>(need)];
      for (auto it = std::lower_bound(bucket.begin(), bucket.end(), start); it != bucket.end(); ++it)
        if (visit(*it))
          return true;
      return false;
    }
    for (std::size_t idx = start; idx < pool.size(); ++idx)
      if (visit(idx))
        return true;
    return false;
  };

  if (unknown == 0)
    accept_leaf();
  else
    rec(0);
  if (results.empty())
    throw Error(ErrorCode::NoneFound, "no profile tuple for n=" + std::to_string(n) +
                                          " lambda=" + std::to_string(lambda));
  return results;
}

} // namespace onefact
