#include "onefact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "onefact/cyclic.hpp"

namespace onefact {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetSpent {};

// Exact multicover over distinct factor types with multiplicities.
class Multicover {
public:
  Multicover(const MultiFactorization &mf, SearchBudget budget, Clock::time_point start,
             std::uint64_t &nodes)
      : budget_(budget), start_(start), nodes_(nodes) {
    const auto &fs = mf.factors();
    const int nv = mf.vertex_count();
    npairs_ = pair_count(nv);
    for (std::size_t i = 0; i < fs.size();) {
      std::size_t j = i;
      while (j < fs.size() && fs[j] == fs[i])
        ++j;
      Type t;
      t.first = i;
      t.count = static_cast<int>(j - i);
      for (const auto &e : fs[i].edges())
        t.edges.push_back(pair_index(e, nv));
      types_.push_back(std::move(t));
      i = j;
    }
    by_edge_.assign(npairs_, {});
    for (std::size_t t = 0; t < types_.size(); ++t)
      for (auto e : types_[t].edges)
        by_edge_[e].push_back(t);
  }

  // Selection counts per type, or nothing when no lambda0-subfactorization exists.
  std::optional<std::vector<int>> solve(int lambda0) {
    residual_.assign(npairs_, lambda0);
    supply_.assign(npairs_, 0);
    candidates_.assign(npairs_, 0);
    for (std::size_t t = 0; t < types_.size(); ++t)
      for (auto e : types_[t].edges) {
        supply_[e] += types_[t].count;
        ++candidates_[e];
      }
    chosen_.assign(types_.size(), -1);
    for (std::size_t e = 0; e < npairs_; ++e)
      if (supply_[e] < lambda0)
        return std::nullopt;
    if (!dfs())
      return std::nullopt;
    std::vector<int> out(types_.size());
    for (std::size_t t = 0; t < types_.size(); ++t)
      out[t] = std::max(chosen_[t], 0);
    return out;
  }

  std::vector<std::size_t> indices(const std::vector<int> &counts) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < types_.size(); ++t)
      for (int k = 0; k < counts[t]; ++k)
        out.push_back(types_[t].first + static_cast<std::size_t>(k));
    return out;
  }

private:
  struct Type {
    std::size_t first = 0;
    int count = 0;
    std::vector<std::size_t> edges;
  };

  void tick() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes)
      throw BudgetSpent{};
    if (budget_.max_seconds > 0 && (nodes_ & 0xfff) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds)
      throw BudgetSpent{};
  }

  bool dfs() {
    tick();
    // deficient pair with the fewest undecided carriers
    std::size_t best = npairs_;
    int best_cand = 0;
    for (std::size_t e = 0; e < npairs_; ++e)
      if (residual_[e] > 0 && (best == npairs_ || candidates_[e] < best_cand)) {
        best = e;
        best_cand = candidates_[e];
      }
    if (best == npairs_)
      return true;

    std::size_t t = types_.size();
    for (auto c : by_edge_[best])
      if (chosen_[c] < 0) {
        t = c;
        break;
      }
    if (t == types_.size())
      return false;

    const auto &type = types_[t];
    int hi = type.count;
    for (auto e : type.edges)
      hi = std::min(hi, residual_[e]);
    // the other carriers of `best` can supply at most supply - count
    const int lo = std::max(0, residual_[best] - (supply_[best] - type.count));

    for (auto e : type.edges) {
      supply_[e] -= type.count;
      --candidates_[e];
    }
    for (int k = hi; k >= lo; --k) {
      bool ok = true;
      for (auto e : type.edges) {
        residual_[e] -= k;
        if (residual_[e] > supply_[e])
          ok = false;
      }
      chosen_[t] = k;
      if (ok && dfs())
        return true;
      for (auto e : type.edges)
        residual_[e] += k;
    }
    chosen_[t] = -1;
    for (auto e : type.edges) {
      supply_[e] += type.count;
      ++candidates_[e];
    }
    return false;
  }

  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t &nodes_;
  std::size_t npairs_ = 0;
  std::vector<Type> types_;
  std::vector<std::vector<std::size_t>> by_edge_;
  std::vector<int> residual_;
  std::vector<int> supply_;
  std::vector<int> candidates_;
  std::vector<int> chosen_;
};

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

const char *outcome_name(Outcome o) {
  switch (o) {
  case Outcome::ProvenNone: return "proven_none";
  case Outcome::Found: return "found";
  case Outcome::Exhausted: return "exhausted";
  }
  return "?";
}

SearchResult find_subfactorization(const MultiFactorization &mf, std::optional<int> lambda0,
                                   SearchBudget budget) {
  if (!validate_factorization(mf).valid)
    throw Error(ErrorCode::InvalidInput, "input is not a valid factorization");
  if (mf.lambda() < 2)
    throw Error(ErrorCode::InvalidInput, "lambda must be >= 2");
  if (lambda0 && (*lambda0 <= 0 || *lambda0 >= mf.lambda()))
    throw Error(ErrorCode::InvalidInput, "lambda0 must lie strictly between 0 and lambda");

  const auto start = Clock::now();
  SearchResult result;
  Multicover cover(mf, budget, start, result.nodes);
  std::vector<int> targets;
  if (lambda0)
    targets.push_back(*lambda0);
  else
    for (int l = 1; l <= mf.lambda() / 2; ++l)
      targets.push_back(l);
  try {
    for (int l : targets)
      if (auto counts = cover.solve(l)) {
        result.outcome = Outcome::Found;
        result.witness = Witness{l, cover.indices(*counts)};
        break;
      }
  } catch (const BudgetSpent &) {
    result.outcome = Outcome::Exhausted;
  }
  result.seconds = since(start);
  return result;
}

SearchResult orbit_granular_search(const MultiFactorization &mf, const StarterSet &starters,
                                   SearchBudget budget) {
  const int n = starters.n;
  const int lambda = starters.lambda;
  if (mf.n() != n || mf.lambda() != lambda || lambda < 2)
    throw Error(ErrorCode::HypothesesUnmet, "factorization and starters disagree on n or lambda");
  if (!check_starter_conditions(starters).empty())
    throw Error(ErrorCode::HypothesesUnmet, "starter conditions fail");
  if (!certificate_order(starters).complete)
    throw Error(ErrorCode::HypothesesUnmet, "starter orbits are not forced whole");
  if (assemble(starters).factors() != mf.factors())
    throw Error(ErrorCode::HypothesesUnmet, "factorization is not the assembly of these starters");

  const auto start = Clock::now();
  SearchResult result;
  const int m = static_cast<int>(starters.starters.size());
  const auto profiles = starters.profiles();
  const auto total = starters.aggregated();
  const std::optional<int> b = n % 2 == 1 ? free_orbit(starters) : std::optional<int>{};

  // where each distinct factor sits in mf
  std::map<OneFactor, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < mf.factors().size(); ++i)
    where[mf.factors()[i]].push_back(i);
  std::vector<OneFactor> joined;
  if (n % 2 == 0) {
    const auto all = join_even(n, 1);
    joined.assign(all.begin(), all.end());
  } else {
    const auto all = join_odd(n, 1, *b);
    joined.assign(all.begin(), all.end());
  }

  for (int l0 = 1; l0 <= lambda / 2 && !result.witness; ++l0)
    for (std::uint32_t x = 0; x < (1u << m); ++x) {
      ++result.nodes;
      if ((budget.max_nodes && result.nodes > budget.max_nodes) ||
          (budget.max_seconds > 0 && since(start) > budget.max_seconds)) {
        result.outcome = Outcome::Exhausted;
        result.seconds = since(start);
        return result;
      }
      std::vector<int> copies(static_cast<std::size_t>(n), 0);
      bool feasible = true;
      for (int a = 0; a < n && feasible; ++a) {
        if (b && a == *b)
          continue;
        int c = l0;
        for (int i = 0; i < m; ++i)
          if (x & (1u << i))
            c -= profiles[static_cast<std::size_t>(i)][a];
        feasible = c >= 0 && c <= lambda - total[static_cast<std::size_t>(a)];
        copies[static_cast<std::size_t>(a)] = c;
      }
      if (!feasible)
        continue;

      std::map<OneFactor, int> take;
      for (int i = 0; i < m; ++i)
        if (x & (1u << i))
          for (const auto &f : h_orbit(starters.starters[static_cast<std::size_t>(i)].to_factor(), n))
            ++take[f];
      for (const auto &f : joined)
        take[f] += l0;
      for (int a = 0; a < n; ++a)
        if (copies[static_cast<std::size_t>(a)] > 0)
          take[m_factor(n, a)] += copies[static_cast<std::size_t>(a)];
      Witness w{l0, {}};
      for (const auto &[f, k] : take) {
        const auto &idx = where.at(f);
        w.indices.insert(w.indices.end(), idx.begin(), idx.begin() + k);
      }
      std::sort(w.indices.begin(), w.indices.end());
      result.outcome = Outcome::Found;
      result.witness = std::move(w);
      break;
    }
  result.seconds = since(start);
  return result;
}

bool decomposability_witness_check(const MultiFactorization &mf, const Witness &w) {
  if (w.lambda0 <= 0 || w.lambda0 >= mf.lambda())
    return false;
  const std::size_t need = static_cast<std::size_t>(w.lambda0) * static_cast<std::size_t>(2 * mf.n() - 1);
  if (w.indices.size() != need)
    return false;
  const int nv = mf.vertex_count();
  std::vector<bool> used(mf.factors().size(), false);
  std::vector<std::vector<int>> count(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(nv), 0));
  for (auto i : w.indices) {
    if (i >= mf.factors().size() || used[i])
      return false;
    used[i] = true;
    for (const auto &e : mf.factors()[i].edges()) {
      ++count[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
      ++count[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
    }
  }
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v)
      if (u != v && count[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != w.lambda0)
        return false;
  return true;
}

Witness complement(const MultiFactorization &mf, const Witness &w) {
  std::vector<bool> in(mf.factors().size(), false);
  for (auto i : w.indices)
    if (i < in.size())
      in[i] = true;
  Witness out{mf.lambda() - w.lambda0, {}};
  for (std::size_t i = 0; i < in.size(); ++i)
    if (!in[i])
      out.indices.push_back(i);
  return out;
}

} // namespace onefact
