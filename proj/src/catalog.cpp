#include "onefact/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "onefact/field.hpp"
#include "json.hpp"

namespace onefact {

const char *builtin_fixture_json();  // generated from data/profiles.json

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kStarterBudget = 5'000'000;

int mod(int x, int n) { return ((x % n) + n) % n; }

// A with parameter alpha: n-2 edges of M_0 and one each of M_alpha, M_{n-alpha}.
DifferenceProfile profile_a(int n, int alpha) {
  DifferenceProfile p(n);
  p[0] += n - 2;
  p[mod(alpha, n)] += 1;
  p[mod(n - alpha, n)] += 1;
  return p;
}

// B_r: r+1 edges of M_0, n-r-2 of M_1, one of M_{r+2}.
DifferenceProfile profile_b(int n, int r) {
  DifferenceProfile p(n);
  p[0] += r + 1;
  p[1] += n - r - 2;
  p[mod(r + 2, n)] += 1;
  return p;
}

Slot pinned(std::string name, DifferenceProfile p) { return Slot{std::move(name), std::move(p), {}}; }
Slot discovered(std::string name) { return Slot{std::move(name), {}, {}}; }
Slot given(std::string name, std::vector<int> pi) {
  CrossFactor f(pi);
  return Slot{std::move(name), f.profile(), std::move(pi)};
}

// Starters spelled out as edge lists; pi(x) is the partner of x_0 on side 1.

std::vector<int> eleven_b(int r) {
  std::vector<int> pi(11);
  for (int i = 1; i <= r; ++i)
    pi[static_cast<std::size_t>(i)] = i;
  for (int i = r + 1; i <= 10; ++i)
    pi[static_cast<std::size_t>(i)] = mod(i + 1, 11);
  pi[0] = r + 1;
  return pi;
}

std::vector<int> eleven_c() {
  std::vector<int> pi(11);
  for (int i = 1; i <= 4; ++i)
    pi[static_cast<std::size_t>(i)] = i;
  for (int i = 5; i <= 10; ++i)
    if (i != 6)
      pi[static_cast<std::size_t>(i)] = mod(i + 1, 11);
  pi[0] = 7;
  pi[6] = 5;
  return pi;
}

std::vector<int> small_c(int n) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 2; i <= n - 1; ++i)
    pi[static_cast<std::size_t>(i)] = mod(i + 1, n);
  pi[0] = 2;
  pi[1] = 1;
  return pi;
}

std::vector<int> small_d(int n) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 2; i <= n - 3; ++i)
    pi[static_cast<std::size_t>(i)] = i + 1;
  pi[0] = n - 1;
  pi[static_cast<std::size_t>(n - 1)] = 0;
  pi[static_cast<std::size_t>(n - 2)] = 2;
  pi[1] = 1;
  return pi;
}

std::vector<int> small_r(int n) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 0; i <= 2; ++i)
    pi[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 3; i <= 7; ++i)
    pi[static_cast<std::size_t>(i)] = mod(i + 2, n);
  if (n == 9) {
    pi[8] = 4;
  } else {
    pi[8] = 0;
    pi[9] = 4;
  }
  return pi;
}

std::vector<int> nine_eighteen_r() {
  std::vector<int> pi(9);
  for (int i : {0, 1, 2, 3, 4, 8})
    pi[static_cast<std::size_t>(i)] = mod(i + 1, 9);
  for (int i : {5, 6})
    pi[static_cast<std::size_t>(i)] = i + 2;
  pi[7] = 6;
  return pi;
}

bool has_discovered(const std::vector<Slot> &slots) {
  return std::any_of(slots.begin(), slots.end(), [](const Slot &s) { return !s.profile; });
}

// fixture registry

struct Registry {
  std::mutex mu;
  bool loaded = false;
  std::vector<FixtureEntry> entries;
  std::map<std::tuple<Family, int, int>, std::vector<DifferenceProfile>> searched;
};

Registry &registry() {
  static Registry r;
  return r;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::FixtureError, "cannot read fixture file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// caller holds the lock
void ensure_loaded(Registry &r) {
  if (r.loaded)
    return;
  const char *env = std::getenv("ONEFACT_FIXTURES");
  r.entries = parse_fixtures(env && *env ? read_file(env) : builtin_fixture_json());
  r.loaded = true;
}

void check_against_slots(const FixtureEntry &e, const std::vector<Slot> &slots) {
  const std::string where = std::string(family_name(e.family)) + " n=" + std::to_string(e.n) +
                            " lambda=" + std::to_string(e.lambda);
  if (e.profiles.size() != slots.size())
    throw Error(ErrorCode::FixtureError, where + ": expected " + std::to_string(slots.size()) +
                                             " profiles, got " + std::to_string(e.profiles.size()));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto &p = e.profiles[i];
    if (p.n() != e.n || p.total() != e.n || p.displacement_sum() != 0)
      throw Error(ErrorCode::FixtureError, where + ": profile " + p.to_string() +
                                               " is not the profile of a permutation");
    if (slots[i].profile && *slots[i].profile != p)
      throw Error(ErrorCode::FixtureError, where + ": slot " + slots[i].name + " must be " +
                                               slots[i].profile->to_string());
  }
}

} // namespace

const char *family_name(Family f) {
  switch (f) {
  case Family::P1: return "P1";
  case Family::P2: return "P2";
  case Family::P3: return "P3";
  case Family::P4: return "P4";
  case Family::P5: return "P5";
  case Family::P6: return "P6";
  case Family::P7: return "P7";
  case Family::P8: return "P8";
  case Family::T3: return "T3";
  }
  return "?";
}

Family parse_family(const std::string &name) {
  std::string up;
  for (char c : name)
    up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Family f : all_families())
    if (up == family_name(f))
      return f;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
}

const std::vector<Family> &all_families() {
  static const std::vector<Family> all{Family::P1, Family::P2, Family::P3, Family::P4, Family::P5,
                                       Family::P6, Family::P7, Family::P8, Family::T3};
  return all;
}

int lambda_floor(int n) { return n <= 2 ? 0 : (n - 2 + 2) / 3; }

bool in_domain(Family f, int n, int lambda) {
  switch (f) {
  case Family::P1:
    return n >= 5 && lambda >= 2 && 3 * lambda >= n - 2 && lambda <= n - 2 && (n - lambda) % 2 == 0;
  case Family::P2:
    return n >= 5 && lambda >= 2 && lambda >= lambda_floor(n) && lambda <= n - 3 &&
           (n - lambda) % 2 == 1;
  case Family::P4: return n >= 7 && lambda >= n - 1 && lambda <= n;
  case Family::P3: return n >= 9 && lambda >= n + 1 && lambda <= 2 * n - 8;
  case Family::P7: return n >= 9 && lambda == 2 * n - 7;
  case Family::P5: return n >= 9 && lambda >= 2 * n - 6 && lambda <= 2 * n - 3;
  case Family::P6: return n >= 9 && lambda == 2 * n - 2;
  case Family::P8: return n >= 9 && lambda >= 2 * n - 1 && lambda <= 2 * n;
  case Family::T3: {
    if (n < 2 || lambda != n - 1)
      return false;
    int q = 2 * n - 1;
    int p = 0;
    for (int d = 3; d <= q; d += 2)
      if (q % d == 0) {
        p = d;
        break;
      }
    while (q % p == 0)
      q /= p;
    return q == 1;
  }
  }
  return false;
}

Family dispatch(int n, int lambda) {
  for (Family f : {Family::P1, Family::P2, Family::P4, Family::P3, Family::P7, Family::P5,
                   Family::P6, Family::P8})
    if (in_domain(f, n, lambda))
      return f;
  throw Error(ErrorCode::NoFamily,
              "no family covers n=" + std::to_string(n) + " lambda=" + std::to_string(lambda));
}

std::vector<Slot> family_slots(Family f, int n, int lambda) {
  if (!in_domain(f, n, lambda) || f == Family::T3)
    throw Error(ErrorCode::OutOfDomain, std::string(family_name(f)) + " does not cover n=" +
                                            std::to_string(n) + " lambda=" +
                                            std::to_string(lambda));
  switch (f) {
  case Family::P1: {
    if (lambda == n - 2)
      return {pinned("A", profile_a(n, 1))};
    const int k = (n - lambda - 2) / 2;
    DifferenceProfile p(n);
    p[0] += lambda;
    p[1] += k;
    p[n - 1] += k;
    p[2] += 1;
    p[n - 2] += 1;
    return {pinned("A", p)};
  }
  case Family::P2: return {discovered("A")};
  case Family::P4: {
    const int r = lambda - n + 1;
    return {pinned("A", profile_a(n, r == 0 ? 3 : 2)), pinned("B_r", profile_b(n, r))};
  }
  case Family::P3:
    if (n == 11) {
      const int r = lambda - 9;
      if (r <= 4)
        return {pinned("A", profile_a(n, 2)), given("B", eleven_b(r))};
      return {pinned("A", profile_a(n, 3)), pinned("B", profile_b(n, 0)), given("C", eleven_c())};
    }
    [[fallthrough]];
  case Family::P7:
    return {pinned("A", profile_a(n, 3)), pinned("B", profile_b(n, 0)), discovered("C"),
            discovered("D")};
  case Family::P5: {
    const int r = 2 * n - lambda;
    return {pinned("A", profile_a(n, r == 4 ? 4 : 2)), pinned("B", profile_b(n, 1)),
            discovered("C"), discovered("D_r")};
  }
  case Family::P6:
    if (n <= 10)
      return {pinned("A", profile_a(n, 2)), pinned("B", profile_a(n, n == 9 ? 4 : 3)),
              given("C", small_c(n)), given("D", small_d(n)), given("R", small_r(n))};
    return {pinned("A", profile_a(n, 2)), discovered("B"), discovered("C"),
            pinned("D", profile_b(n, 1))};
  case Family::P8:
    if (n == 9 && lambda == 18)
      return {pinned("A", profile_a(n, 4)), pinned("B", profile_a(n, 3)), discovered("C"),
              pinned("D", profile_b(n, 0)), given("R", nine_eighteen_r())};
    if (lambda == 2 * n - 1)
      return {pinned("A", profile_a(n, 2)), pinned("B", profile_a(n, 3)),
              pinned("C", profile_b(n, 1)), pinned("D", profile_b(n, 0)), discovered("R")};
    return {pinned("A", profile_a(n, 2)), pinned("B", profile_a(n, 3)),
            pinned("C", profile_b(n, 1)), discovered("D"), discovered("R")};
  case Family::T3: break;
  }
  throw Error(ErrorCode::OutOfDomain, "no cyclic template");
}

std::vector<DifferenceProfile> search_family_profiles(Family f, int n, int lambda) {
  const auto slots = family_slots(f, n, lambda);
  ProfileSearchConstraints c;
  for (const auto &s : slots)
    if (s.profile)
      c.fixed.push_back(*s.profile);
  const auto found = find_profiles(n, lambda, static_cast<int>(slots.size()), c).front();
  std::vector<DifferenceProfile> out;
  std::size_t next = c.fixed.size();
  for (const auto &s : slots)
    out.push_back(s.profile ? *s.profile : found[next++]);
  return out;
}

std::vector<DifferenceProfile> family_profiles(Family f, int n, int lambda) {
  const auto slots = family_slots(f, n, lambda);
  if (!has_discovered(slots)) {
    std::vector<DifferenceProfile> out;
    for (const auto &s : slots)
      out.push_back(*s.profile);
    return out;
  }
  auto &r = registry();
  std::lock_guard lock(r.mu);
  ensure_loaded(r);
  for (const auto &e : r.entries)
    if (e.family == f && e.n == n && e.lambda == lambda) {
      check_against_slots(e, slots);
      return e.profiles;
    }
  const auto key = std::make_tuple(f, n, lambda);
  auto it = r.searched.find(key);
  if (it == r.searched.end())
    it = r.searched.emplace(key, search_family_profiles(f, n, lambda)).first;
  return it->second;
}

Construction construct_family(Family f, int n, int lambda) {
  if (f == Family::T3)
    throw Error(ErrorCode::OutOfDomain, "T3 is built from (p, m); use construct_t3");
  const auto slots = family_slots(f, n, lambda);
  const auto profiles = family_profiles(f, n, lambda);
  StarterSet s{n, lambda, {}};
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].explicit_starter) {
      s.starters.emplace_back(*slots[i].explicit_starter);
      continue;
    }
    try {
      s.starters.push_back(find_starter(n, profiles[i], {kStarterBudget}));
    } catch (const Error &e) {
      throw Error(ErrorCode::StarterSearchFailed, "slot " + slots[i].name + " " +
                                                      profiles[i].to_string() + ": " + e.what());
    }
  }
  auto mf = assemble(s);
  return Construction{f, std::move(s), std::move(mf)};
}

Construction construct(int n, int lambda) { return construct_family(dispatch(n, lambda), n, lambda); }

MultiFactorization construct_t3(int p, int m) { return agl_orbit_factorization(field_ctx(p, m)); }

std::vector<CoverageEntry> coverage_table(int s) {
  if (s < 18)
    throw Error(ErrorCode::STooSmall, "coverage needs s >= 18, got " + std::to_string(s));
  std::vector<CoverageEntry> out;
  const int top = 2 * (s / 2) - 1;
  for (int lambda = 2; lambda <= top; ++lambda) {
    if (lambda == 2) {
      out.push_back({2, 5, Family::P2});
      continue;
    }
    for (int n = 9; n <= s / 2; ++n)
      if (lambda >= lambda_floor(n) && lambda <= 2 * n - 1) {
        out.push_back({lambda, n, dispatch(n, lambda)});
        break;
      }
  }
  return out;
}

boost::multiprecision::cpp_int upper_bound(int n, bool simple) {
  using boost::multiprecision::cpp_int;
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  cpp_int out = 1;
  if (simple) {
    for (int k = 3; k <= 2 * n - 3; ++k)
      out *= k;
    return out;
  }
  const long long e = static_cast<long long>(n) * (2 * n - 1);
  out = boost::multiprecision::pow(cpp_int(e), static_cast<unsigned>(e));
  const long long top = 2LL * n * n * n + 1LL * n * n - n + 1;
  const long long k = 2LL * n * n - n;
  cpp_int binom = 1;
  for (long long i = 1; i <= k; ++i) {
    binom *= top - k + i;
    binom /= i;
  }
  return out * binom;
}

std::vector<FixtureEntry> parse_fixtures(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("fixture file: ") + e.what());
  }
  std::vector<FixtureEntry> out;
  try {
    if (doc.at("format").get<int>() != 1)
      throw Error(ErrorCode::FixtureError, "unsupported fixture format");
    for (const auto &item : doc.at("fixtures")) {
      FixtureEntry e;
      e.family = parse_family(item.at("family").get<std::string>());
      e.n = item.at("n").get<int>();
      e.lambda = item.at("lambda").get<int>();
      e.provenance = item.value("provenance", "");
      if (e.n < 2)
        throw Error(ErrorCode::FixtureError, "fixture n out of range");
      for (const auto &p : item.at("profiles")) {
        DifferenceProfile d(e.n);
        for (const auto &[key, value] : p.items()) {
          const int a = std::stoi(key);
          if (a < 0 || a >= e.n || value.get<int>() < 0)
            throw Error(ErrorCode::FixtureError, "fixture profile entry out of range");
          d[a] = value.get<int>();
        }
        if (d.total() != e.n || d.displacement_sum() != 0)
          throw Error(ErrorCode::FixtureError,
                      "fixture profile " + d.to_string() + " is not the profile of a permutation");
        e.profiles.push_back(std::move(d));
      }
      out.push_back(std::move(e));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::FixtureError, std::string("fixture file: ") + e.what());
  } catch (const std::invalid_argument &) {
    throw Error(ErrorCode::FixtureError, "fixture profile key is not an integer");
  }
  return out;
}

std::string serialize_fixtures(const std::vector<FixtureEntry> &entries) {
  json list = json::array();
  for (const auto &e : entries) {
    json profiles = json::array();
    for (const auto &p : e.profiles) {
      json obj = json::object();
      for (const auto &[a, t] : p.nonzero())
        obj[std::to_string(a)] = t;
      profiles.push_back(std::move(obj));
    }
    list.push_back({{"family", family_name(e.family)},
                    {"n", e.n},
                    {"lambda", e.lambda},
                    {"profiles", std::move(profiles)},
                    {"provenance", e.provenance}});
  }
  json doc{{"format", 1}, {"fixtures", std::move(list)}};
  return doc.dump() + "\n";
}

void set_fixture_path(const std::string &path) {
  auto entries = parse_fixtures(path.empty() ? std::string(builtin_fixture_json()) : read_file(path));
  auto &r = registry();
  std::lock_guard lock(r.mu);
  r.entries = std::move(entries);
  r.loaded = true;
  r.searched.clear();
}

std::vector<FixtureEntry> active_fixtures() {
  auto &r = registry();
  std::lock_guard lock(r.mu);
  ensure_loaded(r);
  return r.entries;
}

std::vector<FixtureEntry> generate_fixtures(int n_min, int n_max) {
  std::vector<FixtureEntry> out;
  for (int n = std::max(n_min, 5); n <= n_max; ++n)
    for (int lambda = 2; lambda <= 2 * n; ++lambda) {
      Family f;
      try {
        f = dispatch(n, lambda);
      } catch (const Error &) {
        continue;
      }
      if (!has_discovered(family_slots(f, n, lambda)))
        continue;
      out.push_back({f, n, lambda, search_family_profiles(f, n, lambda),
                     "search-discovered: pool support<=4, first tuple in enumeration order"});
    }
  return out;
}

} // namespace onefact
