// Thin driver over the C interface. Exit codes: 0 ok, 1 a requested check
// failed, 2 usage / parse / no family / out of domain, 3 construction
// failure, 4 search budget exhausted.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onefact/onefact.h"

namespace {

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2, Construction = 3, Budget = 4 };

struct FactFree {
  void operator()(of_factorization *f) const { of_factorization_free(f); }
};
using Fact = std::unique_ptr<of_factorization, FactFree>;

int exit_for(of_status s) {
  switch (s) {
  case OF_OK:
    return Ok;
  case OF_ERR_STARTER_SEARCH_FAILED:
  case OF_ERR_NONE_FOUND:
  case OF_ERR_INFEASIBLE:
  case OF_ERR_FIXTURE:
  case OF_ERR_INTERNAL:
    return Construction;
  default:
    return Usage;
  }
}

int report_error(of_status s) {
  std::cerr << "error: " << of_last_error() << "\n";
  return exit_for(s);
}

std::string take(char *s) {
  std::string out = s ? s : "";
  of_string_free(s);
  return out;
}

bool write_file(const std::string &path, const std::string &text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (text.empty() || text.back() != '\n')
    os << '\n';
  return static_cast<bool>(os);
}

std::string cert_word(const of_factorization *f) {
  int status = 0;
  const of_status s = of_certificate(f, &status);
  if (s == OF_ERR_HYPOTHESES_UNMET || s == OF_ERR_PRECONDITION_FAILED)
    return "n/a";
  if (s != OF_OK)
    return "error";
  return status == OF_CERT_PROVEN ? "proven" : "unknown";
}

int cmd_construct(const std::string &family, int n, int lambda, int p, int m,
                  const std::string &out) {
  of_factorization *raw = nullptr;
  of_status s;
  std::string fam = family;
  for (auto &c : fam)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (fam == "T3" && p > 0)
    s = of_construct_agl(p, m, &raw);
  else if (!fam.empty())
    s = of_construct_family(fam.c_str(), n, lambda, &raw);
  else
    s = of_construct(n, lambda, &raw);
  if (s != OF_OK)
    return report_error(s);
  Fact f(raw);

  int valid = 0, simple = 0;
  if ((s = of_validate(f.get(), &valid, nullptr)) != OF_OK ||
      (s = of_is_simple(f.get(), &simple)) != OF_OK)
    return report_error(s);

  char *json = nullptr;
  if ((s = of_to_json(f.get(), &json)) != OF_OK)
    return report_error(s);
  const std::string doc = take(json);
  if (!out.empty() && !write_file(out, doc)) {
    std::cerr << "error: cannot write " << out << "\n";
    return Usage;
  }
  if (out.empty())
    std::cout << doc << "\n";

  const char *fid = of_factorization_family(f.get());
  std::ostringstream line;
  line << "family=" << (*fid ? fid : "-") << " n=" << of_factorization_n(f.get())
       << " lambda=" << of_factorization_lambda(f.get())
       << " factors=" << of_factorization_size(f.get()) << ' '
       << (valid ? "valid" : "invalid") << " simple=" << (simple ? "true" : "false")
       << " certificate=" << cert_word(f.get());
  (out.empty() ? std::cerr : std::cout) << line.str() << "\n";
  return valid ? Ok : Construction;
}

std::vector<std::string> split(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

int cmd_verify(const std::string &path, const std::string &checks, of_budget budget,
               int lambda0) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    std::cerr << "error: cannot read " << path << "\n";
    return Usage;
  }
  std::stringstream buf;
  buf << is.rdbuf();
  of_factorization *raw = nullptr;
  if (of_status s = of_from_json(buf.str().c_str(), &raw); s != OF_OK)
    return report_error(s);
  Fact f(raw);

  bool failed = false, exhausted = false;
  std::cout << "n=" << of_factorization_n(f.get()) << " lambda=" << of_factorization_lambda(f.get())
            << " factors=" << of_factorization_size(f.get()) << "\n";
  for (const auto &check : split(checks)) {
    if (check == "validity") {
      int valid = 0;
      size_t bad = 0;
      if (of_status s = of_validate(f.get(), &valid, &bad); s != OF_OK)
        return report_error(s);
      std::cout << "validity=" << (valid ? "pass" : "fail") << " discrepancies=" << bad << "\n";
      if (!valid) {
        std::cout << "validity_detail=" << of_last_error() << "\n";
        failed = true;
      }
    } else if (check == "simple") {
      int simple = 0;
      if (of_status s = of_is_simple(f.get(), &simple); s != OF_OK)
        return report_error(s);
      std::cout << "simple=" << (simple ? "pass" : "fail") << "\n";
      failed = failed || !simple;
    } else if (check == "certificate") {
      const std::string w = cert_word(f.get());
      std::cout << "certificate=" << w << "\n";
      failed = failed || w != "proven";
    } else if (check == "indecomposable") {
      of_search_result r{};
      if (of_status s = of_find_subfactorization(f.get(), lambda0, &budget, &r); s != OF_OK)
        return report_error(s);
      static const char *names[] = {"proven_none", "found", "exhausted"};
      std::cout << "indecomposable=" << (r.outcome == OF_OUTCOME_PROVEN_NONE ? "pass" : "fail")
                << " outcome=" << names[r.outcome] << " nodes=" << r.nodes
                << " seconds=" << r.seconds << "\n";
      if (r.outcome == OF_OUTCOME_FOUND) {
        std::cout << "witness lambda0=" << r.lambda0 << " factors=";
        for (size_t i = 0; i < r.witness_size; ++i)
          std::cout << (i ? "," : "") << r.witness[i];
        std::cout << "\n";
        failed = true;
      } else if (r.outcome == OF_OUTCOME_EXHAUSTED) {
        exhausted = true;
      }
      of_search_result_free(&r);
    } else {
      std::cerr << "error: unknown check '" << check << "'\n";
      return Usage;
    }
  }
  if (failed)
    return CheckFailed;
  return exhausted ? Budget : Ok;
}

int cmd_coverage(int s) {
  std::vector<of_coverage_entry> rows(static_cast<size_t>(s > 0 ? s : 1));
  size_t count = 0;
  if (of_status st = of_coverage_table(s, rows.data(), rows.size(), &count); st != OF_OK)
    return report_error(st);
  for (size_t i = 0; i < count; ++i)
    std::cout << "lambda=" << rows[i].lambda << " n=" << rows[i].base_n
              << " family=" << rows[i].family << "\n";
  return Ok;
}

void print_criterion(const char *id, int pass, double seconds, const char *detail, void *) {
  std::printf("%s %s %.2fs %s\n", id, pass ? "PASS" : "FAIL", seconds, detail);
  std::fflush(stdout);
}

int cmd_selftest(const std::string &scale) {
  int all = 0;
  const int sc = scale == "full" ? OF_SCALE_FULL : OF_SCALE_QUICK;
  if (of_status s = of_run_acceptance(sc, print_criterion, nullptr, &all); s != OF_OK)
    return report_error(s);
  return all ? Ok : CheckFailed;
}

int cmd_profiles(int n_min, int n_max, const std::string &out) {
  char *json = nullptr;
  if (of_status s = of_generate_fixtures(n_min, n_max, &json); s != OF_OK)
    return report_error(s);
  const std::string text = take(json);
  if (out.empty()) {
    std::cout << text;
  } else if (!write_file(out, text)) {
    std::cerr << "error: cannot write " << out << "\n";
    return Usage;
  }
  return Ok;
}

int cmd_bound(int n, bool simple) {
  char *dec = nullptr;
  if (of_status s = of_upper_bound(n, simple ? 1 : 0, &dec); s != OF_OK)
    return report_error(s);
  std::cout << take(dec) << "\n";
  return Ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"1-factorizations of complete multigraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(of_version()));
  std::string fixtures;
  app.add_option("--fixtures", fixtures, "profile fixture file replacing the built-in one");

  auto *construct = app.add_subcommand("construct", "build a factorization and write its document");
  std::string family, out;
  int n = 0, lambda = 0, p = 0, m = 1;
  construct->add_option("--family", family, "P1..P8 or T3; default picks by (n, lambda)");
  construct->add_option("--n", n, "half the vertex count");
  construct->add_option("--lambda", lambda, "edge multiplicity");
  construct->add_option("--p", p, "T3 only: field characteristic");
  construct->add_option("--m", m, "T3 only: field degree");
  construct->add_option("--out", out, "output path; stdout if omitted");

  auto *verify = app.add_subcommand("verify", "check a factorization document");
  std::string in, checks = "validity,simple";
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  int lambda0 = 0;
  verify->add_option("file", in, "document path")->required();
  verify->add_option("--checks", checks, "comma list of validity,simple,indecomposable,certificate");
  verify->add_option("--max-nodes", max_nodes, "search node budget, 0 unlimited");
  verify->add_option("--max-seconds", max_seconds, "search time budget, 0 unlimited")
      ->envname("ONEFACT_SEARCH_SECONDS");
  verify->add_option("--lambda0", lambda0, "only look for this sub-multiplicity");

  auto *coverage = app.add_subcommand("coverage", "which family and base n cover each lambda");
  int s = 0;
  coverage->add_option("--s", s, "vertex count")->required();

  auto *selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  std::string scale = "quick";
  selftest->add_option("--scale", scale)->check(CLI::IsMember({"quick", "full"}));

  auto *profiles = app.add_subcommand("profiles", "regenerate the profile fixture file");
  int n_min = 5, n_max = 20;
  profiles->add_option("--n-min", n_min);
  profiles->add_option("--n-max", n_max);
  std::string pout;
  profiles->add_option("--out", pout);

  auto *bound = app.add_subcommand("bound", "upper bound on the number of 1-factorizations");
  int bn = 0;
  bool bsimple = false;
  bound->add_option("--n", bn)->required();
  bound->add_flag("--simple", bsimple);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  if (!fixtures.empty())
    if (of_status st = of_set_fixture_path(fixtures.c_str()); st != OF_OK)
      return report_error(st);

  if (*construct)
    return cmd_construct(family, n, lambda, p, m, out);
  if (*verify)
    return cmd_verify(in, checks, of_budget{max_nodes, max_seconds}, lambda0);
  if (*coverage)
    return cmd_coverage(s);
  if (*selftest)
    return cmd_selftest(scale);
  if (*profiles)
    return cmd_profiles(n_min, n_max, pout);
  return cmd_bound(bn, bsimple);
}
