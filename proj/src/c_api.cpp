#include "onefact/onefact.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "onefact/acceptance.hpp"
#include "onefact/catalog.hpp"
#include "onefact/document.hpp"
#include "onefact/field.hpp"
#include "onefact/verify.hpp"

struct of_factorization {
  onefact::MultiFactorization mf;
  std::optional<onefact::StarterSet> starters;
  std::string family;
};

namespace {

thread_local std::string last_error;

of_status fail(of_status s, const std::string &msg) {
  last_error = msg;
  return s;
}

// Runs body, turning exceptions into status codes.
template <class F> of_status guarded(F &&body) {
  try {
    last_error.clear();
    return body();
  } catch (const onefact::Error &e) {
    return fail(static_cast<of_status>(e.code()) + 1, e.what());
  } catch (const std::bad_alloc &) {
    return fail(OF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(OF_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  auto *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Starters recorded in a cyclic model block.
std::optional<onefact::StarterSet> starters_from_model(const onefact::MultiFactorization &mf) {
  const auto &model = mf.model();
  if (model.kind != onefact::ModelKind::Cyclic)
    return std::nullopt;
  onefact::StarterSet s{mf.n(), mf.lambda(), {}};
  for (const auto &pi : model.starters)
    s.starters.emplace_back(pi);
  return s;
}

} // namespace

extern "C" {

const char *of_version(void) { return "1.0.0"; }

const char *of_last_error(void) { return last_error.c_str(); }

const char *of_status_name(of_status status) {
  if (status == OF_OK)
    return "Ok";
  if (status == OF_ERR_NULL_POINTER)
    return "NullPointer";
  if (status == OF_ERR_INTERNAL)
    return "Internal";
  if (status >= OF_ERR_INVALID_ARGUMENT && status <= OF_ERR_FIXTURE)
    return onefact::error_code_name(static_cast<onefact::ErrorCode>(status - 1));
  return "Unknown";
}

void of_string_free(char *s) { std::free(s); }

of_status of_construct(int n, int lambda, of_factorization **out) {
  if (!out)
    return fail(OF_ERR_NULL_POINTER, "out is null");
  return guarded([&] {
    auto built = onefact::construct(n, lambda);
    *out = new of_factorization{std::move(built.mf), std::move(built.starters),
                                onefact::family_name(built.family)};
    return OF_OK;
  });
}

of_status of_construct_family(const char *family, int n, int lambda, of_factorization **out) {
  if (!out || !family)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    const auto f = onefact::parse_family(family);
    if (f == onefact::Family::T3) {
      // 2n - 1 = p^m
      if (!onefact::in_domain(f, n, lambda))
        throw onefact::Error(onefact::ErrorCode::OutOfDomain, "T3 needs 2n-1 a prime power and lambda = n-1");
      int q = 2 * n - 1, p = 3;
      while (q % p != 0)
        p += 2;
      int m = 0;
      while (q > 1) {
        q /= p;
        ++m;
      }
      *out = new of_factorization{onefact::construct_t3(p, m), std::nullopt, "T3"};
      return OF_OK;
    }
    auto built = onefact::construct_family(f, n, lambda);
    *out = new of_factorization{std::move(built.mf), std::move(built.starters),
                                onefact::family_name(built.family)};
    return OF_OK;
  });
}

of_status of_construct_agl(int p, int m, of_factorization **out) {
  if (!out)
    return fail(OF_ERR_NULL_POINTER, "out is null");
  return guarded([&] {
    *out = new of_factorization{onefact::construct_t3(p, m), std::nullopt, "T3"};
    return OF_OK;
  });
}

void of_factorization_free(of_factorization *f) { delete f; }

int of_factorization_n(const of_factorization *f) { return f ? f->mf.n() : 0; }
int of_factorization_lambda(const of_factorization *f) { return f ? f->mf.lambda() : 0; }
size_t of_factorization_size(const of_factorization *f) { return f ? f->mf.size() : 0; }
const char *of_factorization_family(const of_factorization *f) {
  return f ? f->family.c_str() : "";
}

of_status of_factorization_factor(const of_factorization *f, size_t index, int *edges,
                                  size_t capacity) {
  if (!f || !edges)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  if (index >= f->mf.size())
    return fail(OF_ERR_INVALID_ARGUMENT, "factor index out of range");
  const auto &factor = f->mf.factors()[index];
  if (capacity < 2 * factor.size())
    return fail(OF_ERR_INVALID_ARGUMENT, "buffer needs 2n entries");
  for (std::size_t i = 0; i < factor.size(); ++i) {
    edges[2 * i] = factor.edges()[i].u;
    edges[2 * i + 1] = factor.edges()[i].v;
  }
  return OF_OK;
}

of_status of_from_json(const char *text, of_factorization **out) {
  if (!text || !out)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    auto mf = onefact::parse_document(text);
    auto starters = starters_from_model(mf);
    *out = new of_factorization{std::move(mf), std::move(starters), ""};
    return OF_OK;
  });
}

of_status of_to_json(const of_factorization *f, char **out) {
  if (!f || !out)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    *out = dup_string(onefact::serialize_document(f->mf));
    return OF_OK;
  });
}

of_status of_validate(const of_factorization *f, int *valid, size_t *discrepancies) {
  if (!f || !valid)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    const auto report = onefact::validate_factorization(f->mf);
    *valid = report.valid ? 1 : 0;
    if (discrepancies)
      *discrepancies = report.discrepancies.size() + report.factor_errors.size();
    if (!report.valid) {
      std::string msg;
      for (const auto &d : report.discrepancies) {
        msg += "[" + std::to_string(d.edge.u) + "," + std::to_string(d.edge.v) + "] x" +
               std::to_string(d.observed) + " ";
        if (msg.size() > 200)
          break;
      }
      for (const auto &e : report.factor_errors)
        msg += "factor " + std::to_string(e.index) + ": " + e.reason + " ";
      last_error = msg;
    }
    return OF_OK;
  });
}

of_status of_is_simple(const of_factorization *f, int *simple) {
  if (!f || !simple)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    *simple = onefact::is_simple(f->mf).simple ? 1 : 0;
    return OF_OK;
  });
}

of_status of_certificate(const of_factorization *f, int *status) {
  if (!f || !status)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  if (!f->starters)
    return fail(OF_ERR_HYPOTHESES_UNMET, "no starter set recorded for this factorization");
  return guarded([&] {
    const auto cert = onefact::certificate_indecomposable(*f->starters);
    *status = cert.status == onefact::CertificateStatus::Proven ? OF_CERT_PROVEN : OF_CERT_UNKNOWN;
    return OF_OK;
  });
}

of_status of_find_subfactorization(const of_factorization *f, int lambda0, const of_budget *budget,
                                   of_search_result *out) {
  if (!f || !out)
    return fail(OF_ERR_NULL_POINTER, "null argument");
  *out = of_search_result{};
  return guarded([&] {
    onefact::SearchBudget b;
    if (budget) {
      b.max_nodes = budget->max_nodes;
      b.max_seconds = budget->max_seconds;
    }
    const auto res = onefact::find_subfactorization(
        f->mf, lambda0 > 0 ? std::optional<int>(lambda0) : std::nullopt, b);
    out->outcome = res.outcome == onefact::Outcome::Found       ? OF_OUTCOME_FOUND
                   : res.outcome == onefact::Outcome::Exhausted ? OF_OUTCOME_EXHAUSTED
                                                                : OF_OUTCOME_PROVEN_NONE;
    out->nodes = res.nodes;
    out->seconds = res.seconds;
    if (res.witness) {
      out->lambda0 = res.witness->lambda0;
      out->witness_size = res.witness->indices.size();
      out->witness = static_cast<size_t *>(std::malloc(sizeof(size_t) * (out->witness_size + 1)));
      if (!out->witness)
        throw std::bad_alloc();
      std::copy(res.witness->indices.begin(), res.witness->indices.end(), out->witness);
    }
    return OF_OK;
  });
}

void of_search_result_free(of_search_result *r) {
  if (!r)
    return;
  std::free(r->witness);
  r->witness = nullptr;
  r->witness_size = 0;
}

of_status of_witness_check(const of_factorization *f, int lambda0, const size_t *indices,
                           size_t count, int *ok) {
  if (!f || !ok || (!indices && count))
    return fail(OF_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    onefact::Witness w{lambda0, std::vector<std::size_t>(indices, indices + count)};
    *ok = onefact::decomposability_witness_check(f->mf, w) ? 1 : 0;
    return OF_OK;
  });
}

of_status of_coverage_table(int s, of_coverage_entry *entries, size_t capacity, size_t *count) {
  if (!count)
    return fail(OF_ERR_NULL_POINTER, "count is null");
  return guarded([&] {
    const auto table = onefact::coverage_table(s);
    *count = table.size();
    if (entries)
      for (std::size_t i = 0; i < table.size() && i < capacity; ++i) {
        entries[i].lambda = table[i].lambda;
        entries[i].base_n = table[i].base_n;
        std::snprintf(entries[i].family, sizeof entries[i].family, "%s",
                      onefact::family_name(table[i].family));
      }
    return OF_OK;
  });
}

of_status of_upper_bound(int n, int simple, char **decimal) {
  if (!decimal)
    return fail(OF_ERR_NULL_POINTER, "decimal is null");
  return guarded([&] {
    *decimal = dup_string(onefact::upper_bound(n, simple != 0).str());
    return OF_OK;
  });
}

of_status of_set_fixture_path(const char *path) {
  return guarded([&] {
    onefact::set_fixture_path(path ? path : "");
    return OF_OK;
  });
}

of_status of_generate_fixtures(int n_min, int n_max, char **json) {
  if (!json)
    return fail(OF_ERR_NULL_POINTER, "json is null");
  return guarded([&] {
    *json = dup_string(onefact::serialize_fixtures(onefact::generate_fixtures(n_min, n_max)));
    return OF_OK;
  });
}

of_status of_run_acceptance(int scale, of_criterion_callback cb, void *user, int *all_pass) {
  return guarded([&] {
    const auto results = onefact::run_acceptance(
        scale == OF_SCALE_FULL ? onefact::Scale::Full : onefact::Scale::Quick,
        [&](const onefact::CriterionResult &r) {
          if (cb)
            cb(r.id.c_str(), r.pass ? 1 : 0, r.seconds, r.detail.c_str(), user);
        });
    bool ok = true;
    for (const auto &r : results)
      ok = ok && r.pass;
    if (all_pass)
      *all_pass = ok ? 1 : 0;
    return OF_OK;
  });
}

} // extern "C"
