/* C interface to the onefact library. Every call returns an of_status; on
 * failure of_last_error() describes the problem for the calling thread.
 * Strings and arrays handed out by the library are released with the
 * matching *_free function. */
#ifndef ONEFACT_H
#define ONEFACT_H

#include <stddef.h>
#include <stdint.h>

#if defined(ONEFACT_BUILDING)
#define OF_API __attribute__((visibility("default")))
#else
#define OF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int of_status;

enum {
  OF_OK = 0,
  OF_ERR_INVALID_ARGUMENT = 1,
  OF_ERR_NOT_A_MATCHING = 2,
  OF_ERR_WRONG_SIZE = 3,
  OF_ERR_VERTEX_OUT_OF_RANGE = 4,
  OF_ERR_ODD_ORDER = 5,
  OF_ERR_EVEN_ORDER = 6,
  OF_ERR_NOT_A_PERMUTATION = 7,
  OF_ERR_NOT_CROSS_ONLY = 8,
  OF_ERR_PRECONDITION_FAILED = 9,
  OF_ERR_STABILIZER_NOT_TRIVIAL = 10,
  OF_ERR_PROFILE_SUM_INVALID = 11,
  OF_ERR_INFEASIBLE = 12,
  OF_ERR_NONE_FOUND = 13,
  OF_ERR_ORDERING_FAILED = 14,
  OF_ERR_OUT_OF_DOMAIN = 15,
  OF_ERR_NO_FAMILY = 16,
  OF_ERR_STARTER_SEARCH_FAILED = 17,
  OF_ERR_S_TOO_SMALL = 18,
  OF_ERR_NOT_PRIME = 19,
  OF_ERR_EVEN_P = 20,
  OF_ERR_DIVISION_BY_ZERO = 21,
  OF_ERR_INVALID_INPUT = 22,
  OF_ERR_HYPOTHESES_UNMET = 23,
  OF_ERR_PARSE = 24,
  OF_ERR_FIXTURE = 25,
  OF_ERR_NULL_POINTER = 90,
  OF_ERR_INTERNAL = 99
};

enum { OF_CERT_UNKNOWN = 0, OF_CERT_PROVEN = 1 };
enum { OF_OUTCOME_PROVEN_NONE = 0, OF_OUTCOME_FOUND = 1, OF_OUTCOME_EXHAUSTED = 2 };
enum { OF_SCALE_QUICK = 0, OF_SCALE_FULL = 1 };

typedef struct of_factorization of_factorization;

typedef struct {
  uint64_t max_nodes; /* 0: unlimited */
  double max_seconds; /* 0: unlimited */
} of_budget;

typedef struct {
  int outcome;
  int lambda0;        /* witness only */
  size_t witness_size;
  size_t *witness;    /* sorted factor indices; NULL unless outcome is FOUND */
  uint64_t nodes;
  double seconds;
} of_search_result;

typedef struct {
  int lambda;
  int base_n;
  char family[4];
} of_coverage_entry;

typedef void (*of_criterion_callback)(const char *id, int pass, double seconds,
                                      const char *detail, void *user);

OF_API const char *of_version(void);
OF_API const char *of_last_error(void);
OF_API const char *of_status_name(of_status status);
OF_API void of_string_free(char *s);

/* construction */
OF_API of_status of_construct(int n, int lambda, of_factorization **out);
OF_API of_status of_construct_family(const char *family, int n, int lambda, of_factorization **out);
OF_API of_status of_construct_agl(int p, int m, of_factorization **out);
OF_API void of_factorization_free(of_factorization *f);

/* accessors */
OF_API int of_factorization_n(const of_factorization *f);
OF_API int of_factorization_lambda(const of_factorization *f);
OF_API size_t of_factorization_size(const of_factorization *f);
/* family id ("P1".."P8", "T3") or "" for parsed documents */
OF_API const char *of_factorization_family(const of_factorization *f);
/* writes 2n vertex ids (u0, v0, u1, v1, ...) into edges */
OF_API of_status of_factorization_factor(const of_factorization *f, size_t index, int *edges,
                                         size_t capacity);

/* documents */
OF_API of_status of_from_json(const char *text, of_factorization **out);
OF_API of_status of_to_json(const of_factorization *f, char **out);

/* checks */
OF_API of_status of_validate(const of_factorization *f, int *valid, size_t *discrepancies);
OF_API of_status of_is_simple(const of_factorization *f, int *simple);
/* needs the starters: constructed cyclic factorizations, or documents whose
 * model block lists them */
OF_API of_status of_certificate(const of_factorization *f, int *status);
OF_API of_status of_find_subfactorization(const of_factorization *f, int lambda0,
                                          const of_budget *budget, of_search_result *out);
OF_API void of_search_result_free(of_search_result *r);
OF_API of_status of_witness_check(const of_factorization *f, int lambda0, const size_t *indices,
                                  size_t count, int *ok);

/* bookkeeping */
OF_API of_status of_coverage_table(int s, of_coverage_entry *entries, size_t capacity,
                                   size_t *count);
OF_API of_status of_upper_bound(int n, int simple, char **decimal);

/* fixtures of discovered profiles */
OF_API of_status of_set_fixture_path(const char *path);
OF_API of_status of_generate_fixtures(int n_min, int n_max, char **json);

/* acceptance suite; all_pass is 1 when every criterion passed */
OF_API of_status of_run_acceptance(int scale, of_criterion_callback cb, void *user, int *all_pass);

#ifdef __cplusplus
}
#endif

#endif
