/* crsym C interface. Strings returned through char** are owned by the caller
   and released with crsym_string_free. */
#ifndef CRSYM_H
#define CRSYM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CRSYM_API __declspec(dllexport)
#else
#define CRSYM_API __attribute__((visibility("default")))
#endif

typedef enum crsym_error {
  CRSYM_OK = 0,
  CRSYM_ERR_NULL_ARGUMENT = 1,
  CRSYM_ERR_UNKNOWN_SUITE = 2,
  CRSYM_ERR_INVALID_PARAMS = 3,
  CRSYM_ERR_IO = 4,
  CRSYM_ERR_BAD_FORMAT = 5,
  CRSYM_ERR_INTERNAL = 6
} crsym_error;

typedef enum crsym_status { CRSYM_PASS = 0, CRSYM_FAIL = 1, CRSYM_FINDING = 2 } crsym_status;

/* Bits of crsym_params.set marking which optional fields are present. */
enum {
  CRSYM_HAS_N = 1 << 0,
  CRSYM_HAS_D = 1 << 1,
  CRSYM_HAS_S = 1 << 2,
  CRSYM_HAS_K = 1 << 3,
  CRSYM_HAS_DIM = 1 << 4,
  CRSYM_HAS_W1 = 1 << 5,
  CRSYM_HAS_W2 = 1 << 6,
  CRSYM_HAS_DEG = 1 << 7
};

typedef struct crsym_params {
  unsigned set;
  int n, d, s, k, dim, w1, w2, deg;
  uint64_t seed;
} crsym_params;

typedef struct crsym_report crsym_report;

CRSYM_API void crsym_params_init(crsym_params* p);

CRSYM_API crsym_error crsym_run_suite(const char* suite, const crsym_params* params, crsym_report** out);
CRSYM_API crsym_error crsym_report_status(const crsym_report* r, crsym_status* out);
CRSYM_API crsym_error crsym_report_json(const crsym_report* r, int with_timing, char** out);
CRSYM_API crsym_error crsym_report_csv(const crsym_report* r, char** out);
/* format is "json" or "csv"; parent directories are created. */
CRSYM_API crsym_error crsym_report_write(const crsym_report* r, const char* path, const char* format);
CRSYM_API void crsym_report_free(crsym_report* r);

/* format is "json" or "csv". */
CRSYM_API crsym_error crsym_table_classalg(int k, const char* format, char** out);
CRSYM_API crsym_error crsym_table_isotypic(int k, int dim, char** out);

CRSYM_API void crsym_string_free(char* s);
/* Message for the last error on this thread; empty after a success. */
CRSYM_API const char* crsym_last_error(void);
CRSYM_API const char* crsym_version(void);
CRSYM_API const char* crsym_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif
