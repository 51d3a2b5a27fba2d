#ifndef PQALG_PQALG_H
#define PQALG_PQALG_H

#include <stddef.h>

#if defined(PQALG_BUILDING_LIBRARY)
#define PQALG_EXPORT __attribute__((visibility("default")))
#else
#define PQALG_EXPORT
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pqalg_status {
  PQALG_OK = 0,
  PQALG_CHECK_FAILED = 1,
  PQALG_INVALID_INPUT = 2,
  PQALG_HYPOTHESIS_VIOLATION = 3,
  PQALG_PRESENTATION_MISMATCH = 4,
  PQALG_ASSOCIATIVITY_VIOLATION = 5,
  PQALG_CONSTRUCTION_FAILURE = 6,
  PQALG_WITNESS_INVALID = 7,
  PQALG_PRECONDITION_VIOLATION = 8,
  PQALG_INTERNAL = 9,
  PQALG_NULL_ARGUMENT = 10
} pqalg_status;

typedef enum pqalg_format { PQALG_FORMAT_TEXT = 0, PQALG_FORMAT_JSON = 1, PQALG_FORMAT_PRETTY = 2 } pqalg_format;

typedef struct pqalg_presentation pqalg_presentation;
typedef struct pqalg_element pqalg_element;
typedef struct pqalg_matrix pqalg_matrix;
typedef struct pqalg_model pqalg_model;

/* Message of the last failed call on this thread; never NULL. */
PQALG_EXPORT const char* pqalg_last_error(void);
PQALG_EXPORT const char* pqalg_status_name(pqalg_status status);
/* Strings returned through char** out-parameters are owned by the caller. */
PQALG_EXPORT void pqalg_string_free(char* s);

/* vanishing: 0 for (qp)_k = 0, 1 for (pq)_k = 0 (odd n only). */
PQALG_EXPORT pqalg_status pqalg_presentation_zn(int n, int vanishing, pqalg_presentation** out);
/* family: "F1".."F4" */
PQALG_EXPORT pqalg_status pqalg_presentation_family(const char* family, int m, pqalg_presentation** out);
PQALG_EXPORT pqalg_status pqalg_presentation_from_json(const char* json, pqalg_presentation** out);
PQALG_EXPORT pqalg_status pqalg_presentation_to_json(const pqalg_presentation* p, char** out);
PQALG_EXPORT pqalg_status pqalg_presentation_dimension(const pqalg_presentation* p, size_t* out);
PQALG_EXPORT void pqalg_presentation_free(pqalg_presentation* p);

/* start: 'P' or 'Q'. The result is the normal form of the word. */
PQALG_EXPORT pqalg_status pqalg_element_word(const pqalg_presentation* p, char start, int order, pqalg_element** out);
PQALG_EXPORT pqalg_status pqalg_element_from_json(const char* json, pqalg_element** out);
PQALG_EXPORT pqalg_status pqalg_element_to_json(const pqalg_element* a, char** out);
PQALG_EXPORT pqalg_status pqalg_element_add(const pqalg_element* a, const pqalg_element* b, pqalg_element** out);
PQALG_EXPORT pqalg_status pqalg_element_mul(const pqalg_element* a, const pqalg_element* b, pqalg_element** out);
/* c: rational text "a" or "a/b" */
PQALG_EXPORT pqalg_status pqalg_element_scale(const pqalg_element* a, const char* c, pqalg_element** out);
PQALG_EXPORT pqalg_status pqalg_element_equal(const pqalg_element* a, const pqalg_element* b, int* out);
PQALG_EXPORT pqalg_status pqalg_element_drazin(const pqalg_element* a, pqalg_element** inverse, int* index);
PQALG_EXPORT void pqalg_element_free(pqalg_element* a);

PQALG_EXPORT pqalg_status pqalg_matrix_from_json(const char* json, pqalg_matrix** out);
PQALG_EXPORT pqalg_status pqalg_matrix_to_json(const pqalg_matrix* m, char** out);
PQALG_EXPORT pqalg_status pqalg_matrix_rank(const pqalg_matrix* m, size_t* out);
PQALG_EXPORT pqalg_status pqalg_matrix_drazin(const pqalg_matrix* m, pqalg_matrix** inverse, int* index);
PQALG_EXPORT void pqalg_matrix_free(pqalg_matrix* m);

PQALG_EXPORT pqalg_status pqalg_model_family(const char* family, int m, pqalg_model** out);
/* ambient_unit: nonzero keeps the ambient identity inside the algebra. */
PQALG_EXPORT pqalg_status pqalg_model_zn(int n, int ambient_unit, int vanishing, pqalg_model** out);
PQALG_EXPORT pqalg_status pqalg_model_to_json(const pqalg_model* model, char** out);
PQALG_EXPORT pqalg_status pqalg_model_represent(const pqalg_model* model, const pqalg_element* a, pqalg_matrix** out);
PQALG_EXPORT void pqalg_model_free(pqalg_model* model);

/* Runs a command (classify, drazin, table, models, verify) on a JSON request
   and renders the report. pretty_json may be NULL; otherwise it receives the
   same report as indented JSON. Input errors are reported through *exit_code
   and the report; the status is nonzero only if no report could be produced. */
PQALG_EXPORT pqalg_status pqalg_run(const char* command, const char* request_json, pqalg_format format, char** report,
                                    char** pretty_json, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
