#ifndef COSPANLIM_H
#define COSPANLIM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes shared by every entry point. Functions return CSL_OK and fill
 * their out-parameters, or return an error code and leave a message in
 * csl_last_error() for the calling thread. */
#define CSL_OK 0
#define CSL_ERR_INVALID 1
#define CSL_ERR_PARSE 2
#define CSL_ERR_TYPE 3
#define CSL_ERR_PROPERTY 4

typedef struct csl_diagram csl_diagram;     /* diagram with interface, plain or monoidal */
typedef struct csl_expr csl_expr;           /* algebra expression */
typedef struct csl_arrow csl_arrow;         /* evaluated cospan or span */
typedef struct csl_automaton csl_automaton; /* nondeterministic automaton */

const char* csl_version(void);

/* Message for the most recent failure on this thread; "" if none. The
 * pointer stays valid until the next failing call on the same thread. */
const char* csl_last_error(void);

/* Frees any char* produced by this library. */
void csl_string_free(char* s);

int csl_diagram_parse_json(const char* text, csl_diagram** out);
void csl_diagram_free(csl_diagram* d);
int csl_diagram_is_monoidal(const csl_diagram* d, int* out);
int csl_diagram_colimit(const csl_diagram* d, csl_arrow** out);
/* Limit of a plain diagram; monoidal input is a type error. */
int csl_diagram_limit(const csl_diagram* d, csl_arrow** out);
/* Compiles a plain diagram to an expression; monoidal input is a type error. */
int csl_diagram_compile(const csl_diagram* d, csl_expr** out);
int csl_diagram_to_json(const csl_diagram* d, char** out);
int csl_diagram_to_dot(const csl_diagram* d, char** out);

int csl_expr_parse(const char* text, csl_expr** out);
void csl_expr_free(csl_expr* e);
int csl_expr_print(const csl_expr* e, char** out);
/* span_mode 0 evaluates in cospans, nonzero in spans. */
int csl_expr_eval(const csl_expr* e, int span_mode, csl_arrow** out);

void csl_arrow_free(csl_arrow* a);
int csl_arrow_is_span(const csl_arrow* a, int* out);
int csl_arrow_apex_size(const csl_arrow* a, int* out);
int csl_arrow_to_text(const csl_arrow* a, char** out);
int csl_arrow_to_json(const csl_arrow* a, char** out);

int csl_automaton_parse_json(const char* text, csl_automaton** out);
void csl_automaton_free(csl_automaton* a);
/* Regular-expression table over all (initial, final) pairs. */
int csl_kleene_text(const csl_automaton* a, char** out);
int csl_kleene_json(const csl_automaton* a, char** out);

/* Runs the named property suite ("" or NULL runs all suites) with the given
 * seed and bounds. *report always receives the textual report. Returns
 * CSL_ERR_PROPERTY when a counterexample was found. */
int csl_check_run(const char* suite, uint64_t seed, int sizes, int count, int max_len,
                  char** report);

#ifdef __cplusplus
}
#endif

#endif /* COSPANLIM_H */
