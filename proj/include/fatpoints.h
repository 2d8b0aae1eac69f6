#ifndef FATPOINTS_H
#define FATPOINTS_H

/* C interface to the fat-points linear-system library.
 *
 * All functions returning fp_status report FP_OK on success. On any other
 * status, fp_last_error() describes the failure; the message is thread-local
 * and valid until the next library call on the same thread. Strings returned
 * through char** are heap-allocated and must be released with
 * fp_string_free(); objects returned through handle pointers must be released
 * with the matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
    FP_OK = 0,
    FP_NOT_FOUND = 1,     /* a search finished without a result */
    FP_NOT_VERIFIED = 2,  /* a certificate failed re-validation */
    FP_ERR_PARSE = 3,
    FP_ERR_INVALID = 4,   /* invalid argument or inconsistent input */
    FP_ERR_DOMAIN = 5,    /* operation outside its mathematical domain */
    FP_ERR_CAP = 6,       /* an exact computation exceeded its size cap */
    FP_ERR_INTERNAL = 7
} fp_status;

typedef struct fp_system fp_system;
typedef struct fp_certificate fp_certificate;

typedef struct fp_options {
    uint64_t field_prime; /* 0: the built-in 61-bit prime */
    int trials;           /* 0: per-operation default */
    uint64_t seed;        /* 0 is a valid seed */
    int depth;            /* proof search depth; 0: default */
    int jobs;             /* worker threads for campaigns; 0: one */
} fp_options;

/* Fill with the defaults described above. */
void fp_options_init(fp_options* opts);

/* diagram: column notation "2^3,1^0" or a point list "[(0,3),(1,0)]";
 * mults: "7x6,6x4,1". */
fp_status fp_system_parse(const char* diagram, const char* mults, fp_system** out);

/* L_d(mults) on the full triangle of the given degree. */
fp_status fp_system_plane(int64_t degree, const char* mults, fp_system** out);

void fp_system_free(fp_system* sys);

/* Monte-Carlo dimension count. JSON object with dim, vdim, edim, certainty,
 * error_bound, trials. */
fp_status fp_dim(const fp_system* sys, const fp_options* opts, char** json_out);

/* Search for a cut certificate of non-speciality. FP_NOT_FOUND when the
 * bounded search exhausts its budget. */
fp_status fp_prove(const fp_system* sys, const fp_options* opts, fp_certificate** out);

fp_status fp_certificate_serialize(const fp_certificate* cert, char** json_out);
fp_status fp_certificate_parse(const char* json_text, fp_certificate** out);
void fp_certificate_free(fp_certificate* cert);

/* Re-validate every node. FP_OK when verified, FP_NOT_VERIFIED otherwise;
 * either way *report_json_out (when non-NULL) receives a JSON report with
 * verified, concluded_dim, node counts, and the failure path. */
fp_status fp_verify(const fp_certificate* cert, const fp_options* opts,
                    char** report_json_out);

/* (-1)-curve witness search on a plane system. FP_NOT_FOUND when no witness
 * exists among the templates and Cremona traces. */
fp_status fp_witness(const fp_system* sys, char** json_out);

/* Homogeneous sweep m <= m_max, d <= d_max; one JSON record per line. */
fp_status fp_hh_campaign(int64_t m_max, int64_t d_max, const fp_options* opts,
                         char** jsonl_out);

/* svg != 0: SVG markup; otherwise ASCII art. */
fp_status fp_render_system(const fp_system* sys, int svg, char** out);
fp_status fp_render_certificate(const fp_certificate* cert, int svg, char** out);

void fp_string_free(char* s);

/* Message for the most recent failure on this thread; empty string if none. */
const char* fp_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
