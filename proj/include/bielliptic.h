/*
 * bielliptic — exact lattice invariants of bielliptic surfaces.
 *
 * C interface to the lattice core. Every integer that can grow crosses the
 * boundary as a decimal string; classes, words and matrices use the same wire
 * formats as the CLI:
 *
 *   class   "r,x,y,s"            4 integers, comma-separated, no spaces
 *   divisor "x,y"
 *   matrix  16 row-major integers, comma-separated
 *   word    whitespace-separated letters: shift | tlb(mx,my) |
 *           fma(c,a,d,b) | fmb(c,a,d,b), each optionally suffixed ^-1;
 *           the empty string is the empty word
 *
 * Functions return biell_status; on failure biell_last_error() describes the
 * problem for the calling thread. Strings returned through char** out
 * parameters are heap-allocated and must be released with
 * biell_string_free(). Status values deliberately match the CLI exit codes
 * (1 is reserved for negative verdicts, which are results, not errors).
 */

#ifndef BIELLIPTIC_H
#define BIELLIPTIC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum biell_status {
  BIELL_OK = 0,
  BIELL_ERR_USAGE = 2,        /* unparsable literal, bad surface type, null argument */
  BIELL_ERR_REFERENCE = 3,    /* index out of range (e.g. Delta model index) */
  BIELL_ERR_PRECONDITION = 4, /* a stated precondition failed; see biell_last_error() */
  BIELL_ERR_INTERNAL = 5      /* library defect */
} biell_status;

/* Opaque handles. */
typedef struct biell_delta_model biell_delta_model;
typedef struct biell_isometry biell_isometry;

const char* biell_version(void);

/* Message for the most recent failure on the calling thread; empty after a
 * success. The pointer stays valid until the thread's next library call. */
const char* biell_last_error(void);

void biell_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Surface types and the numerical lattice                            */
/* ------------------------------------------------------------------ */

typedef struct biell_profile {
  int type;        /* 1..7 */
  int n;           /* order of the canonical class */
  int k;           /* order of the translation subgroup */
  int g_order;     /* n*k */
  int split;       /* 1 for types 1, 3, 5, 7 */
  int lambda_p_a;  /* multisection degree over the elliptic base (= k) */
  int lambda_p_b;  /* multisection degree over the rational base (= n) */
  const char* group;   /* static storage */
  const char* lattice; /* static storage */
} biell_profile;

biell_status biell_surface_profile(int type, biell_profile* out);

/* Intersection number of two divisors "x,y" in the basis e1, e2. */
biell_status biell_intersect(int type, const char* d1, const char* d2, char** out);

/* Euler pairing of two classes. */
biell_status biell_euler_pairing(int type, const char* v, const char* w, char** out);

biell_status biell_is_isotropic(int type, const char* v, int* out);

/* Fails (precondition) on the zero class. */
biell_status biell_is_primitive(int type, const char* v, int* out);

/* Class "1,x,y,x*y" of a line bundle with first Chern class "x,y". */
biell_status biell_line_bundle_class(int type, const char* divisor, char** out);

/* Human-readable form "(r, <divisor in A and B>, s)". */
biell_status biell_class_to_ab(int type, const char* v, char** out);

/* ------------------------------------------------------------------ */
/* Special classes (Delta)                                            */
/* ------------------------------------------------------------------ */

/* Admissible Delta models in canonical order; index 0 is the default model
 * generated by the two fiber classes. */
biell_status biell_delta_model_count(int type, int* out);
biell_status biell_delta_model_get(int type, int index, biell_delta_model** out);
void biell_delta_model_free(biell_delta_model* m);

/* Row-major Hermite normal form "a,b,0,c" of the divisor sublattice. */
biell_status biell_delta_model_hnf(const biell_delta_model* m, char** out);

/* Four basis class literals joined with ';'. */
biell_status biell_delta_basis(const biell_delta_model* m, char** out);

/* verdict: 1 when v is special. When not, *failed (if non-null) receives the
 * violated constraints: "rank divisibility", "divisor lattice", or both
 * joined with "; "; empty string when the class is special. */
biell_status biell_in_delta(const biell_delta_model* m, const char* v, int* verdict,
                            char** failed);

/* Index (2 or 4) of the autoequivalence-realized subgroup in the isometry
 * group of this Delta model. */
biell_status biell_image_index(const biell_delta_model* m, int* out);

/* ------------------------------------------------------------------ */
/* Isometries                                                         */
/* ------------------------------------------------------------------ */

biell_status biell_is_isometry(const char* m16, int* out);

/* Fails (precondition "not an isometry") unless the matrix preserves the
 * Euler pairing. */
biell_status biell_isometry_new(const char* m16, biell_isometry** out);
void biell_isometry_free(biell_isometry* m);

biell_status biell_isometry_entries(const biell_isometry* m, char** out);
biell_status biell_isometry_mul(const biell_isometry* a, const biell_isometry* b,
                                biell_isometry** out);
biell_status biell_isometry_inverse(const biell_isometry* a, biell_isometry** out);
biell_status biell_isometry_apply(const biell_isometry* a, int type, const char* v, char** out);

/* Block embedding of a divisor-lattice isometry:
 * psi is "id", "iota", "sigma" or "iota_sigma". */
biell_status biell_block(const char* psi, biell_isometry** out);

biell_status biell_preserves_delta(const biell_isometry* m, const biell_delta_model* model,
                                   int* out);

/* Compose a word literal into an isometry (a single letter gives that
 * letter's action). Letter side conditions are preconditions. */
biell_status biell_compose_word(int type, const char* word, biell_isometry** out);

/* Parse and reformat a word literal canonically. */
biell_status biell_word_canonical(int type, const char* word, char** out);

/* ------------------------------------------------------------------ */
/* Factorization (split types only)                                   */
/* ------------------------------------------------------------------ */

/* Word w with compose(w)(point class) == v. Preconditions: split type, v
 * special, isotropic, primitive. */
biell_status biell_factor_point_image(int type, const char* v, char** out_word);

/* Split m as compose(word) * block(residual). *out_residual receives the
 * residual's name, *in_image is 1 iff the residual is "id". Preconditions:
 * split type, m preserves the default Delta model. */
biell_status biell_decompose(int type, const biell_isometry* m, char** out_word,
                             char** out_residual, int* in_image);

/* match: does the word send the point class exactly to v? */
biell_status biell_verify_word_class(int type, const char* word, const char* v, int* match);

/* match: does the word compose exactly to the matrix? */
biell_status biell_verify_word_matrix(int type, const char* word, const char* m16, int* match);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BIELLIPTIC_H */
