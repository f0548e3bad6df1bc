#ifndef PIENCLOSE_H
#define PIENCLOSE_H

/*
 * pienclose: guaranteed rational-interval enclosures of pi, built without
 * circular definitions. Four independent methods (arcsin series, cos-root
 * bisection, Archimedes polygon doubling, rigorous Riemann quadrature) each
 * return an interval certified to contain pi; their intersection is the
 * library's only notion of pi's value.
 *
 * Conventions:
 *   - every function that can fail returns a pienc_status; results come back
 *     through out-parameters, which are left untouched on failure
 *   - strings returned through char** are heap-allocated; release them with
 *     pienc_string_free
 *   - pienc_enclosure is an opaque handle; release with pienc_enclosure_free
 *   - widths are decimal, scientific, or "p/q" rational literals ("1e-12")
 *   - a bits argument <= 0 selects a width-adaptive default precision
 *   - pienc_last_error() describes the most recent failure in the calling
 *     thread
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pienc_status {
    PIENC_OK = 0,
    PIENC_EINVAL = 1,        /* null pointer or malformed argument */
    PIENC_EDOMAIN = 2,       /* mathematical precondition violated */
    PIENC_EINCONSISTENT = 3, /* enclosures that must overlap are disjoint */
    PIENC_ENOMEM = 4,
    PIENC_EINTERNAL = 5
} pienc_status;

typedef struct pienc_enclosure pienc_enclosure;

const char* pienc_version(void);
const char* pienc_status_str(pienc_status status);

/* message for the last failure in this thread; valid until the next failing
 * call on the same thread; never NULL */
const char* pienc_last_error(void);

void pienc_string_free(char* s);
void pienc_enclosure_free(pienc_enclosure* e);

/* ---- the four enclosure producers -------------------------------------- */

/* doubled arcsin partial sum plus a pi-free tail bound; terms >= 1 */
pienc_status pienc_pi_arcsin(unsigned long terms, int bits, pienc_enclosure** out);

/* bisection for the smallest positive zero of cos, stopping once the
 * doubled bracket is at most target_width wide */
pienc_status pienc_pi_cosroot(const char* target_width, int bits, pienc_enclosure** out);

/* same bisection, but running a fixed number of accepted steps */
pienc_status pienc_pi_cosroot_steps(unsigned long steps, int bits, pienc_enclosure** out);

/* inscribed/circumscribed polygon semiperimeters, `doublings` doublings
 * beyond the initial squares */
pienc_status pienc_pi_archimedes(unsigned long doublings, int bits, pienc_enclosure** out);

/* left/right Riemann bounds for the integral of 2/(1+t^2) over [0,1];
 * subintervals >= 1; pre-compression width is exactly 2/subintervals */
pienc_status pienc_pi_quadrature(unsigned long subintervals, int bits, pienc_enclosure** out);

/* intersection of count enclosures: method "intersection", work summed.
 * Fails with PIENC_EINCONSISTENT if any two inputs are disjoint. */
pienc_status pienc_cross_check(const pienc_enclosure* const* list, size_t count,
                               pienc_enclosure** out);

/* ---- enclosure accessors ------------------------------------------------ */

const char* pienc_enclosure_method(const pienc_enclosure* e); /* NULL on NULL input */
unsigned long pienc_enclosure_work(const pienc_enclosure* e);
double pienc_enclosure_elapsed_ms(const pienc_enclosure* e);
/* 0 when the method stopped early (cos sign undecidable at the order cap) */
int pienc_enclosure_converged(const pienc_enclosure* e);

/* endpoints as exact "num/den" strings; exact=1 selects the enclosure before
 * its final dyadic compression, exact=0 the compressed (published) interval */
pienc_status pienc_enclosure_endpoints(const pienc_enclosure* e, int exact, char** lo, char** hi);

/* outward-rounded decimal endpoints and width (lo down, hi and width up);
 * frac_digits <= 0 picks two digits beyond the endpoint agreement prefix */
pienc_status pienc_enclosure_decimal(const pienc_enclosure* e, int frac_digits, char** lo,
                                     char** hi, char** width);

/* longest decimal prefix on which the two endpoints agree, e.g. "3.14159" */
pienc_status pienc_enclosure_digits(const pienc_enclosure* e, char** digits);

/* ---- series, demo, verification ----------------------------------------- */

/* "2 + 1/3 + 3/20" for terms=2: the doubled arcsin series head */
pienc_status pienc_series_prefix(unsigned long terms, char** text);

/* circularity walkthrough; machine=1 selects the flat key=value form */
pienc_status pienc_demo_report(int machine, char** text);

/* run the invariant suite; report gets the PASS/FAIL lines, all_passed 0/1.
 * inject_disjoint=1 adds a fabricated non-pi enclosure to the cross-check
 * inputs, which must make exactly that property fail. */
pienc_status pienc_verify(int inject_disjoint, char** report, int* all_passed);

/* ---- sizing helpers ------------------------------------------------------ */

/* default working precision for a target width; < 0 on bad input */
int pienc_default_bits(const char* width);

/* work needed for the method to reach (about) the width: terms, steps,
 * doublings, or subintervals; < 0 on bad input */
long pienc_budget_for_width(const char* method, const char* width);

#ifdef __cplusplus
}
#endif

#endif /* PIENCLOSE_H */
