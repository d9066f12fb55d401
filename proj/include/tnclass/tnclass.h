#ifndef TNCLASS_H
#define TNCLASS_H

#include <stddef.h>

#if defined(TNC_BUILDING_LIB)
#define TNC_API __attribute__((visibility("default")))
#else
#define TNC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tnc_status
{
    TNC_OK = 0,
    TNC_ERR_INVALID_ARGUMENT = 1, /* bad n, discriminant, precision or index */
    TNC_ERR_ROUNDING = 2,         /* coefficients did not round after retries */
    TNC_ERR_INTERNAL = 3          /* broken invariant, e.g. non-monomial action */
} tnc_status;

/* message for the last failed call on this thread; "" if none */
TNC_API const char * tnc_last_error(void);
TNC_API const char * tnc_version(void);

/* 120, or the value of TNCLASS_PRECISION if it is set to a positive integer */
TNC_API int tnc_default_precision(void);

typedef struct tnc_polynomial tnc_polynomial;

/* p_n, the minimal polynomial of t_n; n = 11 mod 24, prec in digits */
TNC_API tnc_status tnc_ramanujan_polynomial(long n, int prec, tnc_polynomial ** out);
/* Hilbert class polynomial of D < 0, D = 1 mod 4; prec <= 0 picks it from D */
TNC_API tnc_status tnc_hilbert_polynomial(long disc, int prec, tnc_polynomial ** out);

TNC_API size_t tnc_polynomial_degree(const tnc_polynomial * p);
/* decimal string of the coefficient of x^i, NULL when i > degree */
TNC_API const char * tnc_polynomial_coefficient(const tnc_polynomial * p, size_t i);
/* descending powers, e.g. "x^3 - 2x^2 + 4x - 1" */
TNC_API const char * tnc_polynomial_text(const tnc_polynomial * p);
TNC_API long tnc_polynomial_discriminant(const tnc_polynomial * p);
TNC_API long tnc_polynomial_class_number(const tnc_polynomial * p);
/* precision actually used, after any retries */
TNC_API int tnc_polynomial_precision(const tnc_polynomial * p);
/* largest rounding residual, e.g. "1.23e-115" */
TNC_API const char * tnc_polynomial_max_residual(const tnc_polynomial * p);
TNC_API void tnc_polynomial_free(tnc_polynomial * p);

/* list of named pass/fail checks */
typedef struct tnc_report tnc_report;

/* exact check that sqrt3 R2 is fixed by each generator of (O/72O)*;
 * n_class is 11, 35 or 59 */
TNC_API tnc_status tnc_check_invariance(int n_class, tnc_report ** out);
/* word reconstruction, eta functional equations, eta series vs product,
 * numeric consistency of the representation matrices */
TNC_API tnc_status tnc_selftest(int prec, unsigned seed, tnc_report ** out);

TNC_API size_t tnc_report_size(const tnc_report * r);
TNC_API const char * tnc_report_name(const tnc_report * r, size_t i);
TNC_API int tnc_report_passed(const tnc_report * r, size_t i);
TNC_API const char * tnc_report_detail(const tnc_report * r, size_t i);
/* 1 if every entry passed */
TNC_API int tnc_report_all_passed(const tnc_report * r);
TNC_API void tnc_report_free(tnc_report * r);

#ifdef __cplusplus
}
#endif

#endif /* TNCLASS_H */
