#ifndef TNCLASS_CLASS_POLY_HPP
#define TNCLASS_CLASS_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tnclass/bigfloat.hpp"
#include "tnclass/cyclo.hpp"
#include "tnclass/num_eval.hpp"
#include "tnclass/quadform.hpp"

namespace tnclass {

/* integer polynomial, coefficients in ascending degree */
struct IntPolynomial
{
    std::vector<mpz_class> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    mpz_class const & leading() const { return coeffs.back(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    BigComplex evaluate(BigComplex const & x) const;

    friend bool operator==(IntPolynomial const &, IntPolynomial const &) = default;
    /* descending powers, e.g. "x^3 - 2x^2 + 4x - 1" */
    std::string to_string() const;
};

/* parses the to_string format back; throws std::invalid_argument */
IntPolynomial parse_polynomial(std::string const & text);

/* one conjugate (sqrt3 R2)^A of t_n: scalar * R_target(root of form) */
struct ConjugateRecord
{
    QuadForm form;
    CycNum scalar;
    int target_index;
    long d;
    BigComplex value;
};

/* throws std::domain_error("representation not monomial") if the action
 * matrix of the form is not monomial */
ConjugateRecord conjugate_value(long n, QuadForm const & f, int prec);

class RoundingError : public std::runtime_error
{
    double worst_;

    public:

    RoundingError(std::string const & what, double worst)
        : std::runtime_error(what), worst_(worst) {}
    /* log10 of the largest distance of a coefficient from an integer */
    double worst_log10() const { return worst_; }
};

/* a polynomial rounded from complex conjugates */
struct ClassPolynomial
{
    IntPolynomial poly;
    long discriminant;
    long class_number;
    int precision_digits;
    /* largest distance of an assembled coefficient from its rounded value,
     * imaginary parts included */
    BigFloat max_residual;
};

/* the residual above which the rounding is rejected */
inline constexpr double rounding_threshold = 1e-10;
inline constexpr int max_retries = 3;

/* prod over reduced primitive forms of (x - conjugate of t_n), rounded;
 * precision doubles on a rounding failure, at most max_retries times */
ClassPolynomial ramanujan_polynomial(long n, int prec = default_precision);
/* also hands back the conjugates of the last (successful) attempt */
ClassPolynomial ramanujan_polynomial(long n, int prec, std::vector<ConjugateRecord> & conjugates);

/* digits needed for the Hilbert class polynomial of D */
int hilbert_precision(long D);

/* prod (x - j(root of form)); prec <= 0 selects hilbert_precision(D), and
 * the larger of prec and hilbert_precision(D) is used otherwise */
ClassPolynomial hilbert_polynomial(long D, int prec = 0);

struct PolynomialReport
{
    BigFloat root_residual;      /* |p(t_n)| */
    bool root_ok;                /* < 10^(-prec/2) */
    BigFloat conjugate_residual; /* max |p(conjugate)| */
    bool conjugates_ok;          /* < 10^(-prec/3) */
    bool degree_ok;              /* degree = h(-n) */
    bool monic;
    bool unit_constant;          /* |p(0)| = 1 */

    bool passed() const { return root_ok && conjugates_ok && degree_ok && monic && unit_constant; }
};

PolynomialReport verify_polynomial(IntPolynomial const & p, long n, int prec = default_precision);

} // namespace tnclass

#endif /* TNCLASS_CLASS_POLY_HPP */
