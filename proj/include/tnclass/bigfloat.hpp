#ifndef TNCLASS_BIGFLOAT_HPP
#define TNCLASS_BIGFLOAT_HPP

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace tnclass {

/* Number of mantissa bits that carry `digits` decimal digits, plus a few
 * spare bits so that the last requested digit is still correct. */
mpfr_prec_t digits_to_bits(int digits);
int bits_to_digits(mpfr_prec_t bits);

/*
 * RAII owner of an mpfr_t. The precision is fixed at construction; results of
 * binary operations take the larger precision of the two operands. All
 * rounding is to nearest.
 */
class BigFloat
{
    mpfr_t v;

    public:

    explicit BigFloat(mpfr_prec_t bits = 64);
    BigFloat(long x, mpfr_prec_t bits);
    BigFloat(mpz_class const & x, mpfr_prec_t bits);
    BigFloat(mpq_class const & x, mpfr_prec_t bits);
    BigFloat(std::string const & decimal, mpfr_prec_t bits);

    BigFloat(BigFloat const & o);
    BigFloat(BigFloat && o) noexcept;
    BigFloat & operator=(BigFloat const & o);
    BigFloat & operator=(BigFloat && o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v); }
    mpfr_srcptr get() const { return v; }
    mpfr_ptr get() { return v; }

    static BigFloat pi(mpfr_prec_t bits);
    /* 10^e at the given precision */
    static BigFloat pow10(long e, mpfr_prec_t bits);

    BigFloat & operator+=(BigFloat const & o);
    BigFloat & operator-=(BigFloat const & o);
    BigFloat & operator*=(BigFloat const & o);
    BigFloat & operator/=(BigFloat const & o);

    friend BigFloat operator+(BigFloat a, BigFloat const & b) { return a += b; }
    friend BigFloat operator-(BigFloat a, BigFloat const & b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, BigFloat const & b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, BigFloat const & b) { return a /= b; }
    BigFloat operator-() const;

    BigFloat & mul_si(long x);
    BigFloat & div_si(long x);

    int sign() const { return mpfr_sgn(v); }
    bool is_zero() const { return mpfr_zero_p(v) != 0; }

    friend std::partial_ordering operator<=>(BigFloat const & a, BigFloat const & b);
    friend bool operator==(BigFloat const & a, BigFloat const & b);

    double to_double() const;
    /* nearest integer (ties away from zero) */
    mpz_class round() const;
    /* log10 of the absolute value; -inf-ish large negative for zero */
    double log10_abs() const;
    /* scientific notation with `digits` significant digits */
    std::string to_string(int digits = 20) const;
};

BigFloat abs(BigFloat x);
BigFloat sqrt(BigFloat const & x);
BigFloat exp(BigFloat const & x);
BigFloat cos(BigFloat const & x);
BigFloat sin(BigFloat const & x);
BigFloat atan2(BigFloat const & y, BigFloat const & x);
BigFloat max(BigFloat const & a, BigFloat const & b);
/* x rounded (or padded) to `bits` of precision */
BigFloat rounded(BigFloat const & x, mpfr_prec_t bits);

class BigComplex
{
    BigFloat re_, im_;

    public:

    explicit BigComplex(mpfr_prec_t bits = 64) : re_(bits), im_(bits) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(long re, long im, mpfr_prec_t bits)
        : re_(re, bits), im_(im, bits) {}

    /* precision requested in decimal digits */
    static BigComplex with_digits(int digits) { return BigComplex(digits_to_bits(digits)); }

    BigFloat const & real() const { return re_; }
    BigFloat const & imag() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }
    int digits() const { return bits_to_digits(precision()); }

    BigComplex & operator+=(BigComplex const & o);
    BigComplex & operator-=(BigComplex const & o);
    BigComplex & operator*=(BigComplex const & o);
    BigComplex & operator/=(BigComplex const & o);
    BigComplex & operator*=(BigFloat const & o);

    friend BigComplex operator+(BigComplex a, BigComplex const & b) { return a += b; }
    friend BigComplex operator-(BigComplex a, BigComplex const & b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, BigComplex const & b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, BigComplex const & b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, BigFloat const & b) { return a *= b; }
    BigComplex operator-() const { return { -re_, -im_ }; }

    BigComplex conj() const { return { re_, -im_ }; }
    BigFloat norm() const; /* |z|^2 */
    BigFloat abs() const;
    BigComplex pow(long e) const;

    std::string to_string(int digits = 20) const;
};

/* exp(z) */
BigComplex exp(BigComplex const & z);
/* exp(2 pi i x) for real x */
BigComplex exp_2pi_i(BigFloat const & x);
/* principal square root, argument in (-pi/2, pi/2] */
BigComplex sqrt(BigComplex const & z);
BigFloat abs(BigComplex const & z);
BigComplex rounded(BigComplex const & z, mpfr_prec_t bits);

} // namespace tnclass

#endif /* TNCLASS_BIGFLOAT_HPP */
