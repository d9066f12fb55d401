#ifndef TNCLASS_CYCLO_HPP
#define TNCLASS_CYCLO_HPP

#include <array>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "tnclass/bigfloat.hpp"

namespace tnclass {

/*
 * An element of Q(zeta_72), zeta = exp(2 pi i / 72), stored on the power
 * basis zeta^0 .. zeta^23. Exponents >= 24 are rewritten with the 72nd
 * cyclotomic polynomial x^24 - x^12 + 1, so the representation is unique
 * and equality is coefficient-wise.
 *
 * Values never change after construction except through the compound
 * assignment operators.
 */
class CycNum
{
    public:
    static constexpr int order = 72;
    static constexpr int degree = 24;

    private:
    std::array<mpq_class, degree> c;

    public:

    CycNum() = default;
    CycNum(long r) { c[0] = r; }                 // NOLINT: rationals embed
    CycNum(mpq_class const & r) { c[0] = r; }    // NOLINT
    explicit CycNum(std::array<mpq_class, degree> const & coeffs) : c(coeffs) {}

    /* zeta^k, k taken mod 72 */
    static CycNum root_power(long k);
    /* zeta^6 - zeta^30, whose square is 3 */
    static CycNum sqrt3();

    mpq_class const & coeff(int k) const { return c[k]; }
    bool is_zero() const;
    bool is_rational() const;
    /* number of nonzero coefficients */
    int weight() const;

    CycNum & operator+=(CycNum const & o);
    CycNum & operator-=(CycNum const & o);
    CycNum & operator*=(CycNum const & o);
    CycNum & operator*=(mpq_class const & r);

    friend CycNum operator+(CycNum a, CycNum const & b) { return a += b; }
    friend CycNum operator-(CycNum a, CycNum const & b) { return a -= b; }
    friend CycNum operator*(CycNum const & a, CycNum const & b);
    friend CycNum operator*(CycNum a, mpq_class const & r) { return a *= r; }
    CycNum operator-() const;

    /* throws std::domain_error("division by zero in cyclotomic field") */
    CycNum inverse() const;
    friend CycNum operator/(CycNum const & a, CycNum const & b) { return a * b.inverse(); }

    /* sigma_d : zeta -> zeta^d; throws std::invalid_argument unless gcd(d,72)=1 */
    CycNum galois(long d) const;

    /* complex value of the element at `digits` decimal digits */
    BigComplex embed(int digits) const;

    friend bool operator==(CycNum const & a, CycNum const & b) { return a.c == b.c; }

    /* e.g. "1/3*z^6 - 2/3*z^18"; "0" for zero */
    std::string to_string() const;
    friend std::ostream & operator<<(std::ostream & o, CycNum const & x);
};

/* the 72nd cyclotomic polynomial, ascending coefficients */
std::array<int, CycNum::degree + 1> const & cyclotomic72();

bool is_galois_element(long d);

} // namespace tnclass

#endif /* TNCLASS_CYCLO_HPP */
