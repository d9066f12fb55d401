#ifndef TNCLASS_QUADFORM_HPP
#define TNCLASS_QUADFORM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tnclass/bigfloat.hpp"

namespace tnclass {

/*
 * The binary quadratic form a x^2 + b xy + c y^2. Only positive definite
 * forms are used here. A form is reduced when |b| <= a <= c, with b >= 0
 * whenever |b| = a or a = c.
 */
struct QuadForm
{
    mpz_class a, b, c;

    mpz_class discriminant() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_reduced() const;
    bool is_primitive() const;

    friend bool operator==(QuadForm const &, QuadForm const &) = default;
    std::string to_string() const;
    friend std::ostream & operator<<(std::ostream & o, QuadForm const & f);
};

/* the form equivalent to f under SL2(Z) that is reduced; throws
 * std::invalid_argument if f is not positive definite */
QuadForm reduce(QuadForm f);

/* one reduced primitive form per class of discriminant D (D < 0,
 * D = 1 mod 4), sorted by (a, b); the principal form comes first */
std::vector<QuadForm> enumerate_reduced(long D);

/* class number h(D), the size of enumerate_reduced(D) */
long class_number(long D);

/* root of a z^2 + b z + c in the upper half plane */
BigComplex form_root(QuadForm const & f, int digits);

} // namespace tnclass

#endif /* TNCLASS_QUADFORM_HPP */
