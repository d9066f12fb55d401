#include "tnclass/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tnclass {

bool QuadForm::is_reduced() const
{
    if (!is_positive_definite())
        return false;
    if (abs(b) > a || a > c)
        return false;
    if ((abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

bool QuadForm::is_primitive() const
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 1;
}

std::string QuadForm::to_string() const
{
    return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

std::ostream & operator<<(std::ostream & o, QuadForm const & f)
{
    return o << f.to_string();
}

QuadForm reduce(QuadForm f)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument("form " + f.to_string() + " is not positive definite");

    mpz_class q, twoa;
    for (;;) {
        /* normalize b into (-a, a] with x -> x + k y */
        if (f.b > f.a || f.b <= -f.a) {
            twoa = 2 * f.a;
            /* k = floor((a - b) / 2a) */
            mpz_class num = f.a - f.b;
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), twoa.get_mpz_t());
            /* [a, b + 2ak, ak^2 + bk + c] */
            f.c += q * (f.b + f.a * q);
            f.b += twoa * q;
        }
        if (f.a > f.c) {
            /* (x, y) -> (-y, x) */
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        return f;
    }
}

std::vector<QuadForm> enumerate_reduced(long D)
{
    if (D >= 0 || ((D % 4) + 4) % 4 != 1)
        throw std::invalid_argument("discriminant must be negative and 1 mod 4, got "
                                    + std::to_string(D));
    long const n = -D;
    std::vector<QuadForm> out;
    /* |b| <= a <= c gives 3 b^2 <= |D| */
    for (long b = 1; 3 * b * b <= n; b += 2) {
        long const ac = (b * b + n) / 4;
        for (long a = b; a * a <= ac; ++a) {
            if (ac % a != 0)
                continue;
            long const c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            out.push_back({ a, b, c });
            if (b != a && a != c)
                out.push_back({ a, -b, c });
        }
    }
    std::sort(out.begin(), out.end(), [](QuadForm const & x, QuadForm const & y) {
        if (x.a != y.a)
            return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

long class_number(long D)
{
    return static_cast<long>(enumerate_reduced(D).size());
}

BigComplex form_root(QuadForm const & f, int digits)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument("form " + f.to_string() + " is not positive definite");
    mpfr_prec_t bits = digits_to_bits(digits);
    BigFloat twoa(mpz_class(2 * f.a), bits);
    BigFloat re = BigFloat(mpz_class(-f.b), bits) / twoa;
    BigFloat im = sqrt(BigFloat(mpz_class(-f.discriminant()), bits)) / twoa;
    return { std::move(re), std::move(im) };
}

} // namespace tnclass
