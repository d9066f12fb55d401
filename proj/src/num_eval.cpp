#include "tnclass/num_eval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tnclass {

namespace {

struct QData
{
    BigComplex q;
    BigComplex q24;   /* q^(1/24) */
    double log10_q;   /* log10 |q| < 0 */
    double limit;     /* stop once a term drops below 10^limit */
};

QData make_q(BigComplex const & tau, int prec)
{
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    BigComplex t = rounded(tau, bits);
    if (t.imag().sign() <= 0)
        throw std::domain_error("not in upper half-plane");
    BigFloat twopi = BigFloat::pi(bits);
    twopi.mul_si(2);
    /* 2 pi i tau = -2 pi y + 2 pi i x */
    BigComplex z(-(twopi * t.imag()), twopi * t.real());
    BigComplex z24 = z;
    z24 *= BigFloat(mpq_class(1, 24), bits);
    double const log10_q = -2 * std::numbers::pi * t.imag().to_double() / std::numbers::ln10;
    return { exp(z), exp(z24), log10_q, -static_cast<double>(prec + guard_digits) };
}

} // namespace

BigComplex eta(BigComplex const & tau, int prec)
{
    QData const d = make_q(tau, prec);
    mpfr_prec_t const bits = d.q.precision();
    BigComplex sum(1, 0, bits);
    BigComplex qk(1, 0, bits);   /* q^k */
    BigComplex p1(1, 0, bits);   /* q^(k(3k-1)/2) */
    for (long k = 1;; ++k) {
        /* e1(k) - e1(k-1) = 3k - 2 = 3(k-1) + 1 */
        p1 *= qk * qk * qk * d.q;
        qk *= d.q;
        if (static_cast<double>(k * (3 * k - 1) / 2) * d.log10_q < d.limit)
            break;
        BigComplex term = p1 + p1 * qk;  /* + q^(k(3k+1)/2) */
        if (k % 2)
            sum -= term;
        else
            sum += term;
    }
    return d.q24 * sum;
}

BigComplex eta_product(BigComplex const & tau, int prec)
{
    QData const d = make_q(tau, prec);
    mpfr_prec_t const bits = d.q.precision();
    BigComplex prod(1, 0, bits);
    BigComplex qn(1, 0, bits);
    BigComplex const one(1, 0, bits);
    for (long n = 1; static_cast<double>(n) * d.log10_q >= d.limit; ++n) {
        qn *= d.q;
        prod *= one - qn;
    }
    return d.q24 * prod;
}

std::array<BigComplex, 6> r_functions(BigComplex const & tau, int prec)
{
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    BigComplex const t = rounded(tau, bits);
    BigFloat const third(mpq_class(1, 3), bits);
    BigComplex const t3 = t * third;
    BigComplex const shift1(BigFloat(mpq_class(1, 3), bits), BigFloat(0, bits));
    BigComplex const shift2(BigFloat(mpq_class(2, 3), bits), BigFloat(0, bits));

    BigComplex const e0 = eta(t3, prec);
    BigComplex const e1 = eta(t3 + shift1, prec);
    BigComplex const e2 = eta(t3 + shift2, prec);
    BigComplex const e3 = eta(t * BigFloat(3, bits), prec);
    BigComplex const e = eta(t, prec);
    BigComplex const inv = BigComplex(1, 0, bits) / (e * e);
    return { e3 * e0 * inv, e3 * e1 * inv, e3 * e2 * inv,
             e0 * e2 * inv, e0 * e1 * inv, e2 * e1 * inv };
}

BigComplex r_function(int i, BigComplex const & tau, int prec)
{
    if (i < 0 || i > 5)
        throw std::out_of_range("R index must be 0..5");
    return r_functions(tau, prec)[i];
}

void require_ramanujan_n(long n)
{
    if (n <= 0 || n % 24 != 11)
        throw std::invalid_argument("n must be ≡ 11 mod 24");
}

BigComplex principal_root(long n, int prec)
{
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    BigFloat im = sqrt(BigFloat(n, bits));
    im.div_si(2);
    return { BigFloat(mpq_class(-1, 2), bits), std::move(im) };
}

BigComplex t_n_value(long n, int prec)
{
    require_ramanujan_n(n);
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    return r_function(2, principal_root(n, prec), prec) * sqrt(BigFloat(3, bits));
}

BigComplex j_invariant(BigComplex const & tau, int prec)
{
    QData const d = make_q(tau, prec);
    mpfr_prec_t const bits = d.q.precision();
    BigComplex sum(0, 0, bits);
    BigComplex qk(1, 0, bits);
    for (long k = 1;; ++k) {
        long s3 = 0;
        for (long m = 1; m * m <= k; ++m)
            if (k % m == 0) {
                s3 += m * m * m;
                long const o = k / m;
                if (o != m)
                    s3 += o * o * o;
            }
        qk *= d.q;
        double const mag = static_cast<double>(k) * d.log10_q + std::log10(240.0 * s3);
        if (mag < d.limit)
            break;
        sum += qk * BigFloat(s3, bits);
    }
    sum *= BigFloat(240, bits);
    BigComplex const e4 = BigComplex(1, 0, bits) + sum;
    return e4 * e4 * e4 / eta(tau, prec).pow(24);
}

} // namespace tnclass
