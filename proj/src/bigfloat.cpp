#include "tnclass/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tnclass {

mpfr_prec_t digits_to_bits(int digits)
{
    if (digits < 1)
        digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873622)) + 8;
}

int bits_to_digits(mpfr_prec_t bits)
{
    bits -= 8;
    return bits < 4 ? 1 : static_cast<int>(std::floor(bits / 3.3219280948873622));
}

namespace {

/* bring a up to the precision of b without losing its value */
void widen(mpfr_ptr a, mpfr_srcptr b)
{
    if (mpfr_get_prec(b) > mpfr_get_prec(a))
        mpfr_prec_round(a, mpfr_get_prec(b), MPFR_RNDN);
}

} // namespace

BigFloat::BigFloat(mpfr_prec_t bits)
{
    mpfr_init2(v, bits);
    mpfr_set_zero(v, 1);
}

BigFloat::BigFloat(long x, mpfr_prec_t bits)
{
    mpfr_init2(v, bits);
    mpfr_set_si(v, x, MPFR_RNDN);
}

BigFloat::BigFloat(mpz_class const & x, mpfr_prec_t bits)
{
    mpfr_init2(v, bits);
    mpfr_set_z(v, x.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpq_class const & x, mpfr_prec_t bits)
{
    mpfr_init2(v, bits);
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string const & decimal, mpfr_prec_t bits)
{
    mpfr_init2(v, bits);
    if (mpfr_set_str(v, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v);
        throw std::invalid_argument("not a decimal number: " + decimal);
    }
}

BigFloat::BigFloat(BigFloat const & o)
{
    mpfr_init2(v, o.precision());
    mpfr_set(v, o.v, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat && o) noexcept
{
    /* leave o as a valid minimal-precision zero */
    mpfr_init2(v, MPFR_PREC_MIN);
    mpfr_swap(v, o.v);
}

BigFloat & BigFloat::operator=(BigFloat const & o)
{
    if (this != &o) {
        mpfr_set_prec(v, o.precision());
        mpfr_set(v, o.v, MPFR_RNDN);
    }
    return *this;
}

BigFloat & BigFloat::operator=(BigFloat && o) noexcept
{
    mpfr_swap(v, o.v);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(v);
}

BigFloat BigFloat::pi(mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_const_pi(r.v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_ui_pow_ui(r.v, 10, e < 0 ? -e : e, MPFR_RNDN);
    if (e < 0)
        mpfr_ui_div(r.v, 1, r.v, MPFR_RNDN);
    return r;
}

BigFloat & BigFloat::operator+=(BigFloat const & o)
{
    widen(v, o.v);
    mpfr_add(v, v, o.v, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator-=(BigFloat const & o)
{
    widen(v, o.v);
    mpfr_sub(v, v, o.v, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator*=(BigFloat const & o)
{
    widen(v, o.v);
    mpfr_mul(v, v, o.v, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator/=(BigFloat const & o)
{
    widen(v, o.v);
    mpfr_div(v, v, o.v, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(*this);
    mpfr_neg(r.v, r.v, MPFR_RNDN);
    return r;
}

BigFloat & BigFloat::mul_si(long x)
{
    mpfr_mul_si(v, v, x, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::div_si(long x)
{
    mpfr_div_si(v, v, x, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(BigFloat const & a, BigFloat const & b)
{
    if (mpfr_unordered_p(a.v, b.v))
        return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v, b.v);
    return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

bool operator==(BigFloat const & a, BigFloat const & b)
{
    return mpfr_equal_p(a.v, b.v) != 0;
}

double BigFloat::to_double() const
{
    return mpfr_get_d(v, MPFR_RNDN);
}

mpz_class BigFloat::round() const
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDNA);
    return z;
}

double BigFloat::log10_abs() const
{
    if (mpfr_zero_p(v))
        return -std::numeric_limits<double>::infinity();
    BigFloat t(*this);
    mpfr_abs(t.v, t.v, MPFR_RNDN);
    mpfr_log10(t.v, t.v, MPFR_RNDN);
    return t.to_double();
}

std::string BigFloat::to_string(int digits) const
{
    char * s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits > 1 ? digits - 1 : 0, v);
    std::string r(s);
    mpfr_free_str(s);
    return r;
}

BigFloat abs(BigFloat x)
{
    mpfr_abs(x.get(), x.get(), MPFR_RNDN);
    return x;
}

BigFloat sqrt(BigFloat const & x)
{
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat exp(BigFloat const & x)
{
    BigFloat r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(BigFloat const & x)
{
    BigFloat r(x.precision());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sin(BigFloat const & x)
{
    BigFloat r(x.precision());
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(BigFloat const & y, BigFloat const & x)
{
    BigFloat r(std::max(x.precision(), y.precision()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat max(BigFloat const & a, BigFloat const & b)
{
    return a < b ? b : a;
}

BigComplex & BigComplex::operator+=(BigComplex const & o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex & BigComplex::operator-=(BigComplex const & o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex & BigComplex::operator*=(BigComplex const & o)
{
    BigFloat r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

BigComplex & BigComplex::operator/=(BigComplex const & o)
{
    BigFloat den = o.norm();
    if (den.is_zero())
        throw std::domain_error("complex division by zero");
    BigFloat r = (re_ * o.re_ + im_ * o.im_) / den;
    im_ = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(r);
    return *this;
}

BigComplex & BigComplex::operator*=(BigFloat const & o)
{
    re_ *= o;
    im_ *= o;
    return *this;
}

BigFloat BigComplex::norm() const
{
    return re_ * re_ + im_ * im_;
}

BigFloat BigComplex::abs() const
{
    BigFloat r(precision());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::pow(long e) const
{
    BigComplex base = e < 0 ? BigComplex(1, 0, precision()) / *this : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    BigComplex r(1, 0, precision());
    while (k) {
        if (k & 1)
            r *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return r;
}

std::string BigComplex::to_string(int digits) const
{
    std::string s = re_.to_string(digits);
    std::string i = im_.to_string(digits);
    if (i.front() == '-')
        return s + " - " + i.substr(1) + "i";
    return s + " + " + i + "i";
}

BigComplex exp(BigComplex const & z)
{
    BigFloat m = exp(z.real());
    mpfr_prec_t p = z.precision();
    BigFloat c(p), s(p);
    mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
    return { m * c, m * s };
}

BigComplex exp_2pi_i(BigFloat const & x)
{
    mpfr_prec_t p = x.precision();
    BigFloat t = BigFloat::pi(p) * x;
    t.mul_si(2);
    BigFloat c(p), s(p);
    mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
    return { std::move(c), std::move(s) };
}

BigComplex sqrt(BigComplex const & z)
{
    /* sqrt(z) = sqrt((|z|+x)/2) + i sign(y) sqrt((|z|-x)/2), with the
     * negative real axis sent to the positive imaginary axis */
    BigFloat r = z.abs();
    BigFloat a = r + z.real();
    a.div_si(2);
    BigFloat b = r - z.real();
    b.div_si(2);
    BigFloat re = sqrt(max(a, BigFloat(0, a.precision())));
    BigFloat im = sqrt(max(b, BigFloat(0, b.precision())));
    if (z.imag().sign() < 0)
        im = -im;
    return { std::move(re), std::move(im) };
}

BigFloat abs(BigComplex const & z)
{
    return z.abs();
}

BigFloat rounded(BigFloat const & x, mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigComplex rounded(BigComplex const & z, mpfr_prec_t bits)
{
    return { rounded(z.real(), bits), rounded(z.imag(), bits) };
}

} // namespace tnclass
