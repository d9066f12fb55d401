#include "tnclass/cyclo.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tnclass {

std::array<int, CycNum::degree + 1> const & cyclotomic72()
{
    /* Phi_72(x) = Phi_6(x^12) = x^24 - x^12 + 1 */
    static constexpr std::array<int, CycNum::degree + 1> phi = {
        1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1,
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
    };
    return phi;
}

bool is_galois_element(long d)
{
    return std::gcd(d, 72L) == 1;
}

namespace {

/* fold a dense buffer of powers zeta^0..zeta^(n-1) onto the basis, using
 * zeta^k = zeta^(k-12) - zeta^(k-24) for k >= 24 */
std::array<mpq_class, CycNum::degree> fold(std::vector<mpq_class> & buf)
{
    for (std::size_t k = buf.size(); k-- > CycNum::degree;) {
        if (sgn(buf[k]) == 0)
            continue;
        buf[k - 12] += buf[k];
        buf[k - 24] -= buf[k];
    }
    std::array<mpq_class, CycNum::degree> out;
    for (int k = 0; k < CycNum::degree; ++k)
        out[k] = std::move(buf[k]);
    return out;
}

long mod72(long k)
{
    k %= 72;
    return k < 0 ? k + 72 : k;
}

/* dense polynomials over Q, ascending, used only for inversion */
using QPoly = std::vector<mpq_class>;

void trim(QPoly & p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

QPoly sub(QPoly a, QPoly const & b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

QPoly mul(QPoly const & a, QPoly const & b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void divmod(QPoly const & a, QPoly const & b, QPoly & q, QPoly & r)
{
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        mpq_class f = r.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= f * b[i];
        trim(r);
    }
    trim(q);
}

} // namespace

CycNum CycNum::root_power(long k)
{
    CycNum r;
    long e = mod72(k);
    if (e < degree) {
        r.c[e] = 1;
        return r;
    }
    std::vector<mpq_class> buf(order);
    buf[e] = 1;
    r.c = fold(buf);
    return r;
}

CycNum CycNum::sqrt3()
{
    return root_power(6) - root_power(30);
}

bool CycNum::is_zero() const
{
    for (auto const & x : c)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool CycNum::is_rational() const
{
    for (int k = 1; k < degree; ++k)
        if (sgn(c[k]) != 0)
            return false;
    return true;
}

int CycNum::weight() const
{
    int w = 0;
    for (auto const & x : c)
        w += sgn(x) != 0;
    return w;
}

CycNum & CycNum::operator+=(CycNum const & o)
{
    for (int k = 0; k < degree; ++k)
        if (sgn(o.c[k]) != 0)
            c[k] += o.c[k];
    return *this;
}

CycNum & CycNum::operator-=(CycNum const & o)
{
    for (int k = 0; k < degree; ++k)
        if (sgn(o.c[k]) != 0)
            c[k] -= o.c[k];
    return *this;
}

CycNum operator*(CycNum const & a, CycNum const & b)
{
    std::vector<mpq_class> buf(2 * CycNum::degree - 1);
    for (int i = 0; i < CycNum::degree; ++i) {
        if (sgn(a.c[i]) == 0)
            continue;
        for (int j = 0; j < CycNum::degree; ++j)
            if (sgn(b.c[j]) != 0)
                buf[i + j] += a.c[i] * b.c[j];
    }
    CycNum r;
    r.c = fold(buf);
    return r;
}

CycNum & CycNum::operator*=(CycNum const & o)
{
    return *this = *this * o;
}

CycNum & CycNum::operator*=(mpq_class const & r)
{
    for (auto & x : c)
        if (sgn(x) != 0)
            x *= r;
    return *this;
}

CycNum CycNum::operator-() const
{
    CycNum r(*this);
    for (auto & x : r.c)
        x = -x;
    return r;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero in cyclotomic field");

    /* extended Euclid on (phi, a): keep s_i with s_i * a == r_i mod phi */
    QPoly r0(cyclotomic72().begin(), cyclotomic72().end());
    QPoly r1(c.begin(), c.end());
    trim(r1);
    QPoly s0, s1 = { mpq_class(1) };
    while (r1.size() > 1) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    /* phi is irreducible, so the last remainder is a nonzero constant */
    mpq_class k = r1.at(0);
    std::vector<mpq_class> buf(std::max<std::size_t>(s1.size(), degree));
    for (std::size_t i = 0; i < s1.size(); ++i)
        buf[i] = s1[i] / k;
    CycNum out;
    out.c = fold(buf);
    return out;
}

CycNum CycNum::galois(long d) const
{
    if (!is_galois_element(d))
        throw std::invalid_argument("not a Galois element");
    long dd = mod72(d);
    std::vector<mpq_class> buf(order);
    for (int k = 0; k < degree; ++k)
        if (sgn(c[k]) != 0)
            buf[(k * dd) % order] += c[k];
    CycNum r;
    r.c = fold(buf);
    return r;
}

BigComplex CycNum::embed(int digits) const
{
    mpfr_prec_t bits = digits_to_bits(digits + 5);
    BigComplex r(bits);
    for (int k = 0; k < degree; ++k) {
        if (sgn(c[k]) == 0)
            continue;
        BigComplex z = exp_2pi_i(BigFloat(mpq_class(k, order), bits));
        r += z * BigFloat(c[k], bits);
    }
    return r;
}

std::string CycNum::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < degree; ++k) {
        if (sgn(c[k]) == 0)
            continue;
        mpq_class v = c[k];
        if (!first)
            os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0)
            os << "-";
        v = abs(v);
        if (k == 0)
            os << v;
        else {
            if (v != 1)
                os << v << "*";
            os << "z^" << k;
        }
        first = false;
    }
    return first ? std::string("0") : os.str();
}

std::ostream & operator<<(std::ostream & o, CycNum const & x)
{
    return o << x.to_string();
}

} // namespace tnclass
