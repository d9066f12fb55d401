#include "tnclass/sl2.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tnclass {

long reduce_mod(long x, long m)
{
    x %= m;
    return x < 0 ? x + m : x;
}

long inverse_mod(long x, long m)
{
    long g = m, a = reduce_mod(x, m), u0 = 0, u1 = 1;
    while (a != 0) {
        long q = g / a;
        long t = g - q * a;
        g = a;
        a = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
    }
    if (g != 1)
        throw std::domain_error(std::to_string(x) + " is not invertible mod "
                                + std::to_string(m));
    return reduce_mod(u0, m);
}

Mat2::Mat2(long a, long b, long c, long d, long modulus)
    : a(a), b(b), c(c), d(d), modulus(modulus)
{
    if (modulus < 0)
        throw std::invalid_argument("negative modulus");
    if (modulus > 0) {
        this->a = reduce_mod(a, modulus);
        this->b = reduce_mod(b, modulus);
        this->c = reduce_mod(c, modulus);
        this->d = reduce_mod(d, modulus);
    }
}

long Mat2::det() const
{
    long r = a * d - b * c;
    return modulus ? reduce_mod(r, modulus) : r;
}

bool Mat2::is_identity() const
{
    return a == 1 && b == 0 && c == 0 && d == 1;
}

Mat2 Mat2::reduced(long m) const
{
    return { a, b, c, d, m };
}

Mat2 Mat2::inverse() const
{
    long dt = det();
    if (modulus == 0) {
        if (dt != 1 && dt != -1)
            throw std::domain_error("integer matrix " + to_string() + " is not unimodular");
        return { d * dt, -b * dt, -c * dt, a * dt };
    }
    long di = inverse_mod(dt, modulus);
    return { d * di, -b * di, -c * di, a * di, modulus };
}

Mat2 Mat2::pow(long e) const
{
    Mat2 base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    Mat2 r = identity(modulus);
    while (k) {
        if (k & 1)
            r = r * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return r;
}

Mat2 operator*(Mat2 const & x, Mat2 const & y)
{
    if (x.modulus != y.modulus)
        throw std::invalid_argument("matrix moduli differ");
    return { x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
             x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, x.modulus };
}

std::string Mat2::to_string() const
{
    std::ostringstream os;
    os << "(" << a << "," << b << ";" << c << "," << d << ")";
    if (modulus)
        os << " mod " << modulus;
    return os.str();
}

std::ostream & operator<<(std::ostream & o, Mat2 const & m)
{
    return o << m.to_string();
}

STWord::STWord(std::initializer_list<WordToken> tokens)
{
    for (auto const & t : tokens)
        append(t);
}

STWord & STWord::append(WordToken t)
{
    if (t.gen == Generator::S) {
        if (t.exp != 1 && t.exp != -1)
            throw std::invalid_argument("S exponent must be +-1");
        if (!tok.empty() && tok.back().gen == Generator::S && tok.back().exp == -t.exp)
            tok.pop_back();
        else
            tok.push_back(t);
        return *this;
    }
    if (t.exp == 0)
        return *this;
    if (!tok.empty() && tok.back().gen == Generator::T) {
        tok.back().exp += t.exp;
        if (tok.back().exp == 0)
            tok.pop_back();
        return *this;
    }
    tok.push_back(t);
    return *this;
}

STWord & STWord::operator*=(STWord const & o)
{
    for (auto const & t : o.tok)
        append(t);
    return *this;
}

STWord STWord::substitute(STWord const & s, STWord const & t) const
{
    STWord out;
    STWord const s_inv = s.inverse();
    for (auto const & x : tok) {
        if (x.gen == Generator::S) {
            out *= x.exp == 1 ? s : s_inv;
            continue;
        }
        STWord const & base = x.exp > 0 ? t : t.inverse();
        long const k = x.exp > 0 ? x.exp : -x.exp;
        /* T^e of a pure T power stays one token */
        if (base.size() == 1 && base.tokens()[0].gen == Generator::T) {
            out.append({ Generator::T, base.tokens()[0].exp * k });
            continue;
        }
        for (long i = 0; i < k; ++i)
            out *= base;
    }
    return out;
}

STWord STWord::inverse() const
{
    STWord out;
    for (auto it = tok.rbegin(); it != tok.rend(); ++it)
        out.append({ it->gen, -it->exp });
    return out;
}

std::string STWord::to_string() const
{
    if (tok.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (auto const & t : tok) {
        if (!first)
            os << " ";
        first = false;
        os << (t.gen == Generator::S ? "S" : "T");
        if (t.exp != 1)
            os << "^" << t.exp;
    }
    return os.str();
}

Mat2 evaluate(STWord const & w, long modulus)
{
    Mat2 r = Mat2::identity(modulus);
    for (auto const & t : w.tokens()) {
        Mat2 g = t.gen == Generator::S ? Mat2::S(modulus) : Mat2::T(modulus);
        r = r * g.pow(t.exp);
    }
    return r;
}

namespace {

void require_prime_power(long pr)
{
    if (pr != 8 && pr != 9)
        throw std::invalid_argument("only the prime powers 8 and 9 are supported, got "
                                    + std::to_string(pr));
}

long prime_of(long pr)
{
    return pr == 8 ? 2 : 3;
}

} // namespace

STWord decompose(Mat2 const & M)
{
    long const m = M.modulus;
    require_prime_power(m);
    if (M.det() != 1)
        throw std::invalid_argument("matrix " + M.to_string() + " is not in SL2");
    if (M.is_identity())
        return {};
    long const p = prime_of(m);
    if (M.c % p != 0) {
        long y = reduce_mod((1 + M.a) * inverse_mod(M.c, m), m);
        return { { Generator::T, y }, { Generator::S, 1 }, { Generator::T, M.c },
                 { Generator::S, 1 }, { Generator::T, reduce_mod(M.d * y - M.b, m) } };
    }
    if (M.a % p != 0) {
        long z = reduce_mod((1 + M.c) * inverse_mod(M.a, m), m);
        return { { Generator::S, 1 }, { Generator::T, reduce_mod(-z, m) }, { Generator::S, 1 },
                 { Generator::T, reduce_mod(-M.a, m) }, { Generator::S, 1 },
                 { Generator::T, reduce_mod(M.b * z - M.d, m) } };
    }
    throw std::invalid_argument("lemma precondition violated");
}

LiftWords const & crt_lift_generators()
{
    using G = Generator;
    static LiftWords const lifts = {
        { { G::T, -1 }, { G::S, 1 }, { G::T, -10 }, { G::S, 1 }, { G::T, -1 }, { G::S, 1 }, { G::T, -162 } },
        { { G::T, 9 } },
        { { G::T, -1 }, { G::S, 1 }, { G::T, -65 }, { G::S, 1 }, { G::T, -1 }, { G::S, 1 }, { G::T, 1096 } },
        { { G::T, -8 } },
    };
    return lifts;
}

STWord lift_word(STWord const & w, long prime_power)
{
    require_prime_power(prime_power);
    LiftWords const & L = crt_lift_generators();
    return prime_power == 8 ? w.substitute(L.s8, L.t8) : w.substitute(L.s9, L.t9);
}

Mat2 form_matrix(QuadForm const & f, long prime_power)
{
    require_prime_power(prime_power);
    if (mpz_class(f.discriminant() % 4 + 4) % 4 != 1)
        throw std::invalid_argument("form " + f.to_string() + " has discriminant not 1 mod 4");
    long const p = prime_of(prime_power);
    long const a = mpz_class(f.a % prime_power).get_si();
    long const b = mpz_class(f.b % (2 * prime_power)).get_si();
    long const c = mpz_class(f.c % prime_power).get_si();
    /* b is odd, so the halvings are exact */
    if (a % p != 0)
        return { a, (b - 1) / 2, 0, 1, prime_power };
    if (c % p != 0)
        return { (-b - 1) / 2, -c, 1, 0, prime_power };
    return { (-b - 1) / 2 - a, (1 - b) / 2 - c, 1, -1, prime_power };
}

long crt_combine(long x8, long x9)
{
    /* 9 * 9 = 81 = 1 mod 8 and 64 = 1 mod 9 */
    return reduce_mod(81 * reduce_mod(x8, 8) + 64 * reduce_mod(x9, 9), 72);
}

Mat2 crt_combine(Mat2 const & m8, Mat2 const & m9)
{
    if (m8.modulus != 8 || m9.modulus != 9)
        throw std::invalid_argument("crt_combine expects matrices mod 8 and mod 9");
    if (std::gcd(m8.det(), 8L) != 1 || std::gcd(m9.det(), 9L) != 1)
        throw std::domain_error("non-invertible determinant");
    return { crt_combine(m8.a, m9.a), crt_combine(m8.b, m9.b),
             crt_combine(m8.c, m9.c), crt_combine(m8.d, m9.d), 72 };
}

DetSplit split_det(Mat2 const & A)
{
    if (A.modulus == 0)
        throw std::invalid_argument("split_det needs a modulus");
    long const d = A.det();
    long const di = inverse_mod(d, A.modulus);
    /* A diag(1, d^-1) has determinant 1 */
    return { Mat2(A.a, A.b * di, A.c, A.d * di, A.modulus), d };
}

Mat2 generator_matrix(long alpha, long beta, long C)
{
    return { alpha + beta, -C * beta, beta, alpha };
}

Mat2 shift_to_principal_root(Mat2 const & A)
{
    return Mat2::T(A.modulus).inverse() * A * Mat2::T(A.modulus);
}

} // namespace tnclass
