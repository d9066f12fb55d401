#ifndef TNCLASS_SL2_HPP
#define TNCLASS_SL2_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tnclass/quadform.hpp"

namespace tnclass {

/*
 * 2x2 integer matrix (a b; c d). When modulus > 0 the entries are kept in
 * [0, modulus); modulus 0 means plain integers.
 */
struct Mat2
{
    long a = 1, b = 0, c = 0, d = 1;
    long modulus = 0;

    Mat2() = default;
    Mat2(long a, long b, long c, long d, long modulus = 0);

    static Mat2 identity(long modulus = 0) { return { 1, 0, 0, 1, modulus }; }
    /* S = (0 -1; 1 0) and T = (1 1; 0 1) */
    static Mat2 S(long modulus = 0) { return { 0, -1, 1, 0, modulus }; }
    static Mat2 T(long modulus = 0) { return { 1, 1, 0, 1, modulus }; }

    long det() const;
    bool is_identity() const;
    /* the same matrix with entries reduced mod m */
    Mat2 reduced(long m) const;
    /* inverse; requires det = +-1 (plain) or an invertible det mod m */
    Mat2 inverse() const;
    Mat2 pow(long e) const;

    friend Mat2 operator*(Mat2 const & x, Mat2 const & y);
    friend bool operator==(Mat2 const &, Mat2 const &) = default;

    std::string to_string() const;
    friend std::ostream & operator<<(std::ostream & o, Mat2 const & m);
};

/* inverse of x mod m; throws std::domain_error if it does not exist */
long inverse_mod(long x, long m);
long reduce_mod(long x, long m);

enum class Generator { S, T };

struct WordToken
{
    Generator gen;
    long exp;
    friend bool operator==(WordToken const &, WordToken const &) = default;
};

/*
 * A word in S and T. Consecutive T powers are merged, zero exponents are
 * dropped, S carries exponent +-1 and S S^-1 cancels. S S is kept as two
 * tokens.
 */
class STWord
{
    std::vector<WordToken> tok;

    public:

    STWord() = default;
    STWord(std::initializer_list<WordToken> tokens);

    static STWord S() { return { { Generator::S, 1 } }; }
    static STWord T(long e) { return { { Generator::T, e } }; }

    std::vector<WordToken> const & tokens() const { return tok; }
    bool empty() const { return tok.empty(); }
    std::size_t size() const { return tok.size(); }

    STWord & append(WordToken t);
    STWord & operator*=(STWord const & o);
    friend STWord operator*(STWord a, STWord const & b) { return a *= b; }

    /* replace every S by `s` and every T^e by t^e */
    STWord substitute(STWord const & s, STWord const & t) const;
    STWord inverse() const;

    friend bool operator==(STWord const &, STWord const &) = default;
    /* e.g. "T^3 S T^7 S T^3"; "1" for the empty word */
    std::string to_string() const;
};

/* product of the word in SL2(Z/mZ) (m = 0 for SL2(Z)) */
Mat2 evaluate(STWord const & w, long modulus = 0);

/* write M in SL2(Z/p^r) (p^r = 8 or 9) as T^y S T^c S T^(dy-b) when c is a
 * unit, otherwise S T^-z S T^-a S T^(bz-d); the identity gives the empty
 * word. Exponents are reduced into [0, p^r). */
STWord decompose(Mat2 const & M);

/* words in S, T over Z lifting the generators of SL2(Z/8) x SL2(Z/9):
 * s8 = S mod 8, = 1 mod 9; t8 = T mod 8, = 1 mod 9; and symmetrically */
struct LiftWords
{
    STWord s8, t8, s9, t9;
};
LiftWords const & crt_lift_generators();

/* substitute the level-72 lifts of S, T mod p^r into a word over Z/p^r */
STWord lift_word(STWord const & w, long prime_power);

/* Gee's matrix A_{[a,b,c],p^r} for a form with discriminant = 1 mod 4 */
Mat2 form_matrix(QuadForm const & f, long prime_power);

/* the matrix mod 72 reducing to m8 mod 8 and m9 mod 9 */
Mat2 crt_combine(Mat2 const & m8, Mat2 const & m9);
long crt_combine(long x8, long x9);

/* A = B diag(1, d) with det B = 1; A is taken mod its modulus */
struct DetSplit
{
    Mat2 b;
    long d;
};
DetSplit split_det(Mat2 const & A);

/* matrix of multiplication by alpha + beta theta on the basis (theta, 1),
 * theta a root of x^2 - x + C: (alpha + beta, -C beta; beta, alpha) */
Mat2 generator_matrix(long alpha, long beta, long C);

/* T^-1 A T: the same multiplication map written on the basis (theta - 1, 1),
 * i.e. at the point -1/2 + i sqrt(n)/2 where t_n is evaluated */
Mat2 shift_to_principal_root(Mat2 const & A);

} // namespace tnclass

#endif /* TNCLASS_SL2_HPP */
