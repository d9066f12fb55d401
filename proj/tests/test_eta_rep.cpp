#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tnclass/eta_rep.hpp"

using namespace tnclass;

namespace {

CycNum z(long k)
{
    return CycNum::root_power(k);
}

/* truncated power series in y = q^(1/3) */
constexpr int terms = 30;
using Series = std::array<CycNum, terms>;

Series one_series()
{
    Series s;
    s[0] = 1;
    return s;
}

Series mul(Series const & a, Series const & b)
{
    Series r;
    for (int i = 0; i < terms; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j < terms; ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

/* prod_{n >= 1} (1 - w^n y^(step n)) */
Series eta_part(long step, long root)
{
    Series p = one_series();
    for (long n = 1; n * step < terms; ++n) {
        Series f = one_series();
        f[n * step] = -z(root * n);
        p = mul(p, f);
    }
    return p;
}

/* inverse of a series with constant term 1 */
Series inverse(Series const & a)
{
    Series r;
    r[0] = 1;
    for (int m = 1; m < terms; ++m) {
        CycNum s;
        for (int k = 1; k <= m; ++k)
            if (!a[k].is_zero())
                s += a[k] * r[m - k];
        r[m] = -s;
    }
    return r;
}

/*
 * With x = q^(1/72), y = x^24:
 *   eta((t + j)/3) = z^j x   prod (1 - zeta_3^(jn) y^n)
 *   eta(3t)        = x^9     prod (1 - y^(9n))
 *   eta(t)         = x^3     prod (1 - y^(3n))
 * so R, R1, R2 are x^4 times a series in y and R3, R4, R5 are x^-4 times one.
 * Returned: the y-series with the root-of-unity prefactor folded in, and the
 * x exponent (4 or -4).
 */
struct Expansion
{
    std::array<Series, rep_dim> s;
    std::array<int, rep_dim> x_exp;
};

Expansion expansions()
{
    std::array<Series, 3> e;
    for (long j = 0; j < 3; ++j) {
        e[j] = eta_part(1, 24 * j);
        for (auto & c : e[j])
            c *= z(j);
    }
    Series const e3 = eta_part(9, 0);
    Series const inv = inverse(mul(eta_part(3, 0), eta_part(3, 0)));
    Expansion out;
    out.s = { mul(mul(e3, e[0]), inv), mul(mul(e3, e[1]), inv), mul(mul(e3, e[2]), inv),
              mul(mul(e[0], e[2]), inv), mul(mul(e[0], e[1]), inv), mul(mul(e[2], e[1]), inv) };
    out.x_exp = { 4, 4, 4, -4, -4, -4 };
    return out;
}

/* sum_j M(i,j) R_j as a series; only same-exponent R_j may contribute */
Series combine(RepMatrix const & M, int i, Expansion const & ex)
{
    Series r;
    for (int j = 0; j < rep_dim; ++j) {
        if (M(i, j).is_zero())
            continue;
        REQUIRE(ex.x_exp[j] == ex.x_exp[i]);
        for (int m = 0; m < terms; ++m)
            r[m] += M(i, j) * ex.s[j][m];
    }
    return r;
}

std::vector<long> galois_elements()
{
    std::vector<long> out;
    for (long d = 1; d < 72; ++d)
        if (d % 2 && d % 3)
            out.push_back(d);
    return out;
}

RepMatrix paper_E()
{
    RepMatrix E;
    E(0, 3) = z(18) * mpq_class(-2, 3) + z(6) * mpq_class(1, 3);
    E(1, 2) = z(15) - z(3);
    E(2, 5) = z(15) * mpq_class(1, 3) + z(3) * mpq_class(1, 3);
    E(3, 4) = -z(9);
    E(4, 0) = z(21) * mpq_class(-2) + z(9);
    E(5, 1) = z(18) + z(6);
    return E;
}

Mat2 random_gl2_72(std::mt19937 & g)
{
    std::uniform_int_distribution<long> e(0, 71);
    for (;;) {
        Mat2 M(e(g), e(g), e(g), e(g), 72);
        if (M.det() % 2 && M.det() % 3)
            return M;
    }
}

FunctionVector sqrt3_r2()
{
    FunctionVector v;
    v[2] = CycNum::sqrt3();
    return v;
}

/* 7 theta + 4 (mod 9), 1 (mod 8), at the principal root, C = 3 */
Mat2 worked_generator()
{
    long const alpha = crt_combine(1, 4), beta = crt_combine(0, 7);
    return shift_to_principal_root(generator_matrix(alpha, beta, 3).reduced(72));
}

} // namespace

TEST_CASE("rep_T and rep_S entries")
{
    CHECK(rep_T()(0, 1) == z(3));
    CHECK(rep_T()(2, 0) == z(6));
    CHECK(rep_S()(0, 0) == CycNum(1));
    CHECK(rep_S()(5, 5) == CycNum(1));
    CHECK(rep_S()(1, 3) == CycNum(1) / (z(3) * CycNum::sqrt3()));
    CHECK(rep_T().is_monomial());
    CHECK(rep_S().is_monomial());
    CHECK(rep_T().pow(18) == RepMatrix::identity());
    RepMatrix const t9 = rep_T().pow(9);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(t9(i, j) == CycNum(i == j ? -1 : 0));
    CHECK(rep_S() * rep_S() == RepMatrix::identity());
    CHECK(rep_T().pow(-5) * rep_T().pow(5) == RepMatrix::identity());
}

TEST_CASE("rep_T against the exact q-expansions")
{
    /* t -> t + 1 multiplies the coefficient of x^e by zeta^e */
    Expansion const ex = expansions();
    for (int i = 0; i < rep_dim; ++i) {
        Series shifted;
        for (int m = 0; m < terms; ++m)
            shifted[m] = ex.s[i][m] * z(ex.x_exp[i] + 24 * m);
        CHECK(shifted == combine(rep_T(), i, ex));
    }
}

TEST_CASE("rep_sigma against the exact q-expansions")
{
    Expansion const ex = expansions();
    for (long d : { 5L, 7L, 11L, 65L, 13L, 71L }) {
        CAPTURE(d);
        RepMatrix const M = rep_sigma(d);
        for (int i = 0; i < rep_dim; ++i) {
            Series twisted;
            for (int m = 0; m < terms; ++m)
                twisted[m] = ex.s[i][m].galois(d);
            CHECK(twisted == combine(M, i, ex));
        }
    }
}

TEST_CASE("rep_sigma")
{
    CHECK(rep_sigma(1) == RepMatrix::identity());
    CHECK(rep_sigma(73) == RepMatrix::identity());
    CHECK_THROWS_WITH_AS(rep_sigma(2), "not a Galois element", std::invalid_argument);
    auto const ds = galois_elements();
    for (long d : ds) {
        CHECK(rep_sigma(d).is_monomial());
        /* sigma_e sigma_d R = sigma_e(M_d) M_e R */
        for (long e : { 5L, 7L, 65L })
            CHECK(rep_sigma(d * e % 72) == rep_sigma(d).galois(e) * rep_sigma(e));
    }
}

TEST_CASE("word_action")
{
    CHECK(word_action(STWord()) == RepMatrix::identity());
    CHECK(word_action(STWord::T(72)) == RepMatrix::identity());
    CHECK(word_action(STWord::T(1096)) == rep_T().pow(1096));
    CHECK(word_action(STWord::T(-162)) == rep_T().pow(-162));
    CHECK(word_action(STWord::S() * STWord::S()) == RepMatrix::identity());

    auto const & L = crt_lift_generators();
    for (auto const * a : { &L.s8, &L.t8 })
        for (auto const * b : { &L.s9, &L.t9 })
            CHECK(word_action(*a) * word_action(*b) == word_action(*b) * word_action(*a));

    std::mt19937 g(1);
    std::uniform_int_distribution<long> e(-200, 200), coin(0, 1);
    for (int k = 0; k < 50; ++k) {
        STWord w;
        for (int t = 0; t < 8; ++t)
            w.append(coin(g) ? WordToken { Generator::S, 1 } : WordToken { Generator::T, e(g) });
        CHECK(word_action(w).is_monomial());
    }
}

TEST_CASE("worked example: the matrix E and the -R2 identity")
{
    Mat2 const A = generator_matrix(4, 7, 3);
    CHECK(A == Mat2(11, -21, 7, 4));
    CHECK(A.reduced(9) == Mat2(2, 6, 7, 4, 9));
    CHECK(A.reduced(8) == Mat2(3, 3, 7, 4, 8));

    DetSplit const s = split_det(Mat2(2, 6, 7, 4, 9));
    CHECK(s.b == Mat2(2, 3, 7, 2, 9));
    CHECK(s.d == 2);
    STWord const w = decompose(s.b);
    CHECK(w.to_string() == "T^3 S T^7 S T^3");

    RepMatrix const E = word_action(lift_word(w, 9));
    CHECK(E == paper_E());

    /* the printed formula: A_sigma65^t applied to sigma_{-65}(E e2) */
    FunctionVector const e2 = basis_vector(2);
    FunctionVector minus_e2 = e2;
    minus_e2[2] = -minus_e2[2];
    CHECK(rep_sigma(65).transpose() * galois(E * e2, -65) == minus_e2);

    /* the group action at the principal root: R2 -> -R2, sqrt3 R2 fixed */
    GroupAction const act = full_action(worked_generator());
    CHECK(act.d == 65);
    CHECK(act.apply(e2) == minus_e2);
    CHECK(act.apply(sqrt3_r2()) == sqrt3_r2());
}

TEST_CASE("full_action")
{
    GroupAction const id = full_action(Mat2::identity(72));
    CHECK(id.matrix == RepMatrix::identity());
    CHECK(id.d == 1);
    CHECK_THROWS_AS(full_action(Mat2::identity(9)), std::invalid_argument);

    std::mt19937 g(21);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int k = 0; k < 20; ++k) {
        Mat2 const A = random_gl2_72(g), B = random_gl2_72(g);
        GroupAction const a = full_action(A), b = full_action(B), ab = full_action(A * B);
        CHECK(a.matrix.is_monomial());
        CHECK(ab.d == A.det() * B.det() % 72);
        /* right action: v^(AB) = (v^A)^B */
        FunctionVector v;
        for (int i = 0; i < rep_dim; ++i)
            v[i] = z(c(g) * 7 + i) * mpq_class(c(g));
        CHECK(ab.apply(v) == b.apply(a.apply(v)));
        CHECK(ab.matrix == b.matrix * a.matrix.galois(b.d));
    }
}

TEST_CASE("unit groups")
{
    UnitGroupInfo const u9 = unit_group(9, 3);
    CHECK(u9.order == 36);
    CHECK(u9.invariant_factors == std::vector<long> { 6, 6 });
    UnitGroupInfo const u8 = unit_group(8, 3);
    CHECK(u8.order == 48);
    CHECK(u8.invariant_factors == std::vector<long> { 12, 2, 2 });
    CHECK_THROWS_AS(unit_group(7, 3), std::invalid_argument);

    /* units counted by the norm a^2 + ab + C b^2 */
    for (long m : { 8L, 9L })
        for (long C = 0; C < m; ++C) {
            long count = 0;
            for (long a = 0; a < m; ++a)
                for (long b = 0; b < m; ++b) {
                    long const nm = (a * a + a * b + C * b * b) % m;
                    if (nm % (m == 8 ? 2 : 3) != 0)
                        ++count;
                }
            UnitGroupInfo const u = unit_group(m, C);
            CHECK(u.order == count);
            long prod = 1;
            for (std::size_t i = 0; i < u.invariant_factors.size(); ++i) {
                prod *= u.invariant_factors[i];
                if (i > 0)
                    CHECK(u.invariant_factors[i - 1] % u.invariant_factors[i] == 0);
            }
            CHECK(prod == u.order);
            long total = 0;
            for (auto const & [ord, cnt] : u.order_histogram)
                total += cnt;
            CHECK(total == u.order);
        }
    CHECK(unit_group(9, 9 % 9).order == 36);
}

TEST_CASE("generator table")
{
    auto const g9 = paper_generators_mod9();
    for (long C : { 3L, 9L, 15L })
        CHECK(verify_generators(9, C, g9));
    for (int cls : { 11, 35, 59 }) {
        auto const g8 = paper_generators_mod8(cls);
        CHECK(verify_generators(8, (cls + 1) / 4, g8));
    }
    UnitElement const one[] = { { 1, 0 } };
    CHECK_FALSE(verify_generators(9, 3, one));
    UnitElement const bad[] = { { 3, 0 } };
    CHECK_THROWS_WITH_AS(verify_generators(9, 3, bad), "not a unit", std::invalid_argument);
    CHECK_THROWS_AS(paper_generators_mod8(13), std::invalid_argument);
}

TEST_CASE("invariance of sqrt3 R2 under the generators")
{
    for (int cls : { 11, 35, 59 }) {
        CAPTURE(cls);
        auto const rep = invariance_report(cls);
        CHECK(rep.size() == 5);
        for (auto const & r : rep)
            CHECK(r.fixed);
        CHECK(invariance_check(cls));
    }
    CHECK_THROWS_AS(invariance_check(12), std::invalid_argument);
}

TEST_CASE("invariance under every unit of O/72O, brute force")
{
    for (long n : { 11L, 35L, 59L }) {
        long const C = (n + 1) / 4;
        long units = 0;
        for (long a = 0; a < 72; ++a)
            for (long b = 0; b < 72; ++b) {
                long const nm = (a * a + a * b + C * b * b) % 72;
                if (nm % 2 == 0 || nm % 3 == 0)
                    continue;
                ++units;
                Mat2 const A = shift_to_principal_root(generator_matrix(a, b, C).reduced(72));
                GroupAction const act = full_action(A);
                if (!(act.apply(sqrt3_r2()) == sqrt3_r2()))
                    FAIL("unit " << a << " + " << b << " theta moves sqrt3 R2 for n = " << n);
            }
        CHECK(units == 1728);
    }
}
