#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tnclass/num_eval.hpp"
#include "tnclass/quadform.hpp"
#include "tnclass/selftest.hpp"

using namespace tnclass;

namespace {

constexpr int prec = 120;

mpfr_prec_t bits()
{
    return digits_to_bits(prec + guard_digits);
}

BigFloat tol(int exponent)
{
    return BigFloat::pow10(exponent, bits());
}

BigComplex cx(long re, long im)
{
    return { BigFloat(re, bits()), BigFloat(im, bits()) };
}

BigComplex real(BigFloat x)
{
    return { std::move(x), BigFloat(0, bits()) };
}

/* q^(1/24) prod_{n=1}^{200} (1 - q^n), written out independently */
BigComplex eta_200(BigComplex const & tau)
{
    BigFloat twopi = BigFloat::pi(bits());
    twopi.mul_si(2);
    BigComplex const z(-(twopi * tau.imag()), twopi * tau.real());
    BigComplex const q = exp(z);
    BigComplex p = exp(z * BigFloat(mpq_class(1, 24), bits()));
    BigComplex qn = cx(1, 0);
    for (int n = 1; n <= 200; ++n) {
        qn *= q;
        p *= cx(1, 0) - qn;
    }
    return p;
}

BigComplex cubic_107(BigComplex const & t)
{
    return t * t * t - t * t * BigFloat(2, bits()) + t * BigFloat(4, bits()) - cx(1, 0);
}

} // namespace

TEST_CASE("eta(i) against Gamma(1/4) / (2 pi^(3/4)) and the 200-factor product")
{
    BigComplex const i = cx(0, 1);
    BigComplex const e = eta(i, prec);

    BigFloat g(bits());
    BigFloat quarter(mpq_class(1, 4), bits());
    mpfr_gamma(g.get(), quarter.get(), MPFR_RNDN);
    BigFloat p34(bits());
    BigFloat three_quarters(mpq_class(3, 4), bits());
    mpfr_pow(p34.get(), BigFloat::pi(bits()).get(), three_quarters.get(), MPFR_RNDN);
    BigFloat const closed = g / (p34 * BigFloat(2, bits()));

    CHECK((e - real(closed)).abs() < tol(-115));
    CHECK((e - eta_200(i)).abs() < tol(-115));
    CHECK(e.real().to_string(10) == "7.682254223e-01");
}

TEST_CASE("eta rejects points off the upper half-plane")
{
    CHECK_THROWS_WITH_AS(eta(cx(1, 0), prec), "not in upper half-plane", std::domain_error);
    CHECK_THROWS_AS(eta(cx(0, -1), prec), std::domain_error);
    CHECK_THROWS_AS(j_invariant(cx(0, 0), prec), std::domain_error);
}

TEST_CASE("eta: series, product and functional equations at random points")
{
    CheckResult const a = check_eta_series_vs_product(20, prec, 101);
    CHECK_MESSAGE(a.passed, a.detail);
    CheckResult const b = check_eta_functional_equations(20, prec, 102);
    CHECK_MESSAGE(b.passed, b.detail);

    std::mt19937 g(3);
    std::uniform_real_distribution<double> x(-0.5, 0.5), y(0.8, 1.5);
    for (int k = 0; k < 5; ++k) {
        BigComplex const t(BigFloat(mpq_class(x(g)), bits()), BigFloat(mpq_class(y(g)), bits()));
        CHECK((eta(t, prec) - eta_200(t)).abs() < tol(-110));
    }
}

TEST_CASE("R functions")
{
    BigFloat const sqrt3 = sqrt(BigFloat(3, bits()));

    /* p_11 = t - 1 */
    BigComplex const t11 = r_function(2, principal_root(11, prec), prec) * sqrt3;
    CHECK((t11 - cx(1, 0)).abs() < tol(-110));

    /* p_35 = t^2 + t - 1: t_35 = (sqrt5 - 1) / 2 */
    BigFloat golden = sqrt(BigFloat(5, bits())) - BigFloat(1, bits());
    golden.div_si(2);
    CHECK((t_n_value(35, prec) - real(golden)).abs() < tol(-110));

    auto const at2i = r_functions(cx(0, 2), prec);
    for (auto const & r : at2i) {
        CHECK(r.abs() > tol(-10));
        CHECK(r.abs() < BigFloat(1000, bits()));
    }
    for (int i = 0; i < 6; ++i)
        CHECK((r_function(i, cx(0, 2), prec) - at2i[i]).abs() < tol(-115));
    CHECK_THROWS_AS(r_function(6, cx(0, 1), prec), std::out_of_range);

    /* level 72 */
    BigComplex const t(BigFloat(mpq_class(1, 7), bits()), BigFloat(mpq_class(9, 10), bits()));
    auto const r0 = r_functions(t, prec);
    auto const r72 = r_functions(t + cx(72, 0), prec);
    for (int i = 0; i < 6; ++i)
        CHECK((r0[i] - r72[i]).abs() < tol(-105));
}

TEST_CASE("rep matrices agree with the numerical R functions")
{
    CheckResult const r = check_rep_numeric(20, prec, 103);
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("t_n")
{
    CHECK_THROWS_WITH_AS(t_n_value(12, prec), "n must be ≡ 11 mod 24", std::invalid_argument);
    CHECK_THROWS_AS(t_n_value(-13, prec), std::invalid_argument);

    BigComplex const t11 = t_n_value(11, prec);
    CHECK((t11 - cx(1, 0)).abs() < tol(-110));

    BigComplex const t107 = t_n_value(107, prec);
    CHECK(cubic_107(t107).abs() < tol(-105));
    CHECK(t107.real().to_string(5) == "2.8477e-01");

    for (long n = 11; n < 1000; n += 24) {
        BigComplex const t = t_n_value(n, prec);
        CHECK(abs(t.imag()) < tol(-prec + 5));
        CHECK(t.real().sign() > 0);
    }
}

TEST_CASE("j invariant")
{
    CHECK((j_invariant(cx(0, 1), prec) - cx(1728, 0)).abs() < tol(-100));
    BigComplex const rho(BigFloat(mpq_class(-1, 2), bits()), sqrt(BigFloat(3, bits())) / BigFloat(2, bits()));
    CHECK(j_invariant(rho, prec).abs() < tol(-100));

    BigComplex sum = cx(0, 0);
    for (auto const & f : enumerate_reduced(-107))
        sum += j_invariant(form_root(f, prec + guard_digits), prec);
    BigComplex const expect(BigFloat(mpz_class("-129783279616000"), bits()), BigFloat(0, bits()));
    CHECK((sum - expect).abs() < tol(-60));
}
