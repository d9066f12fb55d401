#include "tnclass/selftest.hpp"

#include <random>
#include <sstream>

#include "tnclass/eta_rep.hpp"
#include "tnclass/num_eval.hpp"
#include "tnclass/sl2.hpp"

namespace tnclass {

namespace {

bool reconstructs(Mat2 const & M, std::string & why)
{
    long const m = M.modulus;
    STWord const w = decompose(M);
    if (!(evaluate(w, m) == M)) {
        why = M.to_string() + " -> " + w.to_string();
        return false;
    }
    long const other = m == 8 ? 9 : 8;
    Mat2 const lifted = evaluate(lift_word(w, m), 72);
    if (!(lifted.reduced(m) == M) || !lifted.reduced(other).is_identity()) {
        why = "lift of " + M.to_string() + " gives " + lifted.to_string();
        return false;
    }
    return true;
}

struct RandomTau
{
    std::mt19937 gen;
    std::uniform_real_distribution<double> x { -0.5, 0.5 };
    std::uniform_real_distribution<double> y { 0.6, 1.6 };

    explicit RandomTau(unsigned seed) : gen(seed) {}

    BigComplex operator()(int prec)
    {
        mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
        return { BigFloat(mpq_class(x(gen)), bits), BigFloat(mpq_class(y(gen)), bits) };
    }
};

/* |a - b| tracked as a maximum */
struct Worst
{
    BigFloat value { 0, 64 };

    void add(BigComplex const & a, BigComplex const & b) { value = max(value, (a - b).abs()); }
    bool below(int exponent) const
    {
        return value < BigFloat::pow10(exponent, value.precision());
    }
};

std::string describe(Worst const & w, int exponent)
{
    std::ostringstream os;
    os << "max error " << w.value.to_string(3) << " (tolerance 1e" << exponent << ")";
    return os.str();
}

std::array<BigComplex, rep_dim> apply_numeric(RepMatrix const & M,
                                              std::array<BigComplex, rep_dim> const & r,
                                              int prec)
{
    mpfr_prec_t const bits = r[0].precision();
    std::array<BigComplex, rep_dim> out;
    for (int i = 0; i < rep_dim; ++i) {
        out[i] = BigComplex(0, 0, bits);
        for (int j = 0; j < rep_dim; ++j)
            if (!M(i, j).is_zero())
                out[i] += M(i, j).embed(prec + guard_digits) * r[j];
    }
    return out;
}

int tolerance_exponent(int prec)
{
    return -(prec - 20);
}

} // namespace

CheckResult check_word_reconstruction(int samples9, unsigned seed)
{
    CheckResult res { "word reconstruction", true, "" };
    std::string why;
    long count8 = 0;
    for (long a = 0; a < 8 && res.passed; ++a)
        for (long b = 0; b < 8 && res.passed; ++b)
            for (long c = 0; c < 8 && res.passed; ++c)
                for (long d = 0; d < 8 && res.passed; ++d) {
                    Mat2 const M(a, b, c, d, 8);
                    if (M.det() != 1)
                        continue;
                    ++count8;
                    res.passed = reconstructs(M, why);
                }
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> entry(0, 8);
    for (int k = 0; k < samples9 && res.passed;) {
        Mat2 const M(entry(gen), entry(gen), entry(gen), entry(gen), 9);
        if (M.det() != 1)
            continue;
        ++k;
        res.passed = reconstructs(M, why);
    }
    std::ostringstream os;
    if (res.passed)
        os << count8 << " elements of SL2(Z/8), " << samples9 << " samples of SL2(Z/9)";
    else
        os << "failed: " << why;
    res.detail = os.str();
    return res;
}

CheckResult check_eta_functional_equations(int points, int prec, unsigned seed)
{
    RandomTau rnd(seed);
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    BigComplex const one(1, 0, bits);
    BigComplex const minus_i(0, -1, bits);
    BigComplex const z24 = exp_2pi_i(BigFloat(mpq_class(1, 24), bits));
    Worst w;
    for (int k = 0; k < points; ++k) {
        BigComplex const t = rnd(prec);
        BigComplex const e = eta(t, prec);
        w.add(eta(t + one, prec), z24 * e);
        w.add(eta(-(one / t), prec), sqrt(minus_i * t) * e);
    }
    int const ex = tolerance_exponent(prec);
    return { "eta functional equations", w.below(ex), describe(w, ex) };
}

CheckResult check_eta_series_vs_product(int points, int prec, unsigned seed)
{
    RandomTau rnd(seed);
    Worst w;
    for (int k = 0; k < points; ++k) {
        BigComplex const t = rnd(prec);
        w.add(eta(t, prec), eta_product(t, prec));
    }
    int const ex = tolerance_exponent(prec);
    return { "eta series vs product", w.below(ex), describe(w, ex) };
}

CheckResult check_rep_numeric(int points, int prec, unsigned seed)
{
    RandomTau rnd(seed);
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    BigComplex const one(1, 0, bits);
    BigFloat const three(3, bits);
    static long const ds[] = { 5, 7, 11, 13, 35, 65, 71 };
    Worst w;
    for (int k = 0; k < points; ++k) {
        BigComplex const t = rnd(prec);
        auto const r = r_functions(t, prec);

        auto const rt = r_functions(t + one, prec);
        auto const at = apply_numeric(rep_T(), r, prec);
        auto const rs = r_functions(-(one / t), prec);
        auto const as = apply_numeric(rep_S(), r, prec);
        for (int i = 0; i < rep_dim; ++i) {
            w.add(rt[i], at[i]);
            w.add(rs[i], as[i]);
        }

        /* sigma_d moves the root of unity in eta((t + j)/3) to eta((t + jd)/3) */
        long const d = ds[k % std::size(ds)];
        BigComplex const e = eta(t, prec);
        BigComplex const e3 = eta(t * three, prec);
        BigComplex const inv = one / (e * e);
        std::array<BigComplex, 3> tw;
        for (long j = 0; j < 3; ++j)
            tw[j] = eta((t + BigComplex(j * d, 0, bits)) / BigComplex(3, 0, bits), prec);
        std::array<BigComplex, rep_dim> const twisted = {
            e3 * tw[0] * inv, e3 * tw[1] * inv, e3 * tw[2] * inv,
            tw[0] * tw[2] * inv, tw[0] * tw[1] * inv, tw[2] * tw[1] * inv
        };
        auto const ad = apply_numeric(rep_sigma(d), r, prec);
        for (int i = 0; i < rep_dim; ++i)
            w.add(twisted[i], ad[i]);
    }
    int const ex = tolerance_exponent(prec);
    return { "rep_T, rep_S, rep_sigma numeric", w.below(ex), describe(w, ex) };
}

std::vector<CheckResult> run_selftest(int prec, unsigned seed)
{
    return { check_word_reconstruction(500, seed),
             check_eta_series_vs_product(20, prec, seed + 1),
             check_eta_functional_equations(20, prec, seed + 2),
             check_rep_numeric(20, prec, seed + 3) };
}

} // namespace tnclass
