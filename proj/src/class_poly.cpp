#include "tnclass/class_poly.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tnclass/eta_rep.hpp"
#include "tnclass/sl2.hpp"

namespace tnclass {

BigComplex IntPolynomial::evaluate(BigComplex const & x) const
{
    mpfr_prec_t const bits = x.precision();
    BigComplex r(0, 0, bits);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r *= x;
        r += BigComplex(BigFloat(*it, bits), BigFloat(0, bits));
    }
    return r;
}

std::string IntPolynomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        mpz_class const & c = coeffs[i];
        if (c == 0)
            continue;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        mpz_class const a = abs(c);
        if (a != 1 || i == 0)
            os << a.get_str();
        if (i > 0)
            os << "x";
        if (i > 1)
            os << "^" << i;
    }
    return first ? "0" : os.str();
}

IntPolynomial parse_polynomial(std::string const & text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw std::invalid_argument("empty polynomial");

    IntPolynomial p;
    std::size_t i = 0;
    auto bad = [&] { return std::invalid_argument("cannot parse polynomial \"" + text + "\""); };
    auto digits = [&] {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        std::string d = s.substr(i, j - i);
        i = j;
        return d;
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw bad();
        }
        std::string const c = digits();
        mpz_class coeff = c.empty() ? mpz_class(1) : mpz_class(c);
        long power = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string const e = digits();
                if (e.empty())
                    throw bad();
                power = std::stol(e);
            }
        } else if (c.empty()) {
            throw bad();
        }
        if (static_cast<long>(p.coeffs.size()) <= power)
            p.coeffs.resize(power + 1);
        p.coeffs[power] += sign * coeff;
    }
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0)
        p.coeffs.pop_back();
    return p;
}

ConjugateRecord conjugate_value(long n, QuadForm const & f, int prec)
{
    require_ramanujan_n(n);
    if (f.discriminant() != -n)
        throw std::invalid_argument("form " + f.to_string() + " does not have discriminant -"
                                    + std::to_string(n));
    Mat2 const A = crt_combine(form_matrix(f, 8), form_matrix(f, 9));
    GroupAction const act = full_action(A);
    if (!act.matrix.is_monomial())
        throw std::domain_error("representation not monomial");

    FunctionVector v;
    v[2] = CycNum::sqrt3();
    FunctionVector const w = act.apply(v);
    int target = -1;
    for (int i = 0; i < rep_dim; ++i)
        if (!w[i].is_zero()) {
            if (target >= 0)
                throw std::domain_error("representation not monomial");
            target = i;
        }
    if (target < 0)
        throw std::domain_error("representation not monomial");

    int const work = prec + guard_digits;
    BigComplex value = w[target].embed(work) * r_function(target, form_root(f, work), prec);
    return { f, w[target], target, act.d, std::move(value) };
}

namespace {

/* monic polynomial with the given roots, rounded to integers */
ClassPolynomial assemble(std::vector<BigComplex> const & roots, long D, int prec)
{
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    std::vector<BigComplex> c;
    c.emplace_back(1, 0, bits);
    for (auto const & r : roots) {
        c.emplace_back(0, 0, bits);
        for (std::size_t i = c.size() - 1; i > 0; --i)
            c[i] = c[i - 1] - r * c[i];
        c[0] = -(r * c[0]);
    }
    ClassPolynomial out { {}, D, static_cast<long>(roots.size()), prec, BigFloat(0, bits) };
    for (auto it = c.begin(); it != c.end(); ++it) {
        mpz_class const k = it->real().round();
        BigFloat const res = max(abs(it->real() - BigFloat(k, bits)), abs(it->imag()));
        out.max_residual = max(out.max_residual, res);
        out.poly.coeffs.push_back(k);
    }
    return out;
}

bool rounding_ok(ClassPolynomial const & p)
{
    return p.max_residual.to_double() < rounding_threshold;
}

[[noreturn]] void rounding_failure(ClassPolynomial const & p, int retries)
{
    double const w = p.max_residual.log10_abs();
    std::ostringstream os;
    os << "rounding residual " << p.max_residual.to_string(3) << " exceeds "
       << rounding_threshold << " after " << retries << " retries at "
       << p.precision_digits << " digits";
    throw RoundingError(os.str(), w);
}

} // namespace

ClassPolynomial ramanujan_polynomial(long n, int prec, std::vector<ConjugateRecord> & conjugates)
{
    require_ramanujan_n(n);
    if (prec < 10)
        throw std::invalid_argument("precision must be at least 10 digits");
    std::vector<QuadForm> const forms = enumerate_reduced(-n);
    for (int attempt = 0;; ++attempt, prec *= 2) {
        conjugates.clear();
        std::vector<BigComplex> roots;
        for (auto const & f : forms) {
            conjugates.push_back(conjugate_value(n, f, prec));
            roots.push_back(conjugates.back().value);
        }
        ClassPolynomial p = assemble(roots, -n, prec);
        if (rounding_ok(p))
            return p;
        if (attempt == max_retries)
            rounding_failure(p, attempt);
    }
}

ClassPolynomial ramanujan_polynomial(long n, int prec)
{
    std::vector<ConjugateRecord> unused;
    return ramanujan_polynomial(n, prec, unused);
}

int hilbert_precision(long D)
{
    double s = 0;
    for (auto const & f : enumerate_reduced(D))
        s += 1.0 / f.a.get_d();
    double const n = static_cast<double>(-D);
    return static_cast<int>(std::ceil(std::numbers::pi * std::sqrt(n) / std::numbers::ln10 * s)) + 20;
}

ClassPolynomial hilbert_polynomial(long D, int prec)
{
    std::vector<QuadForm> const forms = enumerate_reduced(D);
    prec = std::max(prec, hilbert_precision(D));
    for (int attempt = 0;; ++attempt, prec *= 2) {
        std::vector<BigComplex> roots;
        for (auto const & f : forms)
            roots.push_back(j_invariant(form_root(f, prec + guard_digits), prec));
        ClassPolynomial p = assemble(roots, D, prec);
        if (rounding_ok(p))
            return p;
        if (attempt == max_retries)
            rounding_failure(p, attempt);
    }
}

PolynomialReport verify_polynomial(IntPolynomial const & p, long n, int prec)
{
    require_ramanujan_n(n);
    mpfr_prec_t const bits = digits_to_bits(prec + guard_digits);
    PolynomialReport r { BigFloat(0, bits), false, BigFloat(0, bits), false,
                         false, p.is_monic(), false };
    std::vector<QuadForm> const forms = enumerate_reduced(-n);
    r.degree_ok = p.degree() == static_cast<long>(forms.size());
    r.unit_constant = !p.coeffs.empty() && abs(p.coeffs[0]) == 1;

    r.root_residual = p.evaluate(t_n_value(n, prec)).abs();
    r.root_ok = r.root_residual < BigFloat::pow10(-prec / 2, bits);

    try {
        for (auto const & f : forms)
            r.conjugate_residual = max(r.conjugate_residual,
                                       p.evaluate(conjugate_value(n, f, prec).value).abs());
        r.conjugates_ok = r.conjugate_residual < BigFloat::pow10(-prec / 3, bits);
    } catch (std::domain_error const &) {
        r.conjugates_ok = false;
    }
    return r;
}

} // namespace tnclass
