#include "tnclass/tnclass.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "tnclass/class_poly.hpp"
#include "tnclass/eta_rep.hpp"
#include "tnclass/selftest.hpp"

struct tnc_polynomial
{
    std::vector<std::string> coeffs;
    std::string text;
    long discriminant;
    long class_number;
    int precision;
    std::string max_residual;
};

struct tnc_report
{
    std::vector<tnclass::CheckResult> entries;
};

namespace {

thread_local std::string last_error;

template <class F>
tnc_status guarded(F && f)
{
    try {
        last_error.clear();
        f();
        return TNC_OK;
    } catch (tnclass::RoundingError const & e) {
        last_error = e.what();
        return TNC_ERR_ROUNDING;
    } catch (std::invalid_argument const & e) {
        last_error = e.what();
        return TNC_ERR_INVALID_ARGUMENT;
    } catch (std::out_of_range const & e) {
        last_error = e.what();
        return TNC_ERR_INVALID_ARGUMENT;
    } catch (std::exception const & e) {
        last_error = e.what();
        return TNC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return TNC_ERR_INTERNAL;
    }
}

tnc_status null_output()
{
    last_error = "output pointer is NULL";
    return TNC_ERR_INVALID_ARGUMENT;
}

tnc_polynomial * wrap(tnclass::ClassPolynomial const & p)
{
    auto * out = new tnc_polynomial;
    for (auto const & c : p.poly.coeffs)
        out->coeffs.push_back(c.get_str());
    out->text = p.poly.to_string();
    out->discriminant = p.discriminant;
    out->class_number = p.class_number;
    out->precision = p.precision_digits;
    out->max_residual = p.max_residual.is_zero() ? "0" : p.max_residual.to_string(3);
    return out;
}

} // namespace

extern "C" {

const char * tnc_last_error(void)
{
    return last_error.c_str();
}

const char * tnc_version(void)
{
    return "1.0.0";
}

int tnc_default_precision(void)
{
    if (char const * env = std::getenv("TNCLASS_PRECISION")) {
        char * end = nullptr;
        long const v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 10 && v <= 100000)
            return static_cast<int>(v);
    }
    return tnclass::default_precision;
}

tnc_status tnc_ramanujan_polynomial(long n, int prec, tnc_polynomial ** out)
{
    if (!out)
        return null_output();
    *out = nullptr;
    return guarded([&] { *out = wrap(tnclass::ramanujan_polynomial(n, prec)); });
}

tnc_status tnc_hilbert_polynomial(long disc, int prec, tnc_polynomial ** out)
{
    if (!out)
        return null_output();
    *out = nullptr;
    return guarded([&] { *out = wrap(tnclass::hilbert_polynomial(disc, prec)); });
}

size_t tnc_polynomial_degree(const tnc_polynomial * p)
{
    return p && !p->coeffs.empty() ? p->coeffs.size() - 1 : 0;
}

const char * tnc_polynomial_coefficient(const tnc_polynomial * p, size_t i)
{
    return p && i < p->coeffs.size() ? p->coeffs[i].c_str() : nullptr;
}

const char * tnc_polynomial_text(const tnc_polynomial * p)
{
    return p ? p->text.c_str() : nullptr;
}

long tnc_polynomial_discriminant(const tnc_polynomial * p)
{
    return p ? p->discriminant : 0;
}

long tnc_polynomial_class_number(const tnc_polynomial * p)
{
    return p ? p->class_number : 0;
}

int tnc_polynomial_precision(const tnc_polynomial * p)
{
    return p ? p->precision : 0;
}

const char * tnc_polynomial_max_residual(const tnc_polynomial * p)
{
    return p ? p->max_residual.c_str() : nullptr;
}

void tnc_polynomial_free(tnc_polynomial * p)
{
    delete p;
}

tnc_status tnc_check_invariance(int n_class, tnc_report ** out)
{
    if (!out)
        return null_output();
    *out = nullptr;
    return guarded([&] {
        auto * r = new tnc_report;
        for (auto const & g : tnclass::invariance_report(n_class))
            r->entries.push_back({ g.label, g.fixed,
                                   "A = " + g.matrix.to_string() + ", d = " + std::to_string(g.d) });
        *out = r;
    });
}

tnc_status tnc_selftest(int prec, unsigned seed, tnc_report ** out)
{
    if (!out)
        return null_output();
    *out = nullptr;
    return guarded([&] {
        if (prec < 30)
            throw std::invalid_argument("selftest needs at least 30 digits");
        *out = new tnc_report { tnclass::run_selftest(prec, seed) };
    });
}

size_t tnc_report_size(const tnc_report * r)
{
    return r ? r->entries.size() : 0;
}

const char * tnc_report_name(const tnc_report * r, size_t i)
{
    return r && i < r->entries.size() ? r->entries[i].name.c_str() : nullptr;
}

int tnc_report_passed(const tnc_report * r, size_t i)
{
    return r && i < r->entries.size() && r->entries[i].passed ? 1 : 0;
}

const char * tnc_report_detail(const tnc_report * r, size_t i)
{
    return r && i < r->entries.size() ? r->entries[i].detail.c_str() : nullptr;
}

int tnc_report_all_passed(const tnc_report * r)
{
    if (!r)
        return 0;
    for (auto const & e : r->entries)
        if (!e.passed)
            return 0;
    return 1;
}

void tnc_report_free(tnc_report * r)
{
    delete r;
}

} // extern "C"
