// tnclass: class polynomials of Ramanujan's t_n and Hilbert class polynomials

#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tnclass/tnclass.h"

using json = nlohmann::ordered_json;

namespace {

struct PolyOut
{
    tnc_status status = TNC_OK;
    std::string error;
    long n = 0;
    std::string text;
    json record;
};

bool squarefree(long n)
{
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

PolyOut collect(tnc_status st, tnc_polynomial * p, long n)
{
    PolyOut out;
    out.n = n;
    out.status = st;
    if (st != TNC_OK) {
        out.error = tnc_last_error();
        return out;
    }
    json coeffs = json::array();
    for (size_t i = 0; i <= tnc_polynomial_degree(p); ++i)
        coeffs.push_back(tnc_polynomial_coefficient(p, i));
    out.text = tnc_polynomial_text(p);
    out.record = { { "n", n },
                   { "discriminant", tnc_polynomial_discriminant(p) },
                   { "class_number", tnc_polynomial_class_number(p) },
                   { "coefficients", coeffs },
                   { "precision_digits", tnc_polynomial_precision(p) },
                   { "max_residual", tnc_polynomial_max_residual(p) } };
    tnc_polynomial_free(p);
    return out;
}

PolyOut run_pn(long n, int prec)
{
    tnc_polynomial * p = nullptr;
    tnc_status const st = tnc_ramanujan_polynomial(n, prec, &p);
    return collect(st, p, n);
}

int fail(std::string const & reason)
{
    std::cerr << "error: " << reason << "\n";
    return 1;
}

void warn_squarefree(long n)
{
    if (n > 0 && n % 24 == 11 && !squarefree(n))
        std::cerr << "warning: n = " << n << " is not squarefree; Z[theta] is not the maximal order\n";
}

void print_poly(PolyOut const & r, bool as_json, bool with_n)
{
    if (as_json)
        std::cout << r.record.dump() << "\n";
    else if (with_n)
        std::cout << r.n << ": " << r.text << "\n";
    else
        std::cout << r.text << "\n";
}

void print_report(tnc_report const * r, json & arr, bool as_json)
{
    for (size_t i = 0; i < tnc_report_size(r); ++i) {
        bool const ok = tnc_report_passed(r, i);
        if (as_json)
            arr.push_back({ { "name", tnc_report_name(r, i) },
                            { "passed", ok },
                            { "detail", tnc_report_detail(r, i) } });
        else
            std::cout << (ok ? "PASS " : "FAIL ") << tnc_report_name(r, i) << ": "
                      << tnc_report_detail(r, i) << "\n";
    }
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app { "Class polynomials of Ramanujan's t_n and Hilbert class polynomials" };
    app.require_subcommand(1);
    app.fallthrough();

    int prec = tnc_default_precision();
    std::string format = "text";
    app.add_option("--prec", prec, "working precision in decimal digits (env TNCLASS_PRECISION)")
        ->check(CLI::Range(10, 100000));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({ "text", "json" }));

    long n = 0;
    auto * pn = app.add_subcommand("pn", "minimal polynomial p_n of t_n");
    pn->add_option("--n", n, "n = 11 mod 24")->required();

    long from = 0, to = 0;
    unsigned jobs = 1;
    auto * range = app.add_subcommand("pn-range", "p_n for every n = 11 mod 24 in [from, to]");
    range->add_option("--from", from)->required();
    range->add_option("--to", to)->required();
    range->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

    long disc = 0;
    auto * hilbert = app.add_subcommand("hilbert", "Hilbert class polynomial");
    hilbert->add_option("--disc", disc, "discriminant D < 0, D = 1 mod 4")->required();

    auto * inv = app.add_subcommand("check-invariance",
                                    "exact invariance of sqrt3 R2 under (O/72O)*");

    unsigned seed = 20240101;
    auto * self = app.add_subcommand("selftest", "numeric and combinatorial self checks");
    self->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        return fail(e.what());
    }

    bool const as_json = format == "json";
    auto const start = std::chrono::steady_clock::now();
    auto report_time = [&] {
        std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
        std::fprintf(stderr, "runtime: %.3f s\n", dt.count());
    };

    if (*pn) {
        warn_squarefree(n);
        PolyOut const r = run_pn(n, prec);
        if (r.status != TNC_OK)
            return fail(r.error);
        print_poly(r, as_json, false);
        report_time();
        return 0;
    }

    if (*range) {
        if (from > to)
            return fail("--from must not exceed --to");
        std::vector<long> ns;
        for (long k = std::max(from, 1L); k <= to; ++k)
            if (k % 24 == 11)
                ns.push_back(k);
        for (long k : ns)
            warn_squarefree(k);
        std::vector<PolyOut> results(ns.size());
        std::atomic<std::size_t> next { 0 };
        auto worker = [&] {
            for (std::size_t i; (i = next++) < ns.size();)
                results[i] = run_pn(ns[i], prec);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < jobs; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();

        json arr = json::array();
        for (auto const & r : results) {
            if (r.status != TNC_OK)
                return fail("n = " + std::to_string(r.n) + ": " + r.error);
            if (as_json)
                arr.push_back(r.record);
            else
                print_poly(r, false, true);
        }
        if (as_json)
            std::cout << arr.dump() << "\n";
        report_time();
        return 0;
    }

    if (*hilbert) {
        tnc_polynomial * p = nullptr;
        tnc_status const st = tnc_hilbert_polynomial(disc, prec, &p);
        PolyOut const r = collect(st, p, -disc);
        if (r.status != TNC_OK)
            return fail(r.error);
        print_poly(r, as_json, false);
        report_time();
        return 0;
    }

    if (*inv) {
        bool all = true;
        json arr = json::array();
        for (int cls : { 11, 35, 59 }) {
            tnc_report * r = nullptr;
            if (tnc_check_invariance(cls, &r) != TNC_OK)
                return fail(tnc_last_error());
            bool const ok = tnc_report_all_passed(r);
            all = all && ok;
            if (as_json) {
                json gens = json::array();
                print_report(r, gens, true);
                arr.push_back({ { "n_mod_72", cls }, { "passed", ok }, { "generators", gens } });
            } else {
                std::cout << (ok ? "PASS" : "FAIL") << " n = " << cls << " mod 72: sqrt3*R2 fixed by "
                          << tnc_report_size(r) << " generators\n";
                for (size_t i = 0; i < tnc_report_size(r); ++i)
                    std::cerr << "  " << tnc_report_name(r, i) << ": " << tnc_report_detail(r, i)
                              << (tnc_report_passed(r, i) ? "" : " NOT FIXED") << "\n";
            }
            tnc_report_free(r);
        }
        if (as_json)
            std::cout << arr.dump() << "\n";
        report_time();
        return all ? 0 : 1;
    }

    if (*self) {
        tnc_report * r = nullptr;
        if (tnc_selftest(prec, seed, &r) != TNC_OK)
            return fail(tnc_last_error());
        json arr = json::array();
        print_report(r, arr, as_json);
        if (as_json)
            std::cout << arr.dump() << "\n";
        bool const ok = tnc_report_all_passed(r);
        tnc_report_free(r);
        report_time();
        return ok ? 0 : 1;
    }
    return 1;
}
