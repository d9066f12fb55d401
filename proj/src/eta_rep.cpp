#include "tnclass/eta_rep.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tnclass {

FunctionVector basis_vector(int i)
{
    FunctionVector v;
    v.at(i) = 1;
    return v;
}

RepMatrix RepMatrix::identity()
{
    RepMatrix r;
    for (int i = 0; i < rep_dim; ++i)
        r.m[i][i] = 1;
    return r;
}

RepMatrix operator*(RepMatrix const & x, RepMatrix const & y)
{
    RepMatrix r;
    for (int i = 0; i < rep_dim; ++i)
        for (int k = 0; k < rep_dim; ++k) {
            if (x.m[i][k].is_zero())
                continue;
            for (int j = 0; j < rep_dim; ++j)
                if (!y.m[k][j].is_zero())
                    r.m[i][j] += x.m[i][k] * y.m[k][j];
        }
    return r;
}

FunctionVector operator*(RepMatrix const & x, FunctionVector const & v)
{
    FunctionVector r;
    for (int i = 0; i < rep_dim; ++i)
        for (int j = 0; j < rep_dim; ++j)
            if (!x.m[i][j].is_zero() && !v[j].is_zero())
                r[i] += x.m[i][j] * v[j];
    return r;
}

RepMatrix RepMatrix::transpose() const
{
    RepMatrix r;
    for (int i = 0; i < rep_dim; ++i)
        for (int j = 0; j < rep_dim; ++j)
            r.m[j][i] = m[i][j];
    return r;
}

RepMatrix RepMatrix::galois(long d) const
{
    RepMatrix r;
    for (int i = 0; i < rep_dim; ++i)
        for (int j = 0; j < rep_dim; ++j)
            if (!m[i][j].is_zero())
                r.m[i][j] = m[i][j].galois(d);
    return r;
}

bool RepMatrix::is_monomial() const
{
    std::array<int, rep_dim> col_count {};
    for (int i = 0; i < rep_dim; ++i) {
        int row_count = 0;
        for (int j = 0; j < rep_dim; ++j)
            if (!m[i][j].is_zero()) {
                ++row_count;
                ++col_count[j];
            }
        if (row_count != 1)
            return false;
    }
    for (int c : col_count)
        if (c != 1)
            return false;
    return true;
}

RepMatrix RepMatrix::monomial_inverse() const
{
    if (!is_monomial())
        throw std::domain_error("representation not monomial");
    RepMatrix r;
    for (int i = 0; i < rep_dim; ++i)
        for (int j = 0; j < rep_dim; ++j)
            if (!m[i][j].is_zero())
                r.m[j][i] = m[i][j].inverse();
    return r;
}

RepMatrix RepMatrix::pow(long e) const
{
    RepMatrix base = e < 0 ? monomial_inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    RepMatrix r = identity();
    while (k) {
        if (k & 1)
            r = r * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return r;
}

std::string RepMatrix::to_string() const
{
    static char const * const names[] = { "R", "R1", "R2", "R3", "R4", "R5" };
    std::ostringstream os;
    for (int i = 0; i < rep_dim; ++i) {
        os << names[i] << ":";
        for (int j = 0; j < rep_dim; ++j)
            if (!m[i][j].is_zero())
                os << " [" << names[j] << "] " << m[i][j];
        os << "\n";
    }
    return os.str();
}

FunctionVector galois(FunctionVector const & v, long d)
{
    FunctionVector r;
    for (int i = 0; i < rep_dim; ++i)
        if (!v[i].is_zero())
            r[i] = v[i].galois(d);
    return r;
}

RepMatrix const & rep_T()
{
    static RepMatrix const t = [] {
        auto z = CycNum::root_power;
        RepMatrix r;
        r(0, 1) = z(3);
        r(1, 2) = z(3);
        r(2, 0) = z(6);
        r(3, 4) = CycNum(1) / z(3);
        r(4, 5) = CycNum(1) / z(6);
        r(5, 3) = CycNum(1) / z(3);
        return r;
    }();
    return t;
}

RepMatrix const & rep_S()
{
    static RepMatrix const s = [] {
        auto z = CycNum::root_power;
        CycNum const sqrt3 = CycNum::sqrt3();
        RepMatrix r;
        r(0, 0) = 1;
        r(1, 3) = CycNum(1) / (z(3) * sqrt3);
        r(2, 4) = z(3) / sqrt3;
        r(3, 1) = z(9) - z(33);
        r(4, 2) = sqrt3 / z(3);
        r(5, 5) = 1;
        return r;
    }();
    return s;
}

RepMatrix rep_sigma(long d)
{
    if (!is_galois_element(d))
        throw std::invalid_argument("not a Galois element");
    auto z = CycNum::root_power;
    /* the eta factors eta(t/3 + 1/3) and eta(t/3 + 2/3) are the only ones
     * with irrational q-coefficients; sigma_d fixes them up to a root of
     * unity when d = 1 mod 3 and swaps them when d = 2 mod 3 */
    RepMatrix r;
    r(0, 0) = 1;
    r(5, 5) = z(3 * d - 3);
    if (reduce_mod(d, 3) == 1) {
        r(1, 1) = z(d - 1);
        r(2, 2) = z(2 * d - 2);
        r(3, 3) = z(2 * d - 2);
        r(4, 4) = z(d - 1);
    } else {
        r(1, 2) = z(d - 2);
        r(2, 1) = z(2 * d - 1);
        r(3, 4) = z(2 * d - 1);
        r(4, 3) = z(d - 2);
    }
    return r;
}

namespace {

/* rep_T()^k for k = 0..71 (rep_T has order 18) */
std::array<RepMatrix, CycNum::order> const & t_powers()
{
    static std::array<RepMatrix, CycNum::order> const table = [] {
        std::array<RepMatrix, CycNum::order> p;
        p[0] = RepMatrix::identity();
        for (int k = 1; k < CycNum::order; ++k)
            p[k] = p[k - 1] * rep_T();
        return p;
    }();
    return table;
}

RepMatrix const & s_inverse()
{
    static RepMatrix const s = rep_S().monomial_inverse();
    return s;
}

} // namespace

RepMatrix word_action(STWord const & w)
{
    RepMatrix r = RepMatrix::identity();
    for (auto const & t : w.tokens()) {
        if (t.gen == Generator::T)
            r = r * t_powers()[reduce_mod(t.exp, CycNum::order)];
        else
            r = r * (t.exp == 1 ? rep_S() : s_inverse());
    }
    return r;
}

FunctionVector GroupAction::apply(FunctionVector const & v) const
{
    return matrix * galois(v, d);
}

GroupAction full_action(Mat2 const & A)
{
    if (A.modulus != 72)
        throw std::invalid_argument("full_action expects a matrix mod 72");
    DetSplit const split = split_det(A);
    STWord w = lift_word(decompose(split.b.reduced(8)), 8)
             * lift_word(decompose(split.b.reduced(9)), 9);
    RepMatrix const mb = word_action(w);
    RepMatrix const m = rep_sigma(split.d).transpose() * mb.transpose().galois(split.d);
    return { m, split.d, std::move(w) };
}

UnitElement unit_multiply(UnitElement x, UnitElement y, long m, long C)
{
    /* theta^2 = theta - C */
    long const bb = x.beta * y.beta;
    return { reduce_mod(x.alpha * y.alpha - C * bb, m),
             reduce_mod(x.alpha * y.beta + x.beta * y.alpha + bb, m) };
}

namespace {

void require_unit_modulus(long m)
{
    if (m != 8 && m != 9)
        throw std::invalid_argument("unit group modulus must be 8 or 9, got "
                                    + std::to_string(m));
}

std::vector<UnitElement> units_of(long m, long C)
{
    std::vector<UnitElement> out;
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b)
            if (is_unit({ a, b }, m, C))
                out.push_back({ a, b });
    return out;
}

long element_order(UnitElement x, long m, long C)
{
    UnitElement const one { 1, 0 };
    UnitElement p = x;
    long k = 1;
    while (!(p == one)) {
        p = unit_multiply(p, x, m, C);
        ++k;
    }
    return k;
}

std::vector<long> prime_factors(long n)
{
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

} // namespace

bool is_unit(UnitElement x, long m, long C)
{
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b)
            if (unit_multiply({ reduce_mod(x.alpha, m), reduce_mod(x.beta, m) }, { a, b }, m, C)
                == UnitElement { 1, 0 })
                return true;
    return false;
}

UnitGroupInfo unit_group(long m, long C)
{
    require_unit_modulus(m);
    UnitGroupInfo info;
    std::vector<UnitElement> const units = units_of(m, C);
    info.order = static_cast<long>(units.size());
    for (auto const & u : units)
        ++info.order_histogram[element_order(u, m, C)];

    /* #{x : x^k = 1} for k = p^j fixes the p-primary part: the number of
     * cyclic factors of order >= p^j is log_p of the ratio of consecutive
     * counts */
    auto count_killed_by = [&](long k) {
        long s = 0;
        for (auto const & [ord, cnt] : info.order_histogram)
            if (k % ord == 0)
                s += cnt;
        return s;
    };
    std::vector<std::vector<long>> parts; /* per prime, descending p-parts */
    for (long p : prime_factors(info.order)) {
        std::vector<long> levels; /* levels[j-1] = #factors with p-part >= p^j */
        long prev = 1;
        for (long pj = p;; pj *= p) {
            long const cnt = count_killed_by(pj);
            long ratio = cnt / prev, r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            if (r == 0)
                break;
            levels.push_back(r);
            prev = cnt;
            if (cnt == info.order)
                break;
        }
        std::vector<long> pp(levels.empty() ? 0 : levels[0], 1);
        for (std::size_t j = 0; j < levels.size(); ++j)
            for (long i = 0; i < levels[j]; ++i)
                pp[i] *= p;
        parts.push_back(std::move(pp));
    }
    std::size_t rank = 0;
    for (auto const & pp : parts)
        rank = std::max(rank, pp.size());
    info.invariant_factors.assign(rank, 1);
    for (auto const & pp : parts)
        for (std::size_t i = 0; i < pp.size(); ++i)
            info.invariant_factors[i] *= pp[i];
    return info;
}

bool verify_generators(long m, long C, std::span<UnitElement const> gens)
{
    require_unit_modulus(m);
    std::vector<UnitElement> g;
    for (auto const & x : gens) {
        UnitElement r { reduce_mod(x.alpha, m), reduce_mod(x.beta, m) };
        if (!is_unit(r, m, C))
            throw std::invalid_argument("not a unit");
        g.push_back(r);
    }
    auto key = [m](UnitElement x) { return x.alpha * m + x.beta; };
    std::set<long> seen = { key({ 1, 0 }) };
    std::vector<UnitElement> frontier = { { 1, 0 } };
    while (!frontier.empty()) {
        std::vector<UnitElement> next;
        for (auto const & x : frontier)
            for (auto const & y : g) {
                UnitElement p = unit_multiply(x, y, m, C);
                if (seen.insert(key(p)).second)
                    next.push_back(p);
            }
        frontier = std::move(next);
    }
    return static_cast<long>(seen.size()) == unit_group(m, C).order;
}

std::vector<UnitElement> paper_generators_mod9()
{
    return { { 4, 7 }, { 5, 0 } };
}

std::vector<UnitElement> paper_generators_mod8(int n_class)
{
    switch (n_class) {
    case 11:
    case 59:
        return { { 0, 1 }, { 7, 0 }, { 7, 4 } };
    case 35:
        return { { 6, 5 }, { 7, 0 }, { 7, 4 } };
    default:
        throw std::invalid_argument("n class mod 72 must be 11, 35 or 59");
    }
}

namespace {

std::string element_label(UnitElement x)
{
    std::string s;
    if (x.beta != 0)
        s = (x.beta == 1 ? std::string() : std::to_string(x.beta)) + "θ";
    if (x.alpha != 0)
        s += (s.empty() ? "" : "+") + std::to_string(x.alpha);
    return s.empty() ? "0" : s;
}

} // namespace

std::vector<GeneratorCheck> invariance_report(int n_class)
{
    auto const gens8 = paper_generators_mod8(n_class);
    long const C = (n_class + 1) / 4;

    FunctionVector f;
    f[2] = CycNum::sqrt3();

    std::vector<GeneratorCheck> out;
    auto check = [&](UnitElement x72, std::string label) {
        Mat2 const A = shift_to_principal_root(
            generator_matrix(x72.alpha, x72.beta, C).reduced(72));
        GroupAction const act = full_action(A);
        out.push_back({ std::move(label), x72, A, act.d, act.apply(f) == f });
    };
    /* each generator is paired with 1 in the other CRT component */
    for (auto const & x : paper_generators_mod9())
        check({ crt_combine(1, x.alpha), crt_combine(0, x.beta) },
              element_label(x) + " (mod 9)");
    for (auto const & x : gens8)
        check({ crt_combine(x.alpha, 1), crt_combine(x.beta, 0) },
              element_label(x) + " (mod 8)");
    return out;
}

bool invariance_check(int n_class)
{
    for (auto const & g : invariance_report(n_class))
        if (!g.fixed)
            return false;
    return true;
}

} // namespace tnclass
