#ifndef TNCLASS_ETA_REP_HPP
#define TNCLASS_ETA_REP_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tnclass/cyclo.hpp"
#include "tnclass/sl2.hpp"

namespace tnclass {

/*
 * The six level-72 eta quotients, indexed in this order:
 *   R  = eta(3t) eta(t/3)       / eta(t)^2
 *   R1 = eta(3t) eta(t/3 + 1/3) / eta(t)^2
 *   R2 = eta(3t) eta(t/3 + 2/3) / eta(t)^2
 *   R3 = eta(t/3) eta(t/3 + 2/3) / eta(t)^2
 *   R4 = eta(t/3) eta(t/3 + 1/3) / eta(t)^2
 *   R5 = eta(t/3 + 2/3) eta(t/3 + 1/3) / eta(t)^2
 */
inline constexpr int rep_dim = 6;

/* coefficients (a_0..a_5) of a_0 R + a_1 R1 + ... + a_5 R5 */
using FunctionVector = std::array<CycNum, rep_dim>;

FunctionVector basis_vector(int i);

class RepMatrix
{
    std::array<std::array<CycNum, rep_dim>, rep_dim> m;

    public:

    RepMatrix() = default;
    static RepMatrix identity();

    CycNum const & operator()(int i, int j) const { return m[i][j]; }
    CycNum & operator()(int i, int j) { return m[i][j]; }

    friend RepMatrix operator*(RepMatrix const & x, RepMatrix const & y);
    friend FunctionVector operator*(RepMatrix const & x, FunctionVector const & v);
    friend bool operator==(RepMatrix const &, RepMatrix const &) = default;

    RepMatrix transpose() const;
    /* sigma_d applied entry by entry */
    RepMatrix galois(long d) const;
    /* exactly one nonzero entry in every row and every column */
    bool is_monomial() const;
    /* inverse of a monomial matrix; throws std::domain_error otherwise */
    RepMatrix monomial_inverse() const;
    RepMatrix pow(long e) const;

    std::string to_string() const;
};

FunctionVector galois(FunctionVector const & v, long d);

/* (R(t+1), .., R5(t+1)) = rep_T() (R(t), .., R5(t)) */
RepMatrix const & rep_T();
/* (R(-1/t), .., R5(-1/t)) = rep_S() (R(t), .., R5(t)) */
RepMatrix const & rep_S();
/* sigma_d(R_i) = sum_j rep_sigma(d)(i, j) R_j, with sigma_d acting on the
 * q-expansion coefficients; throws std::invalid_argument for gcd(d,72) > 1 */
RepMatrix rep_sigma(long d);

/* M with (R o w) = M R, i.e. the product of rep_S / rep_T^e along the word */
RepMatrix word_action(STWord const & w);

/*
 * Action of A in GL2(Z/72) on span{R..R5}. With A = B diag(1, d),
 * f^A = sigma_d(f o B~) for a lift B~ of B built from the lifted words of
 * B mod 8 and B mod 9. On coefficient vectors this is
 *     v -> matrix * sigma_d(v),   matrix = rep_sigma(d)^T sigma_d(M_B^T).
 */
struct GroupAction
{
    RepMatrix matrix;
    long d;
    STWord word;

    FunctionVector apply(FunctionVector const & v) const;
};

GroupAction full_action(Mat2 const & A);

/* alpha + beta theta in O/mO, theta^2 = theta - C */
struct UnitElement
{
    long alpha, beta;
    friend bool operator==(UnitElement const &, UnitElement const &) = default;
};

UnitElement unit_multiply(UnitElement x, UnitElement y, long m, long C);
bool is_unit(UnitElement x, long m, long C);

struct UnitGroupInfo
{
    long order;
    /* descending, each divides the previous one */
    std::vector<long> invariant_factors;
    /* element order -> number of elements of that order */
    std::map<long, long> order_histogram;
};

/* brute force structure of (O/mO)*, m in {8, 9} */
UnitGroupInfo unit_group(long m, long C);

/* true iff gens generate (O/mO)*; throws std::invalid_argument("not a unit") */
bool verify_generators(long m, long C, std::span<UnitElement const> gens);

/* generator table: 7 theta + 4, 5 mod 9; per class of n mod 72 mod 8 */
std::vector<UnitElement> paper_generators_mod9();
std::vector<UnitElement> paper_generators_mod8(int n_class);

struct GeneratorCheck
{
    std::string label;   /* e.g. "7θ+4 (mod 9)" */
    UnitElement element; /* CRT lift mod 72 */
    Mat2 matrix;         /* A_i mod 72, written at the principal root */
    long d;
    bool fixed;
};

/* apply the five generators of (O/72O)* to sqrt3 * R2, exactly */
std::vector<GeneratorCheck> invariance_report(int n_class);
bool invariance_check(int n_class);

} // namespace tnclass

#endif /* TNCLASS_ETA_REP_HPP */
