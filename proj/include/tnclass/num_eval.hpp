#ifndef TNCLASS_NUM_EVAL_HPP
#define TNCLASS_NUM_EVAL_HPP

#include <array>

#include "tnclass/bigfloat.hpp"

namespace tnclass {

/* Precision arguments are decimal digits. Every routine works internally with
 * guard_digits extra digits and returns its value at that working precision. */
inline constexpr int guard_digits = 10;
inline constexpr int default_precision = 120;

/* Dedekind eta via the pentagonal series
 *   q^(1/24) sum_k (-1)^k q^(k(3k-1)/2),  q = exp(2 pi i tau).
 * Throws std::domain_error("not in upper half-plane") when Im tau <= 0. */
BigComplex eta(BigComplex const & tau, int prec);

/* the same value from the product q^(1/24) prod (1 - q^n); slower, kept as
 * an independent check of the series */
BigComplex eta_product(BigComplex const & tau, int prec);

/* R, R1, .., R5 (index 0..5), see eta_rep.hpp for the definitions */
BigComplex r_function(int i, BigComplex const & tau, int prec);
std::array<BigComplex, 6> r_functions(BigComplex const & tau, int prec);

/* throws std::invalid_argument("n must be ≡ 11 mod 24") */
void require_ramanujan_n(long n);

/* (-1 + i sqrt(n)) / 2 */
BigComplex principal_root(long n, int prec);

/* t_n = sqrt(3) R2((-1 + i sqrt(n)) / 2) */
BigComplex t_n_value(long n, int prec);

/* j = E4^3 / eta^24, E4 = 1 + 240 sum sigma_3(k) q^k */
BigComplex j_invariant(BigComplex const & tau, int prec);

} // namespace tnclass

#endif /* TNCLASS_NUM_EVAL_HPP */
