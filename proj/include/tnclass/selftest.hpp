#ifndef TNCLASS_SELFTEST_HPP
#define TNCLASS_SELFTEST_HPP

#include <string>
#include <vector>

namespace tnclass {

struct CheckResult
{
    std::string name;
    bool passed;
    std::string detail;
};

/* every element of SL2(Z/8) and `samples9` random elements of SL2(Z/9) are
 * decomposed, evaluated back, and their lifted words checked mod 72 */
CheckResult check_word_reconstruction(int samples9, unsigned seed);

/* eta(t+1) = e^(2 pi i/24) eta(t) and eta(-1/t) = sqrt(-i t) eta(t) */
CheckResult check_eta_functional_equations(int points, int prec, unsigned seed);

/* pentagonal series against the truncated product */
CheckResult check_eta_series_vs_product(int points, int prec, unsigned seed);

/* R(t+1) = rep_T R(t), R(-1/t) = rep_S R(t), and rep_sigma(d) against
 * the eta quotients with the twisted roots of unity put in directly */
CheckResult check_rep_numeric(int points, int prec, unsigned seed);

std::vector<CheckResult> run_selftest(int prec, unsigned seed);

} // namespace tnclass

#endif /* TNCLASS_SELFTEST_HPP */
