#ifndef LLCW_FDC_HPP
#define LLCW_FDC_HPP

#include <vector>

#include <gmpxx.h>

namespace llcw {

enum class FDCFamily { SOOdd, SOEvenP2, SOEvenOddP };

/// Right-hand side of the formal-degree identity, 2^two_exp * q^q_exp:
/// (r, n^2+n) / (r-1, n^2) / (r-2, n^2) per family.
struct FDCRhs {
    long two_exp = 0;
    long q_exp = 0;
    mpz_class value(long q) const;
};
FDCRhs fdc_rhs(FDCFamily family, long n, long r);

struct FDCSolution {
    long r = 0;
    std::vector<long> e; // multiset of L-pole exponents, sorted
    long artin = 0;
};

/// Exact check of 2^{2k} q^{2 sum e + artin} = 2^{2c} q^{2 n_fam} prod (1+q^e)^2,
/// where k = |e|, c and n_fam are the family data of fdc_rhs(family, n, r).
bool fdc_identity_holds(FDCFamily family, long n, long q, long r,
                        const std::vector<long>& e, long artin);

/// All (r, {e_i}, artin) with r <= n, e_i in [1, 2n^2], artin >= 0 satisfying
/// the identity, subject to the structural counts: the number of e's is
/// r - (#character constituents of the family: 0 / 1 / 2), plus optionally one
/// more for the wild constituent. Each 1 + q^{e_i} must divide a power of 2q,
/// i.e. be a power of 2 (q is coprime to 1 + q^{e_i}); other e are infeasible
/// by exact divisibility.
std::vector<FDCSolution> solve_constraints(FDCFamily family, long n, long q);

/// e in [1, bound] with 1 + q^e a power of 2 (the only exponents that survive
/// the coprimality filter).
std::vector<long> admissible_exponents(long q, long bound);

/// Formal degree coefficient pair (rational constant, q-exponent), leaving
/// gamma(0, Ad phi_pr, psi_0) symbolic.
struct FormalDegree {
    mpq_class constant;
    long q_exp = 0;
};
FormalDegree formal_degree(FDCFamily family, long n);

} // namespace llcw

#endif
