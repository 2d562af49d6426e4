#ifndef LLCW_IWAHORI_HPP
#define LLCW_IWAHORI_HPP

#include <random>

#include "llcw/characters.hpp"
#include "llcw/padic.hpp"

namespace llcw {

/// GLN: GL_N (n = N); SOOdd: SO_{2n+1} for the alternating antidiagonal form;
/// SOOddBT: SO_{2n+1} for the Bruhat-Tits form (antidiagonal ones, middle 2);
/// SOEven: SO_{2n} for the antidiagonal form of ones.
enum class GroupFamily { GLN, SOOdd, SOOddBT, SOEven };

enum class FiltLevel { I, IPlus, IPlusPlus };

long matrix_size(GroupFamily fam, long n);

/// Minimum valuation required of the (i, j) off-diagonal entry (0-indexed).
/// The SOOdd table carries the 2p and (1/2)O entries, the SOOddBT table the
/// 2O and 2p entries; both collapse to the odd-p bounds when p != 2.
long shape_bound(GroupFamily fam, long n, long p, long i, long j, FiltLevel level);

/// Gram matrix of the family's bilinear form (GLN has none).
PadicMatrix form_matrix(const PadicRing& R, GroupFamily fam, long n);

/// t(g) J g == J mod p^{Kp}
bool orthogonality_holds(const PadicMatrix& g, const PadicMatrix& J, long Kp);

/// Entry-wise shape membership. Diagonal entries: units for level I (residue
/// nonzero; for the middle two SOEven diagonals only integrality), congruent
/// to 1 mod p for I+ and I++. Throws precision_error when a bound cannot be
/// decided at the tracked precision.
bool membership(const PadicMatrix& g, GroupFamily fam, long n, FiltLevel level);

/// The displayed residue tuple: k^N for GL_N, k^{n+1} for the SO families.
/// Requires g in I+ (precondition_error otherwise). Entries are residue
/// tower encodings of the ring's residue field.
std::vector<long> affine_quotient(const PadicMatrix& g, GroupFamily fam, long n);

struct AffineCharParams {
    long a_exp = 0; // a = gen^{a_exp} in k^x
    long kappa = 0; // SOEven only: weight eps^kappa on the n-th coordinate
};

/// psi applied to the weighted sum of affine quotient coordinates.
ScalarExt affine_generic_char(const Context& ctx, const PadicMatrix& g,
                              GroupFamily fam, long n, const AffineCharParams& pr);

/// Conjugation change of basis between the two odd orthogonal realizations:
/// X = diag((-1)^n 2, ..., -2, 1, ..., 1), g -> X g X^{-1}.
PadicMatrix basis_change(const PadicRing& R, long n);
PadicMatrix conjugate_to_bt(const PadicMatrix& g, long n);
PadicMatrix conjugate_from_bt(const PadicMatrix& h, long n);

/// Named elements (0-indexed matrix entries, k-element parameters by
/// generator exponent or tower encoding).
PadicMatrix phi_gl(const PadicRing& R, long N, long a_exp);
PadicMatrix phi_so_odd(const PadicRing& R, long n, long a_exp);
PadicMatrix phi_so_even(const PadicRing& R, long n, long alpha_k, long beta_k);
/// stabilizer generator of the SO_{2n} affine generic character with
/// parameters (kappa, a): phi_{eps^kappa, -a^{-1}}
PadicMatrix g_chi_so_even(const PadicRing& R, long n, long kappa, long a_exp);

/// Exact symbolic scalars c * a^{ea} * alpha^{eal} * beta^{ebe} * pi^{epi};
/// addition is defined only when monomials are compatible, which suffices for
/// the named elements whose entries are monomials.
struct SymMono {
    mpq_class c = 0;
    long ea = 0, eal = 0, ebe = 0, epi = 0;
    bool is_zero() const { return c == 0; }
    SymMono mul(const SymMono& o) const;
    SymMono add(const SymMono& o) const;
    bool operator==(const SymMono& o) const;
};

struct SymMatrix {
    long N = 0;
    std::vector<SymMono> m;
    static SymMatrix identity(long N);
    SymMono& at(long i, long j) { return m[i * N + j]; }
    const SymMono& at(long i, long j) const { return m[i * N + j]; }
    SymMatrix mul(const SymMatrix& o) const;
    bool operator==(const SymMatrix& o) const;
};

SymMatrix sym_phi_gl(long N);
SymMatrix sym_phi_so_odd(long n);
SymMatrix sym_phi_so_even(long n);

struct ElementOrderReport {
    bool gl_ok = false;      // phi^N = pi a^{-1} I_N for all N <= bound
    bool so_odd_ok = false;  // phi^2 = I_{2n+1} for all n <= bound
    bool so_even_ok = false; // phi^2 = I_{2n} for all 2 <= n <= bound
};

ElementOrderReport element_orders(long bound);

/// Random elements of I or I+ as products of a torus element and root-group
/// factors meeting the shape bounds (Eichler transformations for the SO
/// families, elementary matrices for GL).
class IwahoriSampler {
  public:
    IwahoriSampler(const PadicRing& R, GroupFamily fam, long n, unsigned long seed);
    PadicMatrix sample(FiltLevel level = FiltLevel::IPlus);
    /// single Eichler factor E_{i,j}(c) for the family's form (SO only)
    PadicMatrix eichler(long i, long j, const PadicNum& c) const;
    PadicNum random_val_ge(long b);

  private:
    const PadicRing* R_;
    GroupFamily fam_;
    long n_, N_;
    std::mt19937_64 rng_;
    PadicNum random_unit(bool pro_p);
    PadicMatrix torus(bool pro_p);
};

} // namespace llcw

#endif
