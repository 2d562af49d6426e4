#ifndef LLCW_CYCLOTOMIC_HPP
#define LLCW_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "llcw/errors.hpp"

namespace llcw {

/// Shared arithmetic context: the field Q(zeta_M) realized as Q[x]/(Phi_M).
///
/// M is the least common multiple of p, q^d - 1 for d <= D, and 8, so the
/// values of the additive character, of all multiplicative characters of the
/// residue fields up to degree D, and of +-1, +-i all live here.
class CycloConfig {
  public:
    static std::shared_ptr<const CycloConfig> make(long p, long f, long D = 2);

    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }
    long D() const { return D_; }
    long M() const { return M_; }
    long deg() const { return deg_; } // = phi(M)

    /// x^e mod Phi_M as an integer coefficient vector of length deg().
    const std::vector<mpz_class>& monomial(long e) const;

  private:
    CycloConfig() = default;
    long p_ = 0, f_ = 0, q_ = 0, D_ = 0, M_ = 0, deg_ = 0;
    std::vector<mpz_class> phi_;                   // Phi_M, monic
    std::vector<std::vector<mpz_class>> pow_red_;  // x^e mod Phi_M, e in [0, M)
};

using ConfigPtr = std::shared_ptr<const CycloConfig>;

/// Element of Q(zeta_M): rational coefficient vector in the power basis
/// 1, zeta, ..., zeta^{deg-1}. Equality is exact coefficient comparison.
class Cyclo {
  public:
    Cyclo() = default;
    explicit Cyclo(ConfigPtr cfg); // zero
    Cyclo(ConfigPtr cfg, const mpq_class& rational);

    static Cyclo zeta_pow(ConfigPtr cfg, long e); // zeta_M^e, any integer e

    const ConfigPtr& config() const { return cfg_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational(mpq_class* out = nullptr) const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo conj() const;      // zeta_M -> zeta_M^{-1}
    Cyclo inverse() const;   // extended Euclid against Phi_M; throws on zero

    std::complex<double> embed() const; // zeta_M -> exp(2*pi*i/M)

  private:
    ConfigPtr cfg_;
    std::vector<mpq_class> c_;
    void check_same(const Cyclo& o) const;
};

// number-theory helpers shared across modules
long power_long(long b, long e);
long mobius(long n);
std::vector<long> divisors(long n);
long euler_phi(long n);
long mod_pow(long b, long e, long m);

} // namespace llcw

#endif
