#ifndef LLCW_FINITE_FIELD_HPP
#define LLCW_FINITE_FIELD_HPP

#include <memory>
#include <vector>

#include "llcw/errors.hpp"

namespace llcw {

/// The residue fields F_{q^e} for e | Dfield, all realized inside one table-
/// driven field F_{p^{f*Dfield}}. Elements are ints encoding base-p digit
/// vectors of polynomial coefficients; 0 encodes zero.
///
/// Generators are compatible across levels: gen(e) = g^{(Q-1)/(q^e-1)} for the
/// top generator g, which agrees with the norm convention
/// gen_e = Nm_{d/e}(gen_d).
class ResidueTower {
  public:
    static std::shared_ptr<const ResidueTower> make(long p, long f, long Dfield);

    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }
    long Dfield() const { return D_; }
    long card() const { return Q_; } // p^{f*Dfield}
    const std::vector<long>& modulus() const { return modulus_; }

    long zero() const { return 0; }
    long one() const { return 1; }

    long add(long x, long y) const;
    long neg(long x) const;
    long sub(long x, long y) const { return add(x, neg(y)); }
    long mul(long x, long y) const;
    long inv(long x) const;
    long pow(long x, long e) const;

    /// canonical image of an integer (its residue mod p)
    long from_int(long c) const;

    /// generator of F_{q^e}^x
    long gen(long e) const;
    /// discrete log of x base gen(e); requires x a nonzero element of F_{q^e}
    long log(long e, long x) const;
    /// gen(e)^t
    long gen_pow(long e, long t) const;
    /// does x lie in the subfield F_{q^e}?
    bool in_subfield(long e, long x) const;
    /// all elements of F_{q^e}
    std::vector<long> subfield_elements(long e) const;

    long frobenius_q(long x) const { return pow(x, q_); }
    /// trace / norm from F_{q^d} down to F_{q^e}, e | d
    long trace(long d, long e, long x) const;
    long norm(long d, long e, long x) const;
    /// absolute trace to F_p, returned as an integer in [0, p)
    long trace_to_prime(long x) const;

  private:
    ResidueTower() = default;
    long p_ = 0, f_ = 0, q_ = 0, D_ = 0, m_ = 0, Q_ = 0;
    std::vector<long> modulus_;  // irreducible degree-m polynomial over F_p
    std::vector<long> exp_;      // exp_[i] = g^i, i in [0, Q-1)
    std::vector<long> log_;      // log_[x] for x != 0
    long mul_raw(long x, long y) const;
};

using TowerPtr = std::shared_ptr<const ResidueTower>;

} // namespace llcw

#endif
