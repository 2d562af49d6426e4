#ifndef LLCW_PADIC_HPP
#define LLCW_PADIC_HPP

#include <vector>

#include <gmpxx.h>

#include "llcw/finite_field.hpp"

namespace llcw {

/// Truncated arithmetic in the unramified extension F of Q_p with residue
/// field k = F_q, q = p^f: elements are polynomials over Z/p^{K-low} modulo a
/// monic degree-f lift of the residue field's minimal polynomial, carried with
/// a fixed-point scale p^{low}. K is the absolute working precision (values
/// known mod p^K), Kcmp the default comparison precision, low the most
/// negative valuation representable.
struct PadicRing {
    long p = 0, f = 0;
    long K = 8, Kcmp = 6, low = -6;
    TowerPtr res;              // residue field tower (Dfield = 1)
    std::vector<long> mod;     // monic degree-f lift, coefficients in [0, p)
    std::vector<long> ppow;    // p^0 .. p^{range - low}

    long range() const { return K - low; }

    static PadicRing make(long p, long f, long K = 8, long Kcmp = 6, long low = -6);
};

/// A truncated element u = p^{low} * sum_i c[i] x^i, known mod p^{prec}.
/// Coefficients are kept reduced mod p^{prec - low}.
class PadicNum {
  public:
    PadicNum() = default;

    static PadicNum zero(const PadicRing& R);
    static PadicNum from_int(const PadicRing& R, long v);
    static PadicNum from_rational(const PadicRing& R, const mpq_class& r);
    static PadicNum pi_pow(const PadicRing& R, long v);
    /// lift of a residue field element (tower encoding) times pi^val
    static PadicNum lift_residue(const PadicRing& R, long kelem, long val = 0);
    /// multiplicative (Teichmuller) lift times pi^val: satisfies x^q = x, so
    /// lifts of inverse residues are exact inverses
    static PadicNum teichmuller(const PadicRing& R, long kelem, long val = 0);
    /// digits[i][t] in [0, p): coefficient i gets digit t at p-power t
    static PadicNum from_digits(const PadicRing& R,
                                const std::vector<std::vector<long>>& digits);

    const PadicRing& ring() const { return *R_; }
    long prec() const { return prec_; }

    PadicNum add(const PadicNum& o) const;
    PadicNum sub(const PadicNum& o) const;
    PadicNum neg() const;
    PadicNum mul(const PadicNum& o) const;
    PadicNum inv() const;

    /// largest b with "valuation >= b" certified; equals prec when the element
    /// is indistinguishable from zero at the current precision
    long valuation_lb() const;
    /// exact valuation; throws precision_error when indistinguishable from 0
    long valuation() const;
    /// decides val >= b; throws precision_error when undecidable
    bool val_at_least(long b) const;
    bool is_unit() const { return valuation() == 0; }

    /// residue of x * pi^{-s} in k (tower encoding); requires val >= s
    long residue_at(long s = 0) const;

    /// congruence mod p^{Kp}; throws precision_error if either side is known
    /// to less than Kp digits
    bool congruent(const PadicNum& o, long Kp) const;

  private:
    const PadicRing* R_ = nullptr;
    std::vector<long> c_;
    long prec_ = 0;
    void reduce();
    friend PadicNum raw(const PadicRing&, std::vector<long>, long);
};

struct PadicMatrix {
    const PadicRing* R = nullptr;
    long N = 0;
    std::vector<PadicNum> e;

    static PadicMatrix zeros(const PadicRing& R, long N);
    static PadicMatrix identity(const PadicRing& R, long N);

    PadicNum& at(long i, long j) { return e[i * N + j]; }
    const PadicNum& at(long i, long j) const { return e[i * N + j]; }

    PadicMatrix mul(const PadicMatrix& o) const;
    PadicMatrix transpose() const;
    bool congruent(const PadicMatrix& o, long Kp) const;
};

} // namespace llcw

#endif
