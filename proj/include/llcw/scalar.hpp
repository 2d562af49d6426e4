#ifndef LLCW_SCALAR_HPP
#define LLCW_SCALAR_HPP

#include <complex>
#include <optional>
#include <string>

#include "llcw/cyclotomic.hpp"

namespace llcw {

/// Element a + b*sqrt(q) of Q(zeta_M)[y]/(y^2 - q). sqrt(q) is kept symbolic;
/// equality is componentwise, which never identifies sqrt(q) with any
/// cyclotomic square root of q.
class ScalarExt {
  public:
    ScalarExt() = default;
    explicit ScalarExt(ConfigPtr cfg)
        : a_(Cyclo(cfg)), b_(Cyclo(cfg)) {}
    ScalarExt(Cyclo a, Cyclo b) : a_(std::move(a)), b_(std::move(b)) {}

    static ScalarExt from_rational(ConfigPtr cfg, const mpq_class& r);
    static ScalarExt from_cyclo(Cyclo a);
    static ScalarExt sqrt_q(ConfigPtr cfg); // the symbol sqrt(q)
    /// zeta_order^exponent; order must divide M.
    static ScalarExt root_of_unity(ConfigPtr cfg, long order, long exponent);

    const ConfigPtr& config() const { return a_.config(); }
    const Cyclo& a() const { return a_; }
    const Cyclo& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    ScalarExt operator+(const ScalarExt& o) const;
    ScalarExt operator-(const ScalarExt& o) const;
    ScalarExt operator-() const;
    ScalarExt operator*(const ScalarExt& o) const;
    ScalarExt& operator+=(const ScalarExt& o) { *this = *this + o; return *this; }
    ScalarExt& operator*=(const ScalarExt& o) { *this = *this * o; return *this; }
    bool operator==(const ScalarExt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const ScalarExt& o) const { return !(*this == o); }

    ScalarExt conj() const;           // zeta_M -> zeta_M^{-1}, sqrt(q) fixed
    ScalarExt norm2() const;          // z * conj(z)
    ScalarExt inverse() const;        // throws if not invertible in this ring
    ScalarExt pow(long e) const;

    std::complex<double> embed() const; // sqrt(q) -> positive real root; diagnostic

    /// If z equals u * sqrt(q)^s * q^t for a root of unity u of order dividing
    /// max_order, return (u-exponent as k with u = zeta_max^k, s in {0,1}, t).
    /// Uses exact square comparison; the residual sign ambiguity is settled by
    /// the positive-root embedding.
    struct UnitMonomial { long root_exp; long root_order; long sqrt_pow; long q_pow; };
    std::optional<UnitMonomial> as_unit_monomial(long max_order) const;

    /// If z is a root of unity of order dividing max_order (possibly carried on
    /// the sqrt(q) component, as for zeta' = xi*zeta*q^{1/2}/G(phi_2,psi)),
    /// return k with z = zeta_max_order^k under the positive-root embedding.
    /// The candidate is pinned exactly by z*conj(z) == 1 and z^2 == u^2; only
    /// the final two-way sign choice consults the embedding.
    std::optional<long> as_root_of_unity(long max_order) const;

  private:
    Cyclo a_, b_;
};

} // namespace llcw

#endif
