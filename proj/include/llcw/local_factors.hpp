#ifndef LLCW_LOCAL_FACTORS_HPP
#define LLCW_LOCAL_FACTORS_HPP

#include "llcw/characters.hpp"
#include "llcw/laurent.hpp"

namespace llcw {

/// G(eta, psi) = sum over F_{q^d}^x of eta(x) psi(x), exact.
ScalarExt gauss_sum(const Context& ctx, const MultChar& eta, long d);

/// Tate gamma factor of a tame character of F^x against the canonical level-1
/// psi. Unramified: q^{s-1/2} eta^{-1}(pi) (1 - eta(pi) q^{-s}) /
/// (1 - eta(pi)^{-1} q^{s-1}). Ramified tame: the constant
/// q^{-1/2} G(eta^{-1}, psi).
LaurentRat tate_gamma(const Context& ctx, const TameCharacter& eta);

/// L(s, eta) for a tame character of E^x, E/F unramified of degree e:
/// (1 - eta(pi) X^e)^{-1} if unramified, else 1.
LaurentRat tate_L(const Context& ctx, const TameCharacter& eta, long e = 1);

/// Langlands-Shahidi coefficient C(s, tau, psi) =
/// tau(gamma) |gamma|^{s-1} gamma(2s-1, tau^2, psi), gamma = unit * pi^val.
LaurentRat ls_coefficient_C(const Context& ctx, const TameCharacter& tau,
                            long gamma_unit, long gamma_val);

/// |epsilon| law check for a constituent with trivial L-factors:
/// gamma must be a monomial c X^k with k = swan and norm2(c) = q^swan.
struct EpsAbsReport {
    long swan = 0;
    long xpow = 0;
    bool ok = false;
};
EpsAbsReport eps_abs_exponent(const Context& ctx, const LaurentRat& gamma, long swan,
                              bool L_trivial);

} // namespace llcw

#endif
