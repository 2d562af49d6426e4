#ifndef LLCW_RS_GAMMA_HPP
#define LLCW_RS_GAMMA_HPP

#include "llcw/local_factors.hpp"
#include "llcw/ssc.hpp"

namespace llcw {

/// gamma(s, pi^{GL_N}_{omega,a,zeta} x tau, psi) =
/// tau(-1)^{N-1} tau(pi a^{-1}) zeta q^{1/2} X for self-dual parameters.
MonomialForm gamma_gl(const Context& ctx, const GLSSCParams& g, const TameCharacter& tau);

/// gamma(s, pi^{SO_{2n+1}}_{a,zeta} x tau, psi) = zeta tau(-a^{-1} pi) q^{1/2} X.
MonomialForm gamma_so_odd(const Context& ctx, const SOOddParams& g,
                          const TameCharacter& tau);

/// gamma(s, pi^{SO_{2n}}_{xi,kappa,a,zeta} x tau, psi):
/// p = 2: zeta tau(a^{-1} pi) q^{1/2} X gamma(s, phi_r tau, psi);
/// p != 2: xi zeta tau((-1)^{n+1} pi / 4 eps^kappa a) q X G(phi_r, psi)^{-1}
///         gamma(s, phi_{r-1} tau, psi) gamma(s, phi_r tau, psi).
LaurentRat gamma_so_even(const Context& ctx, const SOEvenParams& g,
                         const TameCharacter& tau);

/// The raw intertwining-operator formula with pi' = a^{-1} pi, alpha = eps^kappa:
/// xi tau(-1)^n gamma(2s-1, tau^2, psi) *
/// ((q-1) tau^2(pi') q^{1/2} X^2 / (1 - tau^2(pi') q X^2) * A_tau
///   + zeta tau^{-1}(-alpha) tau(pi') q^{1/2} X),
/// where A_tau = 1 iff tau^2 is unramified.
LaurentRat gamma_ak_raw(const Context& ctx, const SOEvenParams& g,
                        const TameCharacter& tau);

/// gamma_ak_raw divided by the Tate gammas of the quadratic constituents,
/// asserted equal to the closed form
/// xi tau((-1)^{n+1} alpha^{-1} pi') zeta [tau^{-1}(4) tau_2(-1)
/// q^{-1/2} G(tau_2^{-1}, psi)] q^{1/2} X (the bracket only when p != 2).
MonomialForm gamma_lift_quotient(const Context& ctx, const SOEvenParams& g,
                                 const TameCharacter& tau);

/// All tame characters of F^x with value at pi an 8th root of unity.
std::vector<TameCharacter> enumerate_tame(const Context& ctx, long uv_order_bound = 8);

} // namespace llcw

#endif
