#include "llcw/rs_gamma.hpp"

namespace llcw {

namespace {

void require_tame_of_F(const TameCharacter& tau) {
    if (tau.d() != 1) throw precondition_error("twist must be a character of F^x");
}

// tau(u * pi) for a unit u in tower encoding
ScalarExt tau_at(const TameCharacter& tau, long u, long v) { return tau.value(u, v); }

ScalarExt tau_at_minus1(const Context& ctx, const TameCharacter& tau) {
    return tau.value(ctx.k_of_int(-1), 0);
}

} // namespace

std::vector<TameCharacter> enumerate_tame(const Context& ctx, long uv_order_bound) {
    std::vector<TameCharacter> v;
    for (long j = 0; j < std::max(ctx.q - 1, 1L); ++j)
        for (long e = 0; e < uv_order_bound; ++e)
            v.push_back(TameCharacter::make(ctx, 1, j, uv_order_bound, e));
    return v;
}

MonomialForm gamma_gl(const Context& ctx, const GLSSCParams& g, const TameCharacter& tau) {
    require_tame_of_F(tau);
    if (!is_self_dual(ctx, g))
        throw precondition_error("gamma_gl requires a self-dual parameter");
    const auto& tw = *ctx.tower;
    long a_inv = tw.inv(tw.gen_pow(1, g.a_exp));
    ScalarExt sign = (g.N % 2 == 0) ? tau_at_minus1(ctx, tau) : ctx.one();
    return MonomialForm{sign * tau_at(tau, a_inv, 1) * g.zeta * ctx.sqrt_q(), 1};
}

MonomialForm gamma_so_odd(const Context& ctx, const SOOddParams& g,
                          const TameCharacter& tau) {
    require_tame_of_F(tau);
    const auto& tw = *ctx.tower;
    long u = tw.neg(tw.inv(tw.gen_pow(1, g.a_exp)));
    return MonomialForm{ctx.rational(g.zeta) * tau_at(tau, u, 1) * ctx.sqrt_q(), 1};
}

LaurentRat gamma_so_even(const Context& ctx, const SOEvenParams& g,
                         const TameCharacter& tau) {
    require_tame_of_F(tau);
    const auto& tw = *ctx.tower;
    long a_inv = tw.inv(tw.gen_pow(1, g.a_exp));
    if (ctx.p == 2) {
        TameCharacter phi_r = solve_unramified_quadratic(ctx, g.a_exp, g.zeta);
        ScalarExt c = ctx.rational(g.zeta) * tau_at(tau, a_inv, 1) * ctx.sqrt_q();
        return LaurentRat::monomial(c, 1) * tate_gamma(ctx, phi_r.times(tau));
    }
    TameCharacter phi_rm1 = solve_unramified_quadratic(ctx, g.a_exp, g.zeta);
    TameCharacter phi_r = solve_ramified_quadratic(ctx, g.a_exp, g.zeta, g.kappa);
    long alpha = g.kappa ? ctx.eps : tw.one();
    long u = tw.mul(tw.from_int(4), tw.mul(alpha, tw.gen_pow(1, g.a_exp)));
    u = tw.inv(u);
    if ((g.n + 1) % 2 != 0) u = tw.neg(u);
    ScalarExt c = ctx.rational(g.xi) * ctx.rational(g.zeta) * tau_at(tau, u, 1) *
                  ctx.rational(ctx.q) * gauss_sum(ctx, phi_r.unit_part, 1).inverse();
    return LaurentRat::monomial(c, 1) * tate_gamma(ctx, phi_rm1.times(tau)) *
           tate_gamma(ctx, phi_r.times(tau));
}

LaurentRat gamma_ak_raw(const Context& ctx, const SOEvenParams& g,
                        const TameCharacter& tau) {
    require_tame_of_F(tau);
    const auto& tw = *ctx.tower;
    long a_inv = tw.inv(tw.gen_pow(1, g.a_exp)); // pi' = a^{-1} pi
    long alpha = g.kappa ? ctx.eps : tw.one();

    ScalarExt tau_pip = tau_at(tau, a_inv, 1);
    ScalarExt tau2_pip = tau_pip * tau_pip;
    bool A_tau = tau.square().is_unramified();

    LaurentRat sum = LaurentRat::monomial(
        ctx.rational(g.zeta) * tau_at(tau, tw.neg(alpha), 0).inverse() * tau_pip *
            ctx.sqrt_q(),
        1);
    if (A_tau) {
        LaurentPoly num = LaurentPoly::monomial(
            ctx.rational(ctx.q - 1) * tau2_pip * ctx.sqrt_q(), 2);
        LaurentPoly den = LaurentPoly::constant(ctx.one());
        den.add_term(2, -(tau2_pip * ctx.rational(ctx.q)));
        sum = sum + LaurentRat(num, den);
    }
    ScalarExt pre = ctx.rational(g.xi);
    if (g.n % 2 != 0) pre = pre * tau_at_minus1(ctx, tau);
    LaurentRat gamma2s =
        tate_gamma(ctx, tau.square()).substitute(ctx.rational(ctx.q), 2);
    return gamma2s * sum * pre;
}

MonomialForm gamma_lift_quotient(const Context& ctx, const SOEvenParams& g,
                                 const TameCharacter& tau) {
    require_tame_of_F(tau);
    const auto& tw = *ctx.tower;
    TameCharacter tau1 = solve_unramified_quadratic(ctx, g.a_exp, g.zeta);

    LaurentRat quotient = gamma_ak_raw(ctx, g, tau) / tate_gamma(ctx, tau1.times(tau));

    ScalarExt coeff(ctx.cfg);
    if (ctx.p == 2) {
        long a_inv = tw.inv(tw.gen_pow(1, g.a_exp));
        coeff = tau_at(tau, a_inv, 1) * ctx.rational(g.zeta) * ctx.sqrt_q();
    } else {
        TameCharacter tau2 = solve_ramified_quadratic(ctx, g.a_exp, g.zeta, g.kappa);
        quotient = quotient / tate_gamma(ctx, tau2.times(tau));
        long alpha = g.kappa ? ctx.eps : tw.one();
        long u = tw.inv(tw.mul(alpha, tw.gen_pow(1, g.a_exp)));
        if ((g.n + 1) % 2 != 0) u = tw.neg(u);
        ScalarExt eps_tau2 = ctx.sqrt_q() * ctx.rational(mpq_class(1, ctx.q)) *
                             gauss_sum(ctx, tau2.unit_part.inverse_char(), 1);
        coeff = ctx.rational(g.xi) * tau_at(tau, u, 1) * ctx.rational(g.zeta) *
                tau_at(tau, tw.from_int(4), 0).inverse() *
                tau2.unit_part.value(tw.from_int(-1)) * eps_tau2 * ctx.sqrt_q();
    }
    MonomialForm closed{coeff, 1};
    if (quotient != closed.as_rat())
        throw consistency_error("lift quotient does not match the closed form");
    return closed;
}

} // namespace llcw
