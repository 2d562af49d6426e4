#include "llcw/local_factors.hpp"

namespace llcw {

ScalarExt gauss_sum(const Context& ctx, const MultChar& eta, long d) {
    AdditiveChar psi{&ctx, d};
    ScalarExt sum(ctx.cfg);
    long m = power_long(ctx.q, d) - 1;
    for (long t = 0; t < m; ++t) {
        long x = ctx.tower->gen_pow(d, t);
        ScalarExt ev = eta.is_trivial() ? ctx.one() : eta.value(x);
        sum += ev * psi.value(x);
    }
    return sum;
}

LaurentRat tate_gamma(const Context& ctx, const TameCharacter& eta) {
    if (eta.d() != 1) throw precondition_error("tate_gamma expects a character of F^x");
    ScalarExt inv_sqrt_q = ctx.sqrt_q() * ctx.rational(mpq_class(1, ctx.q)); // q^{-1/2}
    if (eta.is_unramified()) {
        ScalarExt u = eta.value_at_pi();
        ScalarExt uinv = u.inverse();
        // q^{s-1/2} = q^{-1/2} X^{-1}
        LaurentPoly num = LaurentPoly::monomial(inv_sqrt_q * uinv, -1);
        LaurentPoly one_minus(ctx.cfg);
        one_minus.add_term(0, ctx.one());
        one_minus.add_term(1, -u);
        num = num * one_minus;
        LaurentPoly den(ctx.cfg);
        den.add_term(0, ctx.one());
        den.add_term(-1, -(uinv * ctx.rational(mpq_class(1, ctx.q))));
        return LaurentRat(num, den);
    }
    ScalarExt g = gauss_sum(ctx, eta.unit_part.inverse_char(), 1);
    ScalarExt uv = eta.value_at_pi(); // ramified tame: value at pi times the unit sum
    // gamma = epsilon = q^{-1/2} G(eta^{-1}, psi); the uniformizer value of
    // eta^{-1} enters with exponent n(psi)+... = 0 for level-1 psi, so only
    // the residue Gauss sum appears
    (void)uv;
    return LaurentRat::constant(inv_sqrt_q * g);
}

LaurentRat tate_L(const Context& ctx, const TameCharacter& eta, long e) {
    if (!eta.is_unramified()) return LaurentRat::one(ctx.cfg);
    LaurentPoly den(ctx.cfg);
    den.add_term(0, ctx.one());
    den.add_term(e, -eta.value_at_pi());
    LaurentPoly num = LaurentPoly::constant(ctx.one());
    return LaurentRat(num, den);
}

LaurentRat ls_coefficient_C(const Context& ctx, const TameCharacter& tau,
                            long gamma_unit, long gamma_val) {
    TameCharacter tau2 = tau.square();
    LaurentRat g = tate_gamma(ctx, tau2).substitute(ctx.rational(ctx.q), 2);
    ScalarExt tg = tau.value(gamma_unit, gamma_val);
    // |gamma|^{s-1} = q^{-val(s-1)} = q^{val} X^{val}
    mpq_class qv(1);
    for (long i = 0; i < std::abs(gamma_val); ++i) qv *= ctx.q;
    ScalarExt coeff = gamma_val >= 0 ? ctx.rational(qv) : ctx.rational(mpq_class(1) / qv);
    return g * LaurentRat::monomial(tg * coeff, gamma_val);
}

EpsAbsReport eps_abs_exponent(const Context& ctx, const LaurentRat& gamma, long swan,
                              bool L_trivial) {
    if (!L_trivial)
        throw precondition_error("|epsilon| law applies only with trivial L-factors");
    MonomialForm m = MonomialForm::of(gamma); // throws on non-monomial shape
    EpsAbsReport rep;
    rep.swan = swan;
    rep.xpow = m.xpow;
    mpq_class qs(1);
    for (long i = 0; i < std::abs(swan); ++i) qs *= ctx.q;
    ScalarExt target = swan >= 0 ? ctx.rational(qs) : ctx.rational(mpq_class(1) / qs);
    rep.ok = (m.xpow == swan) && (m.coeff.norm2() == target);
    return rep;
}

} // namespace llcw
