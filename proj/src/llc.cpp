#include "llcw/llc.hpp"

#include <functional>
#include <sstream>

namespace llcw {

namespace {

MultChar legendre(const Context& ctx) {
    return MultChar{&ctx, 1, (ctx.q - 1) / 2};
}

std::string tau_label(const TameCharacter& tau) {
    std::ostringstream os;
    os << "tau(j=" << tau.unit_part.j << ", pi->zeta_" << tau.uv_order << "^"
       << tau.uv_exp << ")";
    return os.str();
}

} // namespace

long ParameterDecomposition::dim_total() const {
    long s = 0;
    for (const auto& c : constituents) s += c.dim();
    return s;
}

long ParameterDecomposition::swan_total() const {
    long s = 0;
    for (const auto& c : constituents) s += c.swan();
    return s;
}

ParameterDecomposition llc(const Context& ctx, const SOOddParams& g) {
    ParameterDecomposition dec{SOFamily::Odd, g.n, {}};
    GLSSCParams lift{2 * g.n, 0, g.a_exp, ctx.rational(g.zeta)};
    dec.constituents.push_back({GLLift{2 * g.n, lift, 1}, ConstituentType::Symplectic});
    return dec;
}

ParameterDecomposition llc(const Context& ctx, const SOEvenParams& g) {
    if (ctx.p == 2) {
        ParameterDecomposition dec{SOFamily::EvenP2, g.n, {}};
        GLSSCParams lift{2 * g.n - 1, 0, g.a_exp, ctx.rational(g.zeta)};
        dec.constituents.push_back(
            {GLLift{2 * g.n - 1, lift, 1}, ConstituentType::Orthogonal});
        dec.constituents.push_back(
            {TameQuadratic{solve_unramified_quadratic(ctx, g.a_exp, g.zeta)},
             ConstituentType::Orthogonal});
        return dec;
    }
    const auto& tw = *ctx.tower;
    TameCharacter phi1 = solve_unramified_quadratic(ctx, g.a_exp, g.zeta);
    TameCharacter phi2 = solve_ramified_quadratic(ctx, g.a_exp, g.zeta, g.kappa);

    // a' = (-1)^n 4 a eps^kappa
    long u = tw.mul(tw.from_int(4), tw.gen_pow(1, g.a_exp));
    if (g.kappa) u = tw.mul(u, ctx.eps);
    if (g.n % 2 != 0) u = tw.neg(u);
    long ap_exp = tw.log(1, u);

    // zeta' = xi zeta q^{1/2} G(phi_2, psi)^{-1}, exact via G conj(G) = q
    ScalarExt G = gauss_sum(ctx, phi2.unit_part, 1);
    ScalarExt zp = ctx.rational(g.xi) * ctx.rational(g.zeta) * ctx.sqrt_q() *
                   G.conj() * ctx.rational(mpq_class(1, ctx.q));

    ParameterDecomposition dec{SOFamily::EvenOddP, g.n, {}};
    GLSSCParams lift{2 * g.n - 2, legendre(ctx).j, ap_exp, zp};
    dec.constituents.push_back(
        {GLLift{2 * g.n - 2, lift, 1}, ConstituentType::Orthogonal});
    dec.constituents.push_back({TameQuadratic{phi1}, ConstituentType::Orthogonal});
    dec.constituents.push_back({TameQuadratic{phi2}, ConstituentType::Orthogonal});
    return dec;
}

namespace {

GammaProductReport run_product_check(const Context& ctx,
                                     const ParameterDecomposition& dec,
                                     const std::function<LaurentRat(const TameCharacter&)>&
                                         so_gamma,
                                     long uv_order_bound) {
    GammaProductReport rep;
    const auto& lift = std::get<GLLift>(dec.constituents[0].rep);
    for (const auto& tau : enumerate_tame(ctx, uv_order_bound)) {
        LaurentRat prod = gamma_gl(ctx, lift.lift, tau).as_rat();
        for (size_t i = 1; i < dec.constituents.size(); ++i) {
            const auto& q = std::get<TameQuadratic>(dec.constituents[i].rep);
            prod = prod * tate_gamma(ctx, q.chi.times(tau));
        }
        ++rep.checked;
        if (so_gamma(tau) != prod) rep.failures.push_back(tau_label(tau));
    }
    return rep;
}

} // namespace

GammaProductReport verify_gamma_product(const Context& ctx, const SOOddParams& g,
                                        long uv_order_bound) {
    auto dec = llc(ctx, g);
    return run_product_check(
        ctx, dec,
        [&](const TameCharacter& tau) { return gamma_so_odd(ctx, g, tau).as_rat(); },
        uv_order_bound);
}

GammaProductReport verify_gamma_product(const Context& ctx, const SOEvenParams& g,
                                        long uv_order_bound) {
    auto dec = llc(ctx, g);
    return run_product_check(
        ctx, dec,
        [&](const TameCharacter& tau) { return gamma_so_even(ctx, g, tau); },
        uv_order_bound);
}

void det_and_type_check(const Context& ctx, const ParameterDecomposition& dec) {
    if (dec.dim_total() != 2 * dec.n)
        throw consistency_error("constituent dimensions do not sum to 2n");
    if (dec.swan_total() != 1) throw consistency_error("total Swan conductor is not 1");

    const auto& lift = std::get<GLLift>(dec.constituents[0].rep);
    if (!is_self_dual(ctx, lift.lift))
        throw consistency_error("wild constituent is not self-dual");

    // tame constituents are quadratic and pairwise distinct
    for (size_t i = 1; i < dec.constituents.size(); ++i) {
        const auto& qi = std::get<TameQuadratic>(dec.constituents[i].rep);
        if (!qi.chi.is_quadratic())
            throw consistency_error("tame constituent is not quadratic");
        for (size_t k = i + 1; k < dec.constituents.size(); ++k) {
            const auto& qk = std::get<TameQuadratic>(dec.constituents[k].rep);
            if (qi.chi.same_as(qk.chi))
                throw consistency_error("tame constituents coincide");
        }
    }

    switch (dec.family) {
        case SOFamily::Odd: {
            if (lift.lift.omega_j % (ctx.q - 1 == 0 ? 1 : ctx.q - 1) != 0)
                throw consistency_error("SO odd lift must have trivial omega");
            if (!(lift.lift.zeta * lift.lift.zeta == ctx.one()))
                throw consistency_error("SO odd lift zeta must be +-1");
            break;
        }
        case SOFamily::EvenP2: {
            // phi_1 = det of the lift: trivial iff zeta = 1
            const auto& q1 = std::get<TameQuadratic>(dec.constituents[1].rep);
            bool zeta_one = lift.lift.zeta == ctx.one();
            if (q1.chi.is_trivial() != zeta_one || !q1.chi.is_unramified())
                throw consistency_error("p=2 tame constituent is not det of the lift");
            break;
        }
        case SOFamily::EvenOddP: {
            const auto& q1 = std::get<TameQuadratic>(dec.constituents[1].rep);
            const auto& q2 = std::get<TameQuadratic>(dec.constituents[2].rep);
            TameCharacter prod = q1.chi.times(q2.chi);
            // omega' of the lift = unit part of phi_1 phi_2 (ramified quadratic)
            long m = ctx.q - 1;
            if (((prod.unit_part.j - lift.lift.omega_j) % m + m) % m != 0)
                throw consistency_error("lift omega differs from phi_1 phi_2 unit part");
            // zeta'^2 = omega'(-1)
            ScalarExt w_m1 = MultChar{&ctx, 1, lift.lift.omega_j}.value(ctx.k_of_int(-1));
            if (!(lift.lift.zeta * lift.lift.zeta == w_m1))
                throw consistency_error("zeta'^2 != omega'(-1)");
            break;
        }
    }
}

LPacketData lpacket_data(const ParameterDecomposition& dec) {
    LPacketData d;
    d.num_constituents = (long)dec.constituents.size();
    switch (dec.family) {
        case SOFamily::Odd: d.s_bar = 1; d.packet_size = 1; break;
        case SOFamily::EvenP2: d.s_bar = 1; d.packet_size = 1; break;
        case SOFamily::EvenOddP: d.s_bar = 2; d.packet_size = 2; break;
    }
    return d;
}

bool appendix_consistency(const Context& ctx, const SOEvenParams& g) {
    if (ctx.p == 2) throw precondition_error("appendix check applies to p != 2 only");
    const auto& tw = *ctx.tower;
    auto dec = llc(ctx, g);
    const auto& lift = std::get<GLLift>(dec.constituents[0].rep);

    MultChar omega0 = legendre(ctx);
    ScalarExt G = gauss_sum(ctx, omega0, 1);
    ScalarExt w_m1 = omega0.value(ctx.k_of_int(-1));
    if (!(G * G == w_m1 * ctx.rational(ctx.q))) return false; // G^2 = omega_0(-1) q

    // eta = q^{-1/2} G(omega_0, psi) omega_0(-1) xi
    ScalarExt eta = ctx.sqrt_q() * ctx.rational(mpq_class(1, ctx.q)) * G * w_m1 *
                    ctx.rational(g.xi);
    if (!(ctx.rational(g.zeta) * eta == lift.lift.zeta)) return false;

    // b = (-1)^n 4 a eps^kappa
    long u = tw.mul(tw.from_int(4), tw.gen_pow(1, g.a_exp));
    if (g.kappa) u = tw.mul(u, ctx.eps);
    if (g.n % 2 != 0) u = tw.neg(u);
    return tw.log(1, u) == lift.lift.a_exp;
}

} // namespace llcw
