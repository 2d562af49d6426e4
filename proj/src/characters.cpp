#include "llcw/characters.hpp"

#include <numeric>

namespace llcw {

Context Context::make(long p, long f, long D, long Dfield) {
    Context ctx;
    ctx.cfg = CycloConfig::make(p, f, D);
    ctx.tower = ResidueTower::make(p, f, Dfield);
    ctx.p = p;
    ctx.f = f;
    ctx.q = ctx.cfg->q();
    if (p == 2) {
        ctx.eps = ctx.tower->one(); // paper convention: eps := 1 when p = 2
    } else {
        // smallest power of gen that is a non-square: gen itself
        ctx.eps = ctx.tower->gen(1);
    }
    return ctx;
}

ScalarExt AdditiveChar::value(long x) const {
    // trace from F_{q^d} (not from the ambient tower field) down to F_p
    const auto& tw = *ctx->tower;
    long r = 0, cur = x;
    for (long i = 0; i < ctx->f * d; ++i) {
        r = tw.add(r, cur);
        cur = tw.pow(cur, ctx->p);
    }
    if (r >= ctx->p) throw consistency_error("trace left the prime field");
    return ctx->root(ctx->p, r);
}

long MultChar::order() const {
    long m = modulus();
    long jj = ((j % m) + m) % m;
    return m / std::gcd(jj == 0 ? m : jj, m);
}

MultChar MultChar::times(const MultChar& o) const {
    if (d != o.d) throw precondition_error("character level mismatch");
    return MultChar{ctx, d, (j + o.j) % modulus()};
}

MultChar MultChar::inverse_char() const {
    long m = modulus();
    return MultChar{ctx, d, ((m - j % m) % m + m) % m};
}

ScalarExt MultChar::value(long x) const {
    long m = modulus();
    long t = ctx->tower->log(d, x);
    return ctx->root(m, j % m * (t % m) % m);
}

MultChar MultChar::restrict_to(long e) const {
    if (d % e != 0) throw precondition_error("restriction requires e | d");
    // gen_e = gen_d^{(q^d-1)/(q^e-1)}, so chi_j(gen_e^t) = zeta_{q^e-1}^{jt}
    long me = power_long(ctx->q, e) - 1;
    return MultChar{ctx, e, ((j % me) + me) % me};
}

ScalarExt TameCharacter::value_at_pi() const {
    return unit_part.ctx->root(uv_order, uv_exp);
}

ScalarExt TameCharacter::value(long u, long v) const {
    ScalarExt r = unit_part.is_trivial() ? unit_part.ctx->one() : unit_part.value(u);
    if (v != 0) r = r * value_at_pi().pow(v);
    return r;
}

bool TameCharacter::is_trivial() const {
    return unit_part.is_trivial() && uv_exp % uv_order == 0;
}

bool TameCharacter::is_quadratic() const {
    long m = unit_part.modulus();
    return (2 * unit_part.j) % m == 0 && (2 * uv_exp) % uv_order == 0;
}

TameCharacter TameCharacter::times(const TameCharacter& o) const {
    long order = std::lcm(uv_order, o.uv_order);
    long e = uv_exp * (order / uv_order) + o.uv_exp * (order / o.uv_order);
    return TameCharacter{unit_part.times(o.unit_part), order, ((e % order) + order) % order};
}

TameCharacter TameCharacter::inverse_char() const {
    return TameCharacter{unit_part.inverse_char(), uv_order,
                         ((uv_order - uv_exp % uv_order) % uv_order + uv_order) % uv_order};
}

bool TameCharacter::same_as(const TameCharacter& o) const {
    if (unit_part.d != o.unit_part.d) return false;
    long m = unit_part.modulus();
    if (((unit_part.j - o.unit_part.j) % m + m) % m != 0) return false;
    // compare uniformizer values as roots of unity
    long order = std::lcm(uv_order, o.uv_order);
    long e1 = uv_exp * (order / uv_order) % order;
    long e2 = o.uv_exp * (order / o.uv_order) % order;
    return ((e1 - e2) % order + order) % order == 0;
}

TameCharacter TameCharacter::make(const Context& ctx, long d, long j, long uv_order,
                                  long uv_exp) {
    if (uv_order <= 0 || ctx.cfg->M() % uv_order != 0)
        throw config_error("uniformizer value order must divide M");
    long m = power_long(ctx.q, d) - 1;
    return TameCharacter{MultChar{&ctx, d, ((j % m) + m) % m}, uv_order,
                         ((uv_exp % uv_order) + uv_order) % uv_order};
}

TameCharacter TameCharacter::trivial(const Context& ctx, long d) {
    return make(ctx, d, 0, 1, 0);
}

QuadCharKit QuadCharKit::make(const Context& ctx) {
    if (ctx.p == 2) throw precondition_error("QuadCharKit requires p != 2");
    long leg = (ctx.q - 1) / 2; // Legendre character index
    QuadCharKit kit{
        TameCharacter::trivial(ctx),
        TameCharacter::make(ctx, 1, 0, 2, 1),
        TameCharacter::make(ctx, 1, leg, 2, 0),
        TameCharacter::make(ctx, 1, leg, 2, 1),
    };
    return kit;
}

TameCharacter solve_unramified_quadratic(const Context& ctx, long a_exp, long zeta) {
    (void)a_exp; // unramified => value at a^{-1}*pi is independent of a
    if (zeta != 1 && zeta != -1) throw precondition_error("zeta must be +-1");
    return TameCharacter::make(ctx, 1, 0, 2, zeta == 1 ? 0 : 1);
}

TameCharacter solve_ramified_quadratic(const Context& ctx, long a_exp, long zeta,
                                       long kappa) {
    if (ctx.p == 2)
        throw precondition_error("no ramified tame quadratic character when p = 2");
    if (zeta != 1 && zeta != -1) throw precondition_error("zeta must be +-1");
    auto kit = QuadCharKit::make(ctx);
    const auto& tw = *ctx.tower;
    // target: phi_2(a^{-1} pi) = zeta * phi_2(-4 eps^kappa)
    long meps = kappa ? ctx.eps : tw.one();
    long rhs_unit = tw.mul(tw.neg(tw.from_int(4)), meps);
    long a = tw.gen_pow(1, a_exp);
    long a_inv = tw.inv(a);
    const TameCharacter* found = nullptr;
    for (const TameCharacter* c : {&kit.ram_plus, &kit.ram_minus}) {
        ScalarExt lhs = c->unit_part.value(a_inv) * c->value_at_pi();
        ScalarExt rhs = ctx.rational(zeta) * c->unit_part.value(rhs_unit);
        if (lhs == rhs) {
            if (found) throw consistency_error("ramified quadratic not unique");
            found = c;
        }
    }
    if (!found) throw consistency_error("no ramified quadratic satisfies the constraint");
    return *found;
}

} // namespace llcw
