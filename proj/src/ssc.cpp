#include "llcw/ssc.hpp"

namespace llcw {

namespace {

long mod_units(const Context& ctx, long e) {
    long m = ctx.q - 1;
    if (m == 0) return 0;
    return ((e % m) + m) % m;
}

// exponent of -gen^e in k^x
long neg_of(const Context& ctx, long e) {
    if (ctx.p == 2) return mod_units(ctx, e);
    return mod_units(ctx, e + (ctx.q - 1) / 2);
}

ScalarExt omega_at_minus1(const Context& ctx, long j) {
    if (ctx.p == 2) return ctx.one();
    return ctx.rational((j * ((ctx.q - 1) / 2)) % (ctx.q - 1) == 0 ? 1 : -1);
}

} // namespace

SOEvenParams make_so_even(const Context& ctx, long n, long xi, long kappa, long a_exp,
                          long zeta) {
    if (n < 2) throw precondition_error("SO_{2n} needs n >= 2");
    if (xi != 1 && xi != -1) throw precondition_error("xi must be +-1");
    if (zeta != 1 && zeta != -1) throw precondition_error("zeta must be +-1");
    if (kappa != 0 && kappa != 1) throw precondition_error("kappa must be 0 or 1");
    if (ctx.p == 2) {
        if (xi != 1) throw precondition_error("p = 2 forces xi = 1");
        kappa = 0; // pi^{SO}_{xi,1,a,zeta} = pi^{SO}_{xi,0,a,zeta} when p = 2
    }
    return SOEvenParams{n, xi, kappa, mod_units(ctx, a_exp), zeta};
}

GLSSCParams theta_dual(const Context& ctx, const GLSSCParams& g) {
    long m = ctx.q - 1;
    long jinv = mod_units(ctx, -g.omega_j);
    long a = (g.N % 2 == 0) ? g.a_exp : neg_of(ctx, g.a_exp);
    ScalarExt z = omega_at_minus1(ctx, g.omega_j) * g.zeta.inverse();
    (void)m;
    return GLSSCParams{g.N, jinv, a, z};
}

bool gl_params_equal(const Context& ctx, const GLSSCParams& x, const GLSSCParams& y) {
    return x.N == y.N && mod_units(ctx, x.omega_j - y.omega_j) == 0 &&
           mod_units(ctx, x.a_exp - y.a_exp) == 0 && x.zeta == y.zeta;
}

bool is_self_dual(const Context& ctx, const GLSSCParams& g) {
    return gl_params_equal(ctx, g, theta_dual(ctx, g));
}

std::vector<GLSSCParams> enumerate_gl(const Context& ctx, long N, long zeta_order_bound) {
    if (ctx.cfg->M() % zeta_order_bound != 0)
        throw config_error("zeta order bound must divide M");
    std::vector<GLSSCParams> v;
    for (long j = 0; j < ctx.q - 1; ++j)
        for (long a = 0; a < ctx.q - 1; ++a)
            for (long z = 0; z < zeta_order_bound; ++z)
                v.push_back(GLSSCParams{N, j, a, ctx.root(zeta_order_bound, z)});
    return v;
}

std::vector<SOOddParams> enumerate_so_odd(const Context& ctx, long n) {
    std::vector<SOOddParams> v;
    for (long a = 0; a < ctx.q - 1; ++a)
        for (long z : {1, -1}) v.push_back(SOOddParams{n, a, z});
    return v;
}

std::vector<SOEvenParams> enumerate_so_even(const Context& ctx, long n) {
    std::vector<SOEvenParams> v;
    if (ctx.p == 2) {
        for (long a = 0; a < ctx.q - 1; ++a)
            for (long z : {1, -1}) v.push_back(make_so_even(ctx, n, 1, 0, a, z));
        return v;
    }
    for (long xi : {1, -1})
        for (long kappa : {0, 1})
            for (long a = 0; a < ctx.q - 1; ++a)
                for (long z : {1, -1}) v.push_back(make_so_even(ctx, n, xi, kappa, a, z));
    return v;
}

CanonicalParams dict_convert(const Context& ctx, const DictParams& d) {
    switch (d.src) {
        case DictSource::AL16:
            // sigma(pi', zeta, omega) with pi' = u*pi -> (omega|_{k^x}, a = u^{-1}, zeta)
            return GLSSCParams{d.n_or_N, mod_units(ctx, d.omega_j),
                               mod_units(ctx, -d.u_exp), d.zeta_gl};
        case DictSource::Adr16: {
            // pi^zeta_{chi'}[pi'] -> SOOdd((-1)^{n+1} a, zeta), a = pi/pi' = u^{-1}
            long n = d.n_or_N;
            long a = mod_units(ctx, -d.u_exp);
            if ((n + 1) % 2 != 0) a = neg_of(ctx, a);
            return SOOddParams{n, a, d.zeta_pm};
        }
        case DictSource::AK21: {
            // pi^omega_alpha[pi', zeta] -> SOEven(xi = omega(-1), kappa, a = u^{-1}, zeta)
            long kappa;
            if (d.alpha_exp == 0) kappa = 0;
            else if (ctx.p != 2 && mod_units(ctx, d.alpha_exp - 1) == 0) kappa = 1;
            else throw precondition_error("alpha must be 1 or eps");
            long xi = omega_at_minus1(ctx, d.omega_j) == ctx.one() ? 1 : -1;
            return make_so_even(ctx, d.n_or_N, xi, kappa, mod_units(ctx, -d.u_exp),
                                d.zeta_pm);
        }
        case DictSource::Oi19: {
            // pi'_{a, zeta} = pi^{SO_{2n+1}}_{2a, zeta}
            if (ctx.p == 2) throw precondition_error("Oi19 dictionary requires p != 2");
            long two = ctx.k_of_int(2);
            long e = mod_units(ctx, ctx.tower->log(1, two) + d.a_exp);
            return SOOddParams{d.n_or_N, e, d.zeta_pm};
        }
    }
    throw precondition_error("unknown dictionary source");
}

DictParams dict_convert_back(const Context& ctx, DictSource src,
                             const CanonicalParams& c) {
    DictParams d;
    d.src = src;
    switch (src) {
        case DictSource::AL16: {
            const auto& g = std::get<GLSSCParams>(c);
            d.n_or_N = g.N;
            d.omega_j = g.omega_j;
            d.u_exp = mod_units(ctx, -g.a_exp);
            d.zeta_gl = g.zeta;
            return d;
        }
        case DictSource::Adr16: {
            const auto& g = std::get<SOOddParams>(c);
            d.n_or_N = g.n;
            long a = g.a_exp;
            if ((g.n + 1) % 2 != 0) a = neg_of(ctx, a);
            d.u_exp = mod_units(ctx, -a);
            d.zeta_pm = g.zeta;
            return d;
        }
        case DictSource::AK21: {
            const auto& g = std::get<SOEvenParams>(c);
            d.n_or_N = g.n;
            d.u_exp = mod_units(ctx, -g.a_exp);
            d.alpha_exp = g.kappa;
            // omega(-1) = xi; any odd index has omega(-1) = -1 for odd q
            d.omega_j = g.xi == 1 ? 0 : 1;
            d.zeta_pm = g.zeta;
            return d;
        }
        case DictSource::Oi19: {
            const auto& g = std::get<SOOddParams>(c);
            if (ctx.p == 2) throw precondition_error("Oi19 dictionary requires p != 2");
            d.n_or_N = g.n;
            long two = ctx.k_of_int(2);
            d.a_exp = mod_units(ctx, g.a_exp - ctx.tower->log(1, two));
            d.zeta_pm = g.zeta;
            return d;
        }
    }
    throw precondition_error("unknown dictionary source");
}

} // namespace llcw
