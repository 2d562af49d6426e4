#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "llcw/local_factors.hpp"

using namespace llcw;

namespace {

// q^{-1/2} as a ScalarExt
ScalarExt inv_sqrt_q(const Context& ctx) {
    return ctx.sqrt_q() * ctx.rational(mpq_class(1, ctx.q));
}

} // namespace

TEST_CASE("gauss sum values") {
    auto ctx = Context::make(3, 1, 2, 4);
    CHECK(gauss_sum(ctx, MultChar{&ctx, 1, 0}, 1) == ctx.rational(-1));

    auto g = gauss_sum(ctx, MultChar{&ctx, 1, 1}, 1); // quadratic at q=3
    auto z3 = [&](long e) { return ctx.root(3, e); };
    CHECK(g == z3(1) - z3(2));

    auto ctx5 = Context::make(5, 1, 2, 4);
    auto g5 = gauss_sum(ctx5, MultChar{&ctx5, 1, 2}, 1);
    auto z5 = [&](long e) { return ctx5.root(5, e); };
    CHECK(g5 == z5(1) - z5(2) - z5(3) + z5(4));
}

TEST_CASE("gauss sum norm and reflection laws") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}}) {
        Context ctx = Context::make(p, f, 2, 4);
        for (long d = 1; d <= 2; ++d) {
            long m = power_long(ctx.q, d) - 1;
            mpq_class qd(power_long(ctx.q, d));
            for (long j = 1; j < m; ++j) {
                MultChar eta{&ctx, d, j};
                auto g = gauss_sum(ctx, eta, d);
                CHECK(g * g.conj() == ctx.rational(qd));
                if (d == 1) {
                    auto gi = gauss_sum(ctx, eta.inverse_char(), 1);
                    ScalarExt eta_m1 = eta.value(ctx.tower->from_int(-1));
                    CHECK(g * gi == eta_m1 * ctx.rational(ctx.q));
                }
            }
        }
    }
}

TEST_CASE("Hasse-Davenport product relation") {
    for (auto [p, f] : {std::pair<long, long>{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        Context ctx = Context::make(p, f, 2, 4);
        long m = ctx.q - 1;
        MultChar tau2{&ctx, 1, m / 2}; // the quadratic character
        auto g_tau2_inv = gauss_sum(ctx, tau2.inverse_char(), 1);
        long four = ctx.k_of_int(4);
        for (long j = 0; j < m; ++j) {
            MultChar tau{&ctx, 1, j};
            auto lhs = gauss_sum(ctx, tau.inverse_char().times(tau2.inverse_char()), 1) *
                       gauss_sum(ctx, tau.inverse_char(), 1);
            MultChar tau_m2{&ctx, 1, ((-2 * j) % m + m) % m};
            ScalarExt tau4 = tau.is_trivial() ? ctx.one() : tau.value(four);
            auto rhs = gauss_sum(ctx, tau_m2, 1) * g_tau2_inv * tau4;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Frobenius twist invariance at p=2") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}}) {
        Context ctx = Context::make(p, f, 2, 4);
        long m = ctx.q - 1;
        for (long j = 0; j < std::max(m, 1L); ++j) {
            MultChar tau{&ctx, 1, j};
            MultChar tau_m1 = tau.inverse_char();
            MultChar tau_m2{&ctx, 1, m == 0 ? 0 : ((-2 * j) % m + m) % m};
            CHECK(gauss_sum(ctx, tau_m2, 1) == gauss_sum(ctx, tau_m1, 1));
        }
    }
}

TEST_CASE("tate gamma closed forms") {
    auto ctx = Context::make(3, 1, 2, 4);
    auto X = [&](const ScalarExt& c, long k) { return LaurentRat::monomial(c, k); };

    // trivial character: q^{-1/2} X^{-1} (1-X) / (1 - q^{-1} X^{-1})
    auto g = tate_gamma(ctx, TameCharacter::trivial(ctx));
    LaurentPoly num(ctx.cfg), den(ctx.cfg);
    num.add_term(-1, inv_sqrt_q(ctx));
    num.add_term(0, -inv_sqrt_q(ctx));
    den.add_term(0, ctx.one());
    den.add_term(-1, -ctx.rational(mpq_class(1, 3)));
    CHECK(g == LaurentRat(num, den));

    // unramified with eta(pi) = -1
    auto mu = TameCharacter::make(ctx, 1, 0, 2, 1);
    auto gm = tate_gamma(ctx, mu);
    LaurentPoly num2(ctx.cfg), den2(ctx.cfg);
    num2.add_term(-1, -inv_sqrt_q(ctx));
    num2.add_term(0, -inv_sqrt_q(ctx));
    den2.add_term(0, ctx.one());
    den2.add_term(-1, ctx.rational(mpq_class(1, 3)));
    CHECK(gm == LaurentRat(num2, den2));

    // ramified quadratic at q=3: constant q^{-1/2} G(eta^{-1}, psi), unit norm
    auto ram = TameCharacter::make(ctx, 1, 1, 2, 0);
    auto gr = tate_gamma(ctx, ram);
    CHECK(gr.den().terms().size() == 1);
    auto m = MonomialForm::of(gr);
    CHECK(m.xpow == 0);
    CHECK(m.coeff.norm2() == ctx.one());
    CHECK(m.coeff == inv_sqrt_q(ctx) * (ctx.root(3, 1) - ctx.root(3, 2)));
    (void)X;
}

TEST_CASE("tate gamma functional symmetry") {
    for (long q : {3, 5}) {
        Context ctx = Context::make(q, 1, 2, 4);
        for (long j = 0; j < q - 1; ++j) {
            for (long uve = 0; uve < 8; ++uve) {
                auto eta = TameCharacter::make(ctx, 1, j, 8, uve);
                auto lhs = tate_gamma(ctx, eta);
                auto rhs = tate_gamma(ctx, eta.inverse_char())
                               .substitute(ctx.rational(mpq_class(1, q)), -1);
                ScalarExt eta_m1 =
                    eta.unit_part.is_trivial()
                        ? ctx.one()
                        : eta.unit_part.value(ctx.tower->from_int(-1));
                CHECK(lhs * rhs == LaurentRat::constant(eta_m1));
            }
        }
    }
}

TEST_CASE("tate L factors") {
    auto ctx = Context::make(3, 1, 2, 4);
    auto triv = TameCharacter::trivial(ctx);
    LaurentPoly d1(ctx.cfg);
    d1.add_term(0, ctx.one());
    d1.add_term(1, -ctx.one());
    CHECK(tate_L(ctx, triv) == LaurentRat(LaurentPoly::constant(ctx.one()), d1));

    auto ram = TameCharacter::make(ctx, 1, 1, 2, 0);
    CHECK(tate_L(ctx, ram) == LaurentRat::one(ctx.cfg));

    auto mu = TameCharacter::make(ctx, 1, 0, 2, 1);
    LaurentPoly d2(ctx.cfg);
    d2.add_term(0, ctx.one());
    d2.add_term(2, ctx.one());
    CHECK(tate_L(ctx, mu, 2) == LaurentRat(LaurentPoly::constant(ctx.one()), d2));
}

TEST_CASE("Langlands-Shahidi coefficient") {
    auto ctx = Context::make(3, 1, 2, 4);
    // tau trivial, gamma a unit: C = gamma(2s-1, 1, psi)
    auto c = ls_coefficient_C(ctx, TameCharacter::trivial(ctx), ctx.tower->one(), 0);
    auto expected = tate_gamma(ctx, TameCharacter::trivial(ctx))
                        .substitute(ctx.rational(3), 2);
    CHECK(c == expected);

    // tau ramified quadratic: tau^2 = 1, so the unramified branch is used
    auto ram = TameCharacter::make(ctx, 1, 1, 2, 0);
    auto c2 = ls_coefficient_C(ctx, ram, ctx.tower->one(), 0);
    CHECK(c2 == expected); // tau(1) = 1 and tau^2 trivial

    // gamma = pi * unit adds q^{-(s-1)} = q X
    auto c3 = ls_coefficient_C(ctx, TameCharacter::trivial(ctx), ctx.tower->one(), 1);
    CHECK(c3 == expected * LaurentRat::monomial(ctx.rational(3), 1));
}

TEST_CASE("absolute value law for epsilon factors") {
    auto ctx = Context::make(3, 1, 2, 4);
    // Swan 1 shape: unit * q^{1/2} X
    auto gam = LaurentRat::monomial(ctx.rational(-1) * ctx.sqrt_q(), 1);
    auto rep = eps_abs_exponent(ctx, gam, 1, true);
    CHECK(rep.ok);

    // Swan 0: ramified tame constituent
    auto ram = TameCharacter::make(ctx, 1, 1, 2, 0);
    auto rep0 = eps_abs_exponent(ctx, tate_gamma(ctx, ram), 0, true);
    CHECK(rep0.ok);

    // trivial character constituent has a nontrivial L-factor: error path
    CHECK_THROWS_AS(
        eps_abs_exponent(ctx, tate_gamma(ctx, TameCharacter::trivial(ctx)), 0, false),
        precondition_error);
    // non-monomial shape
    CHECK_THROWS_AS(
        eps_abs_exponent(ctx, tate_gamma(ctx, TameCharacter::trivial(ctx)), 0, true),
        consistency_error);
}
