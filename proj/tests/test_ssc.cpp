#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "llcw/ssc.hpp"

using namespace llcw;

TEST_CASE("theta dual fixed points and involution") {
    auto ctx = Context::make(3, 1, 2, 4);

    GLSSCParams g4{4, 0, 0, ctx.one()};
    CHECK(gl_params_equal(ctx, theta_dual(ctx, g4), g4));
    CHECK(is_self_dual(ctx, g4));

    // N odd flips a to -a: at q=3, -1 = gen^1
    GLSSCParams g3{3, 0, 0, ctx.one()};
    auto d3 = theta_dual(ctx, g3);
    CHECK(d3.omega_j == 0);
    CHECK(d3.a_exp == 1);
    CHECK(d3.zeta == ctx.one());
    CHECK(!is_self_dual(ctx, g3));

    // Legendre unit part with zeta = i: omega(-1) = -1 makes it a fixed point
    GLSSCParams g2{2, 1, 0, ctx.root(4, 1)};
    CHECK(is_self_dual(ctx, g2));

    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}}) {
        Context c = Context::make(p, f, 2, 4);
        for (long N : {2L, 3L}) {
            for (const auto& g : enumerate_gl(c, N, 8)) {
                auto dd = theta_dual(c, theta_dual(c, g));
                CHECK(gl_params_equal(c, dd, g));
            }
        }
    }
}

TEST_CASE("self-dual set at p=2 is exactly trivial omega with zeta = +-1") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}}) {
        Context c = Context::make(p, f, 2, 4);
        for (const auto& g : enumerate_gl(c, 3, 8)) {
            bool expected = g.omega_j % (c.q - 1 == 0 ? 1 : c.q - 1) == 0 &&
                            (g.zeta == c.one() || g.zeta == c.rational(-1));
            if (c.q == 2) expected = g.zeta == c.one() || g.zeta == c.rational(-1);
            CHECK(is_self_dual(c, g) == expected);
        }
    }
}

TEST_CASE("enumeration cardinalities") {
    auto ctx3 = Context::make(3, 1, 2, 4);
    CHECK(enumerate_so_odd(ctx3, 2).size() == 4);
    CHECK(enumerate_so_even(ctx3, 2).size() == 16);

    auto ctx2 = Context::make(2, 1, 2, 4);
    CHECK(enumerate_so_even(ctx2, 2).size() == 2);
    for (const auto& g : enumerate_so_even(ctx2, 2)) {
        CHECK(g.xi == 1);
        CHECK(g.kappa == 0);
    }

    auto ctx5 = Context::make(5, 1, 2, 4);
    CHECK(enumerate_so_odd(ctx5, 3).size() == 8);
    CHECK(enumerate_so_even(ctx5, 2).size() == 32);
}

TEST_CASE("p=2 normalization at construction") {
    auto ctx2 = Context::make(2, 1, 2, 4);
    auto g = make_so_even(ctx2, 2, 1, 1, 0, 1);
    CHECK(g.kappa == 0);
    CHECK_THROWS_AS(make_so_even(ctx2, 2, -1, 0, 0, 1), precondition_error);
    CHECK_THROWS_AS(make_so_even(Context::make(3, 1, 2, 4), 1, 1, 0, 0, 1),
                    precondition_error);
}

TEST_CASE("dictionary conversions") {
    auto ctx = Context::make(3, 1, 2, 4);

    // sigma(pi, zeta, omega) with pi' = pi
    DictParams al{DictSource::AL16, 4, 0, 1, ctx.root(4, 1), 1, 0, 0};
    auto c1 = std::get<GLSSCParams>(dict_convert(ctx, al));
    CHECK(c1.omega_j == 1);
    CHECK(c1.a_exp == 0);
    CHECK(c1.zeta == ctx.root(4, 1));

    // Adr16 with pi' = pi, n = 2: a = (-1)^{n+1} = -1 = gen^1 at q=3
    DictParams adr{DictSource::Adr16, 2, 0, 0, ctx.one(), -1, 0, 0};
    auto c2 = std::get<SOOddParams>(dict_convert(ctx, adr));
    CHECK(c2.a_exp == 1);
    CHECK(c2.zeta == -1);

    // Oi19: pi'_{a,zeta} = pi^{SO}_{2a,zeta}; at q=3, 2 = gen, a = gen^0 -> 2a = gen^1
    DictParams oi{DictSource::Oi19, 2, 0, 0, ctx.one(), 1, 0, 0};
    auto c3 = std::get<SOOddParams>(dict_convert(ctx, oi));
    CHECK(c3.a_exp == 1);

    // AK21: alpha = eps -> kappa = 1, omega = Legendre -> xi = -1
    DictParams ak{DictSource::AK21, 2, 1, 1, ctx.one(), -1, 1, 0};
    auto c4 = std::get<SOEvenParams>(dict_convert(ctx, ak));
    CHECK(c4.kappa == 1);
    CHECK(c4.xi == -1);
    CHECK(c4.a_exp == 1); // a = u^{-1}, u = gen^1
}

TEST_CASE("dictionary round trips") {
    for (auto [p, f] : {std::pair<long, long>{3, 1}, {5, 1}, {2, 1}, {2, 2}}) {
        Context c = Context::make(p, f, 2, 4);
        for (const auto& g : enumerate_gl(c, 4, 4)) {
            auto d = dict_convert_back(c, DictSource::AL16, CanonicalParams{g});
            auto back = std::get<GLSSCParams>(dict_convert(c, d));
            CHECK(gl_params_equal(c, back, g));
        }
        for (const auto& g : enumerate_so_odd(c, 2)) {
            for (auto src : {DictSource::Adr16, DictSource::Oi19}) {
                if (src == DictSource::Oi19 && c.p == 2) continue;
                auto d = dict_convert_back(c, src, CanonicalParams{g});
                auto back = std::get<SOOddParams>(dict_convert(c, d));
                CHECK(back.n == g.n);
                CHECK(back.a_exp == g.a_exp);
                CHECK(back.zeta == g.zeta);
            }
        }
        for (const auto& g : enumerate_so_even(c, 2)) {
            auto d = dict_convert_back(c, DictSource::AK21, CanonicalParams{g});
            auto back = std::get<SOEvenParams>(dict_convert(c, d));
            CHECK(back.n == g.n);
            CHECK(back.xi == g.xi);
            CHECK(back.kappa == g.kappa);
            CHECK(back.a_exp == g.a_exp);
            CHECK(back.zeta == g.zeta);
        }
    }
}
