#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "llcw/llc.hpp"

using namespace llcw;

TEST_CASE("SO odd parameter is a single symplectic lift") {
    auto ctx = Context::make(3, 1, 2, 4);
    // a = 2 = gen^1 at q=3
    auto dec = llc(ctx, SOOddParams{2, 1, -1});
    REQUIRE(dec.constituents.size() == 1);
    const auto& lift = std::get<GLLift>(dec.constituents[0].rep);
    CHECK(lift.m == 4);
    CHECK(lift.lift.omega_j == 0);
    CHECK(lift.lift.a_exp == 1);
    CHECK(lift.lift.zeta == ctx.rational(-1));
    CHECK(dec.constituents[0].type == ConstituentType::Symplectic);
    CHECK(dec.dim_total() == 4);
    CHECK(dec.swan_total() == 1);
    det_and_type_check(ctx, dec);
}

TEST_CASE("SO even p=2 parameter is lift plus unramified quadratic") {
    auto ctx = Context::make(2, 1, 2, 4);
    auto dec = llc(ctx, make_so_even(ctx, 2, 1, 0, 0, -1));
    REQUIRE(dec.constituents.size() == 2);
    const auto& lift = std::get<GLLift>(dec.constituents[0].rep);
    CHECK(lift.m == 3);
    CHECK(lift.lift.zeta == ctx.rational(-1));
    const auto& q1 = std::get<TameQuadratic>(dec.constituents[1].rep);
    CHECK(q1.chi.is_unramified());
    CHECK(q1.chi.value_at_pi() == ctx.rational(-1));
    det_and_type_check(ctx, dec);

    auto dec1 = llc(ctx, make_so_even(ctx, 2, 1, 0, 0, 1));
    CHECK(std::get<TameQuadratic>(dec1.constituents[1].rep).chi.is_trivial());
    det_and_type_check(ctx, dec1);
}

TEST_CASE("SO even p!=2 lift data at q=3") {
    auto ctx = Context::make(3, 1, 2, 4);
    auto dec = llc(ctx, make_so_even(ctx, 2, 1, 0, 0, 1));
    REQUIRE(dec.constituents.size() == 3);
    const auto& lift = std::get<GLLift>(dec.constituents[0].rep);
    CHECK(lift.m == 2);
    CHECK(lift.lift.omega_j == 1); // Legendre at q=3
    // a' = (-1)^2 * 4 * 1 = 4 = 1 in F_3
    CHECK(lift.lift.a_exp == 0);
    // zeta' = sqrt(3)/(zeta_3 - zeta_3^2) = -i
    auto lab = lift.lift.zeta.as_root_of_unity(4);
    REQUIRE(lab.has_value());
    CHECK(*lab == 3);
    CHECK(lift.lift.zeta * lift.lift.zeta == ctx.rational(-1)); // omega_0(-1) = -1

    const auto& q1 = std::get<TameQuadratic>(dec.constituents[1].rep);
    const auto& q2 = std::get<TameQuadratic>(dec.constituents[2].rep);
    CHECK(q1.chi.is_trivial()); // phi_1(a^{-1} pi) = zeta = 1
    CHECK(!q2.chi.is_unramified());
    CHECK(q2.chi.value_at_pi() == ctx.rational(-1));
    det_and_type_check(ctx, dec);
}

TEST_CASE("decomposition invariants across all classes") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        Context c = Context::make(p, f, 2, 4);
        for (const auto& g : enumerate_so_odd(c, 2)) {
            auto dec = llc(c, g);
            CHECK_NOTHROW(det_and_type_check(c, dec));
            auto pk = lpacket_data(dec);
            CHECK(pk.packet_size == 1);
            CHECK(pk.num_constituents == 1);
        }
        for (const auto& g : enumerate_so_even(c, 2)) {
            auto dec = llc(c, g);
            CHECK_NOTHROW(det_and_type_check(c, dec));
            auto pk = lpacket_data(dec);
            if (c.p == 2) {
                CHECK(pk.packet_size == 1);
                CHECK(pk.num_constituents == 2);
            } else {
                CHECK(pk.packet_size == 2);
                CHECK(pk.num_constituents == 3);
            }
            // zeta' is a 4th root of unity
            const auto& lift = std::get<GLLift>(dec.constituents[0].rep);
            CHECK(lift.lift.zeta.as_root_of_unity(4).has_value());
        }
    }
}

TEST_CASE("gamma product verification") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {3, 1}}) {
        Context c = Context::make(p, f, 2, 4);
        for (const auto& g : enumerate_so_odd(c, 2)) {
            auto rep = verify_gamma_product(c, g);
            CHECK(rep.ok());
            CHECK(rep.checked == std::max(c.q - 1, 1L) * 8);
        }
        for (const auto& g : enumerate_so_even(c, 2)) {
            auto rep = verify_gamma_product(c, g);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("appendix consistency for SO even at odd p") {
    for (long q : {3, 5}) {
        Context c = Context::make(q, 1, 2, 4);
        for (const auto& g : enumerate_so_even(c, 2)) CHECK(appendix_consistency(c, g));
        for (const auto& g : enumerate_so_even(c, 3)) CHECK(appendix_consistency(c, g));
    }
    CHECK_THROWS_AS(
        appendix_consistency(Context::make(2, 1, 2, 4),
                             SOEvenParams{2, 1, 0, 0, 1}),
        precondition_error);
}

TEST_CASE("quadratic constituents match the solver descriptions") {
    auto ctx = Context::make(5, 1, 2, 4);
    for (const auto& g : enumerate_so_even(ctx, 2)) {
        auto dec = llc(ctx, g);
        const auto& q1 = std::get<TameQuadratic>(dec.constituents[1].rep);
        const auto& q2 = std::get<TameQuadratic>(dec.constituents[2].rep);
        CHECK(q1.chi.same_as(solve_unramified_quadratic(ctx, g.a_exp, g.zeta)));
        CHECK(q2.chi.same_as(solve_ramified_quadratic(ctx, g.a_exp, g.zeta, g.kappa)));
    }
}
