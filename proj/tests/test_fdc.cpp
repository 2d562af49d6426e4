#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "llcw/errors.hpp"
#include "llcw/fdc.hpp"

using namespace llcw;

TEST_CASE("worked examples have the expected unique solution") {
    auto odd = solve_constraints(FDCFamily::SOOdd, 2, 3);
    REQUIRE(odd.size() == 1);
    CHECK(odd[0].r == 0);
    CHECK(odd[0].e.empty());
    CHECK(odd[0].artin == 12);

    auto even2 = solve_constraints(FDCFamily::SOEvenP2, 2, 2);
    REQUIRE(even2.size() == 1);
    CHECK(even2[0].r == 1);
    CHECK(even2[0].e.empty());
    CHECK(even2[0].artin == 8);

    auto evenp = solve_constraints(FDCFamily::SOEvenOddP, 2, 3);
    REQUIRE(evenp.size() == 1);
    CHECK(evenp[0].r == 2);
    CHECK(evenp[0].e.empty());
    CHECK(evenp[0].artin == 8);
}

TEST_CASE("unique solution across the full grid") {
    for (long n = 1; n <= 6; ++n) {
        for (long q : {2, 3, 4, 5, 7, 9}) {
            bool q_even = q % 2 == 0;

            auto odd = solve_constraints(FDCFamily::SOOdd, n, q);
            REQUIRE(odd.size() == 1);
            CHECK(odd[0].r == 0);
            CHECK(odd[0].e.empty());
            CHECK(odd[0].artin == 2 * n * n + 2 * n);

            if (q_even) {
                auto e2 = solve_constraints(FDCFamily::SOEvenP2, n, q);
                REQUIRE(e2.size() == 1);
                CHECK(e2[0].r == 1);
                CHECK(e2[0].e.empty());
                CHECK(e2[0].artin == 2 * n * n);
            } else if (n >= 2) {
                auto ep = solve_constraints(FDCFamily::SOEvenOddP, n, q);
                REQUIRE(ep.size() == 1);
                CHECK(ep[0].r == 2);
                CHECK(ep[0].e.empty());
                CHECK(ep[0].artin == 2 * n * n);
            }
        }
    }
}

TEST_CASE("admissible exponents are exactly those with 1 + q^e a power of 2") {
    CHECK(admissible_exponents(2, 100).empty());
    CHECK(admissible_exponents(4, 100).empty());
    CHECK(admissible_exponents(5, 100).empty());
    CHECK(admissible_exponents(9, 100).empty());
    CHECK(admissible_exponents(3, 100) == std::vector<long>{1});
    CHECK(admissible_exponents(7, 100) == std::vector<long>{1});
    // Mersenne q = 2^x - 1 is the only way 1 + q^e hits a power of 2 at e = 1
    CHECK(admissible_exponents(31, 50) == std::vector<long>{1});
}

TEST_CASE("no nonempty pole multiset is feasible") {
    // scan every r, every multiset of size <= 2 with entries up to 2n^2, and
    // every Artin conductor up to a generous bound: the identity never holds
    // with a nonempty multiset
    for (long q : {2, 3, 5, 7}) {
        long n = 2;
        for (auto family :
             {FDCFamily::SOOdd, FDCFamily::SOEvenP2, FDCFamily::SOEvenOddP}) {
            if (family == FDCFamily::SOEvenP2 && q % 2 != 0) continue;
            if (family == FDCFamily::SOEvenOddP && q % 2 == 0) continue;
            for (long r = 0; r <= n; ++r)
                for (long e1 = 1; e1 <= 2 * n * n; ++e1)
                    for (long e2 = 0; e2 <= e1; ++e2) {
                        std::vector<long> e{e1};
                        if (e2 > 0) e.push_back(e2);
                        for (long artin = 0; artin <= 60; ++artin)
                            CHECK(!fdc_identity_holds(family, n, q, r, e, artin));
                    }
        }
    }
}

TEST_CASE("identity holds exactly at the solver output") {
    for (long n = 1; n <= 4; ++n)
        for (long q : {2, 3, 5}) {
            CHECK(fdc_identity_holds(FDCFamily::SOOdd, n, q, 0, {},
                                     2 * n * n + 2 * n));
            CHECK(!fdc_identity_holds(FDCFamily::SOOdd, n, q, 0, {},
                                      2 * n * n + 2 * n + 1));
            CHECK(!fdc_identity_holds(FDCFamily::SOOdd, n, q, 1, {},
                                      2 * n * n + 2 * n));
            if (q % 2 == 0)
                CHECK(fdc_identity_holds(FDCFamily::SOEvenP2, n, q, 1, {}, 2 * n * n));
            else
                CHECK(fdc_identity_holds(FDCFamily::SOEvenOddP, n, q, 2, {}, 2 * n * n));
        }
    // r below the character count makes the centralizer exponent negative
    CHECK(!fdc_identity_holds(FDCFamily::SOEvenP2, 2, 2, 0, {}, 8));
    CHECK(!fdc_identity_holds(FDCFamily::SOEvenOddP, 2, 3, 1, {}, 8));
}

TEST_CASE("right-hand side and formal degree data") {
    CHECK(fdc_rhs(FDCFamily::SOOdd, 3, 2).two_exp == 2);
    CHECK(fdc_rhs(FDCFamily::SOOdd, 3, 2).q_exp == 12);
    CHECK(fdc_rhs(FDCFamily::SOEvenP2, 3, 2).two_exp == 1);
    CHECK(fdc_rhs(FDCFamily::SOEvenOddP, 3, 2).two_exp == 0);
    CHECK(fdc_rhs(FDCFamily::SOEvenOddP, 3, 2).q_exp == 9);
    CHECK(fdc_rhs(FDCFamily::SOOdd, 2, 1).value(3) == 2 * 729);
    CHECK_THROWS_AS(fdc_rhs(FDCFamily::SOEvenOddP, 2, 1).value(3),
                    precondition_error);

    for (long n = 1; n <= 6; ++n) {
        auto fo = formal_degree(FDCFamily::SOOdd, n);
        CHECK(fo.constant == 1);
        CHECK(fo.q_exp == n * n + n);
        auto f2 = formal_degree(FDCFamily::SOEvenP2, n);
        CHECK(f2.constant == 1);
        CHECK(f2.q_exp == n * n);
        auto fp = formal_degree(FDCFamily::SOEvenOddP, n);
        CHECK(fp.constant == mpq_class(1, 2));
        CHECK(fp.q_exp == n * n);

        // Artin exponent of the unique solution equals twice the formal degree
        // q-exponent in every family
        for (long q : {2, 3}) {
            auto sols = solve_constraints(FDCFamily::SOOdd, n, q);
            CHECK(sols[0].artin == 2 * fo.q_exp);
        }
    }

    CHECK_THROWS_AS(solve_constraints(FDCFamily::SOOdd, 0, 3), precondition_error);
    CHECK_THROWS_AS(solve_constraints(FDCFamily::SOOdd, 2, 1), precondition_error);
}
