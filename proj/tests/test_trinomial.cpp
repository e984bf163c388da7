#include "supercount/trinomial.hpp"

#include "supercount/hw_direct.hpp"
#include "supercount/oracle.hpp"

#include "doctest.h"

#include <random>
#include <string>
#include <vector>

using namespace supercount;

namespace {

std::vector<Integer> primes_with(long e, unsigned long bound) {
    std::vector<Integer> out;
    Integer p = 3;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p >= Integer(bound)) break;
        if ((p - 1) % e == 0) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_SUITE("trinomial") {

TEST_CASE("rep table, frozen") {
    CHECK(rep_table(Integer(13), 3) == std::vector<Integer>{0, 1, 5});   // binom(8,4)=70
    CHECK(rep_table(Integer(7), 3) == std::vector<Integer>{0, 1, 6});    // binom(4,2)=6
    CHECK(rep_table(Integer(13), 4) == std::vector<Integer>{0, 1, 7, 6});
    CHECK(rep_table(Integer(13), 6) == std::vector<Integer>{0, 1, 6, 2, 2, 6});
    CHECK(rep_table(Integer(17), 8) == std::vector<Integer>{0, 1, 6, 15, 11, 11, 15, 6});
    CHECK_THROWS_AS(rep_table(Integer(13), 8), PreconditionFailed);  // 8 does not divide 12
    CHECK_THROWS_AS(rep_table(Integer(11), 5), PreconditionFailed);
}

TEST_CASE("rep table matches the binomial oracle across primes") {
    for (long e : {3L, 4L, 6L, 8L}) {
        for (const Integer& p : primes_with(e, 2000)) {
            Integer f = (p - 1) / e;
            auto col1 = rep_table(p, e);
            REQUIRE(col1.size() == static_cast<size_t>(e));
            for (long t = 1; t < e; ++t)
                REQUIRE(col1[t] == oracle::binomial_mod(Integer(t) * f, f, p));
        }
    }
}

TEST_CASE("telescoped binomials match the oracle for every r, s") {
    for (long e : {3L, 4L, 6L, 8L}) {
        for (const Integer& p : primes_with(e, 400)) {
            Integer f = (p - 1) / e;
            auto col1 = rep_table(p, e);
            for (long r = 0; r <= e - 1; ++r)
                for (long s = 0; s <= r; ++s)
                    REQUIRE(binom_ff(r, s, col1, p) ==
                            oracle::binomial_mod(Integer(r) * f, Integer(s) * f, p));
        }
    }
    auto col1 = rep_table(Integer(13), 4);
    CHECK_THROWS_AS(binom_ff(2, 3, col1, Integer(13)), PreconditionFailed);
    CHECK_THROWS_AS(binom_ff(4, 1, col1, Integer(13)), PreconditionFailed);
}

TEST_CASE("reflection identity binom(rf, sf) = (-1)^(sf) binom((e+s-r)f, sf)") {
    for (long e : {3L, 4L, 6L, 8L}) {
        for (const Integer& p : primes_with(e, 300)) {
            Integer f = (p - 1) / e;
            auto col1 = rep_table(p, e);
            for (long r = 1; r <= e - 1; ++r)
                for (long s = 0; s < r; ++s) {
                    Integer sign = (Integer(s) * f) % 2 != 0 ? p - 1 : Integer(1);
                    REQUIRE(binom_ff(r, s, col1, p) ==
                            mulm(sign, binom_ff(e + s - r, s, col1, p), p));
                }
        }
    }
}

TEST_CASE("applicability screen") {
    std::string reason;
    CHECK(trinomial_applicable(parse_curve("a=2 m=[1,0,0,0,1] p=17")));
    CHECK_FALSE(trinomial_applicable(parse_curve("a=2 m=[1,1,0,1] p=13"), &reason));
    CHECK(reason.find("m1") != std::string::npos);
    CHECK_FALSE(trinomial_applicable(parse_curve("a=2 m=[1,0,0,1] p=11"), &reason));
    CHECK(reason.find("e = gcd") != std::string::npos);
    CHECK_FALSE(trinomial_applicable(parse_curve("a=2 m=[1,0,0,1] p=4"), &reason));
    CHECK(reason.find("invalid curve") != std::string::npos);
    // shape fits but p is below 16 g^2 = 64, so the lift could be ambiguous
    CHECK_FALSE(trinomial_applicable(parse_curve("a=2 m=[1,0,0,0,0,0,1] p=19"), &reason));
    CHECK(reason.find("PrimeTooSmall") != std::string::npos);
    CHECK(trinomial_applicable(parse_curve("a=2 m=[1,0,0,0,0,0,1] p=67")));
}

TEST_CASE("context construction failures") {
    // middle coefficient present
    CHECK_THROWS_AS(make_trinomial_context(parse_curve("a=2 m=[1,1,0,1] p=13")), NotTrinomial);
    // e = 2, 12, 1 respectively
    CHECK_THROWS_AS(make_trinomial_context(parse_curve("a=2 m=[1,0,0,1] p=11")), BadGcd);
    CHECK_THROWS_AS(make_trinomial_context(parse_curve("a=2 m=[1,0,0,0,0,0,1] p=13")), BadGcd);
    CHECK_THROWS_AS(make_trinomial_context(parse_curve("a=3 m=[1,0,0,1] p=5")), BadGcd);
}

TEST_CASE("context fields, frozen") {
    auto ctx = make_trinomial_context(parse_curve("a=2 m=[1,0,0,0,1] p=17"));
    CHECK(ctx.e == 8);
    CHECK(ctx.d == 1);
    CHECK(ctx.f == 2);
    CHECK(ctx.m0 == 1);
    CHECK(ctx.mc == 1);
    CHECK(ctx.col1 == rep_table(Integer(17), 8));
}

TEST_CASE("fast trace, frozen") {
    CHECK(trace_mod_p_fast(make_trinomial_context(parse_curve("a=2 m=[1,0,0,0,1] p=17"))) == 2);
    CHECK(trace_mod_p_fast(make_trinomial_context(parse_curve("a=2 m=[1,0,0,0,1] p=13"))) == 7);
}

TEST_CASE("fast diagonal, frozen") {
    auto ctx = make_trinomial_context(parse_curve("a=2 m=[1,0,0,0,1] p=17"));
    CHECK(diagonal_fast(ctx) == std::vector<Integer>{2});
    CHECK(jacobian_order_mod_p_fast(ctx) == 16);
}

TEST_CASE("off-diagonal landing raises, trace still fine") {
    auto ctx = make_trinomial_context(parse_curve("a=3 m=[1,0,0,0,1] p=5"));
    CHECK_THROWS_AS(diagonal_fast(ctx), NotDiagonal);
    CHECK(trace_mod_p_fast(ctx) == 0);
}

TEST_CASE("fast trace and diagonal match the direct fill") {
    std::mt19937_64 gen(20260815);
    int found = 0, attempts = 0;
    while (found < 40 && attempts < 20000) {
        ++attempts;
        CurveSpec spec;
        spec.a = 2 + static_cast<long>(gen() % 3);
        spec.b = static_cast<long>(gen() % 5);
        long c = 2 + static_cast<long>(gen() % 4);
        spec.p = Integer(static_cast<unsigned long>(spec.a + spec.b + c) +
                         static_cast<unsigned long>(gen() % 800));
        mpz_nextprime(spec.p.get_mpz_t(), spec.p.get_mpz_t());
        spec.m.assign(static_cast<size_t>(c) + 1, Integer(0));
        spec.m.front() = Integer(1 + static_cast<unsigned long>(gen()) % (to_u64(spec.p) - 1));
        spec.m.back() = Integer(1 + static_cast<unsigned long>(gen()) % (to_u64(spec.p) - 1));
        if (!trinomial_applicable(spec)) continue;
        ++found;
        auto ctx = make_trinomial_context(spec);
        auto A = hw_matrix_direct(spec);
        REQUIRE(trace_mod_p_fast(ctx) == trace(A));
        try {
            auto diag = diagonal_fast(ctx);
            REQUIRE(diag.size() == A.genus());
            for (size_t r = 0; r < A.genus(); ++r)
                for (size_t cc = 0; cc < A.genus(); ++cc)
                    REQUIRE(A.entries[r][cc] == (r == cc ? diag[r] : Integer(0)));
            REQUIRE(jacobian_order_mod_p_fast(ctx) == jacobian_order_mod_p(A));
        } catch (const NotDiagonal&) {
            bool off = false;
            for (size_t r = 0; r < A.genus(); ++r)
                for (size_t cc = 0; cc < A.genus(); ++cc)
                    if (r != cc && A.entries[r][cc] != 0) off = true;
            REQUIRE(off);
        }
    }
    REQUIRE(found == 40);
}

TEST_CASE("full count, frozen") {
    auto res = count_points_fast(parse_curve("a=2 m=[1,0,0,0,1] p=17"));
    CHECK(res.genus == 1);
    CHECK(res.trace == 2);
    CHECK(res.count == 16);
    // p below 16 g^2 leaves both lifts in range
    CHECK_THROWS_AS(count_points_fast(parse_curve("a=2 m=[1,0,0,0,1] p=13")), AmbiguousLift);

    // gcd(a, c) = 1 here, so the smooth-model oracle can confirm
    auto cubic = count_points_fast(parse_curve("a=2 m=[1,0,0,1] p=19"));
    CHECK(cubic.genus == 1);
    CHECK(cubic.trace == 8);
    CHECK(cubic.count == 12);
    CHECK(cubic.count == oracle::smooth_count(parse_curve("a=2 m=[1,0,0,1] p=19")));
}

TEST_CASE("genus zero counts p + 1") {
    auto res = count_points_fast(parse_curve("a=2 m=[1,0,1] p=13"));
    CHECK(res.genus == 0);
    CHECK(res.trace == 0);
    CHECK(res.count == 14);
}

TEST_CASE("96-bit showcase curve, frozen") {
    CurveSpec spec = parse_curve("a=4 b=8 m=[1,0,0,1] p=564819669946735512444543556507");
    auto ctx = make_trinomial_context(spec);
    CHECK(ctx.e == 6);
    CHECK(ctx.d == 2);
    CHECK(ctx.f % 2 == 1);
    CHECK(ctx.col1[3] == spec.p - 1502313464532976L);  // 2 a for p = a^2 + 3 b^2
    auto res = count_points_fast(spec);
    CHECK(res.genus == 3);
    CHECK(res.trace == Integer(-1502313464532976L));
    CHECK(res.count == from_decimal("564819669946737014758008089484"));
}

}  // TEST_SUITE
