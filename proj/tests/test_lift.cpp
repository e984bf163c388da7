#include "supercount/lift.hpp"

#include "doctest.h"

#include <random>

using namespace supercount;

TEST_SUITE("lift") {

TEST_CASE("trace lift, frozen") {
    CHECK(lift_trace(Integer(11), Integer(13), 1) == -2);
    CHECK(lift_trace(Integer(2), Integer(17), 1) == 2);
    CHECK_THROWS_AS(lift_trace(Integer(7), Integer(13), 2), AmbiguousLift);
    CHECK_THROWS_AS(lift_trace(Integer(50), Integer(101), 1), NoCandidate);
    CHECK_THROWS_AS(lift_trace(Integer(0), Integer(13), 0), PreconditionFailed);
    CHECK(count_from_trace(Integer(-2), Integer(13)) == 16);
}

TEST_CASE("trace lift roundtrips whenever p > 16 g^2") {
    std::mt19937_64 gen(404);
    for (int trial = 0; trial < 300; ++trial) {
        long g = 1 + static_cast<long>(gen() % 3);
        Integer p = 16 * g * g + 1 + Integer(static_cast<unsigned long>(gen() % 5000));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        Integer cap = isqrt(4 * g * g * p).root;
        Integer t = Integer(static_cast<unsigned long>(gen()) % (2 * to_u64(cap) + 1)) - cap;
        REQUIRE(t * t <= 4 * g * g * p);
        REQUIRE(lift_trace(reduce(t, p), p, g) == t);
    }
}

TEST_CASE("genus-2 candidates, frozen") {
    auto cand = jacobian_candidates_g2(Integer(-2), Integer(26), Integer(101));
    CHECK(cand.a2_lo == -161);
    CHECK(cand.a2_hi == 203);
    CHECK(cand.a2_values == std::vector<Integer>{-75, 26, 127});
    CHECK(cand.orders == std::vector<Integer>{10331, 10432, 10533});

    auto small = jacobian_candidates_g2(Integer(-1), Integer(4), Integer(13));
    CHECK(small.a2_lo == -18);
    CHECK(small.a2_hi == 26);
    CHECK(small.orders == std::vector<Integer>{175, 188, 201});
}

TEST_CASE("genus-2 candidates stay few and inside the weil interval") {
    std::mt19937_64 gen(77);
    for (int trial = 0; trial < 200; ++trial) {
        Integer p = Integer(64 + static_cast<unsigned long>(gen() % 400));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        Integer a1cap = isqrt(4 * p).root;
        Integer a1 = Integer(static_cast<unsigned long>(gen()) % (2 * to_u64(a1cap) + 1)) - a1cap;
        Integer a2_mod = Integer(static_cast<unsigned long>(gen()) % to_u64(p));
        auto cand = jacobian_candidates_g2(a1, a2_mod, p);
        REQUIRE(cand.orders.size() == cand.a2_values.size());
        REQUIRE(cand.a2_values.size() <= 5);
        Integer center = p * p + 6 * p + 1;
        Integer radius = isqrt((4 * p + 4) * (4 * p + 4) * p).root;
        for (size_t idx = 0; idx < cand.orders.size(); ++idx) {
            REQUIRE(reduce(cand.a2_values[idx], p) == a2_mod);
            REQUIRE(cand.a2_values[idx] >= cand.a2_lo);
            REQUIRE(cand.a2_values[idx] <= cand.a2_hi);
            REQUIRE(cand.orders[idx] == 1 - a1 * (1 + p) + cand.a2_values[idx] + p * p);
            REQUIRE(cand.orders[idx] >= center - radius);
            REQUIRE(cand.orders[idx] <= center + radius);
        }
    }
}

TEST_CASE("genus-3 progression, frozen") {
    auto wide = jacobian_candidates_g3(Integer(123), Integer(1009));
    CHECK(wide.lo == 847854283);
    CHECK(wide.hi == 1237205877);
    CHECK(wide.first == 847854751);
    CHECK(wide.total == 385879);
    CHECK(wide.orders.empty());  // far past the materialize cap

    auto narrow = jacobian_candidates_g3(Integer(5), Integer(37));
    CHECK(narrow.lo == 17243);
    CHECK(narrow.hi == 126245);
    CHECK(narrow.first == 17247);
    CHECK(narrow.total == 2946);
    REQUIRE(narrow.orders.size() == 2946);
    CHECK(narrow.orders.front() == 17247);
    CHECK(narrow.orders.back() == narrow.first + (narrow.total - 1) * 37);

    auto capped = jacobian_candidates_g3(Integer(5), Integer(37), Natural(100));
    CHECK(capped.total == 2946);
    CHECK(capped.orders.empty());
}

TEST_CASE("genus-3 progression properties") {
    std::mt19937_64 gen(9001);
    for (int trial = 0; trial < 50; ++trial) {
        Integer p = Integer(5 + static_cast<unsigned long>(gen() % 200));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        Integer jmod = Integer(static_cast<unsigned long>(gen()) % to_u64(p));
        auto cand = jacobian_candidates_g3(jmod, p, Natural(1000000));
        REQUIRE(cand.total >= 1);
        REQUIRE(reduce(cand.first, p) == jmod);
        REQUIRE(cand.first >= cand.lo);
        REQUIRE(cand.first - p < cand.lo);
        REQUIRE(cand.total == (cand.hi - cand.first) / p + 1);
        REQUIRE(cand.orders.size() == cand.total);
        for (size_t idx = 1; idx < cand.orders.size(); ++idx)
            REQUIRE(cand.orders[idx] - cand.orders[idx - 1] == p);
        REQUIRE(cand.orders.back() <= cand.hi);
        REQUIRE(cand.orders.back() + p > cand.hi);
    }
}

}  // TEST_SUITE
