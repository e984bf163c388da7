#include "supercount/recurrence.hpp"

#include "supercount/oracle.hpp"

#include "doctest.h"

#include <random>
#include <vector>

using namespace supercount;

namespace {

// the factorial recurrence in one dimension: B(k) = k
RecurrenceMatrix factorial_rec() {
    RecurrenceMatrix B;
    B.c = 1;
    B.v = 0;
    B.entries = {{LinearPoly{0, 1}}};
    return B;
}

IntMatrix matmul_mod(const IntMatrix& A, const IntMatrix& B, const Integer& m) {
    size_t n = A.size();
    IntMatrix out(n, std::vector<Integer>(n, Integer(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                out[i][j] = addm(out[i][j], mulm(A[i][k], B[k][j], m), m);
    return out;
}

}  // namespace

TEST_SUITE("recurrence") {

TEST_CASE("factorial products, frozen") {
    auto B = factorial_rec();
    CHECK(matrix_factorial_naive(B, 1, 10, 13) == IntMatrix{{6}});    // 10! mod 13
    CHECK(matrix_factorial_bsgs(B, 1, 12, 169) == IntMatrix{{168}});  // 12! mod 13^2
    // long enough to leave the naive fallback; value pinned by wilson:
    // 1008! = -1, 1001...1008 = 8!, so 1000! = -inv(8!) mod 1009
    CHECK(matrix_factorial_bsgs(B, 1, 1000, 1009) == IntMatrix{{782}});
    CHECK(matrix_factorial_naive(B, 1, 1000, 1009) == IntMatrix{{782}});
    // empty range is the identity
    CHECK(matrix_factorial_naive(B, 5, 4, 13) == IntMatrix{{1}});
    CHECK(matrix_factorial_bsgs(B, 5, 4, 13) == IntMatrix{{1}});
}

TEST_CASE("window recurrence reproduces a tiny power, frozen") {
    // f = x^2 + 1, v = 1: V_k = m0^k k! [f_{k-1}, f_k]
    CurveSpec spec = parse_curve("a=2 m=[1,0,1] p=13");
    auto B = build_recurrence(spec, 1);
    REQUIRE(B.c == 2);
    CHECK(B.entries[0][1].c0 == 0);
    CHECK(B.entries[0][1].c1 == 1);
    CHECK(B.entries[1][0].c0 == 4);  // m2 * 2 * (v+1)
    CHECK(B.entries[1][0].c1 == -1);
    CHECK(B.entries[1][1].c0 == 0);
    CHECK(B.entries[1][1].c1 == 0);
    // B(2) B(1) applied to U0 = [0, 1] gives V_2 = 2! [f_1, f_2] = [0, 2]
    CHECK(matrix_factorial_naive(B, 1, 2, 13) == IntMatrix{{6, 0}, {0, 2}});
    // the bottom row vanishes at k = l (v+1) = 4
    CHECK(matrix_factorial_naive(B, 4, 4, 13) == IntMatrix{{0, 4}, {0, 0}});
}

TEST_CASE("build_recurrence rejects degenerate input") {
    CHECK_THROWS_AS(build_recurrence(parse_curve("a=2 m=[13,0,1] p=13"), 1),
                    PreconditionFailed);  // m0 = 0 mod p
    CurveSpec constant = parse_curve("a=2 m=[1] p=13");
    CHECK_THROWS_AS(build_recurrence(constant, 1), PreconditionFailed);
    CHECK_THROWS_AS(build_recurrence(parse_curve("a=2 m=[1,0,1] p=13"), -1),
                    PreconditionFailed);
}

TEST_CASE("bsgs product equals the naive product across rings") {
    std::mt19937_64 gen(20260815);
    std::vector<Integer> moduli = {
        Integer(101),                                // montgomery
        Integer(101) * 101,                          // prime square, montgomery
        Integer(1) << 20,                            // even, mpz path
        next_prime_above(Integer(1) << 70),          // wide, mpz path
    };
    for (int trial = 0; trial < 60; ++trial) {
        CurveSpec spec;
        spec.a = 2;
        spec.p = 1000003;  // only used to reduce the coefficients
        long c = 1 + static_cast<long>(gen() % 4);
        for (long l = 0; l <= c; ++l) spec.m.push_back(Integer(1 + gen() % 97));
        Integer v(gen() % 30);
        auto B = build_recurrence(spec, v);
        const Integer& modulus = moduli[trial % moduli.size()];
        Integer lo(gen() % 500);
        Integer hi = lo + 129 + Integer(gen() % 900);  // always past the naive cutoff
        auto slow = matrix_factorial_naive(B, lo, hi, modulus);
        auto fast = matrix_factorial_bsgs(B, lo, hi, modulus);
        REQUIRE(slow == fast);
        // splitting anywhere must not change the product
        Integer mid = lo + Integer(gen() % to_u64(hi - lo));
        auto left = matrix_factorial_bsgs(B, lo, mid, modulus);
        auto right = matrix_factorial_bsgs(B, mid + 1, hi, modulus);
        REQUIRE(matmul_mod(right, left, modulus) == fast);
    }
}

TEST_CASE("bsgs segment cap") {
    auto B = factorial_rec();
    CHECK_THROWS_AS(matrix_factorial_bsgs(B, 0, Integer(1) << 63, 13), CapExceeded);
}

TEST_CASE("coefficient chain, frozen") {
    // (x^3 + x + 1)^6 over F_13; k = 13 crosses the factorial's p-divisibility
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1] p=13");
    auto got = coefficients_at(spec, 6, {0, 12, 13, 18});
    REQUIRE(got.size() == 4);
    CHECK(got.at(0) == 1);
    CHECK(got.at(12) == 9);  // integer coefficient 35
    CHECK(got.at(13) == 4);  // integer coefficient 30
    CHECK(got.at(18) == 1);
    for (auto& [t, value] : got)
        CHECK(value == oracle::power_coefficient(spec.m, 6, t, spec.p));
}

TEST_CASE("coefficient chain rejects bad input") {
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1] p=13");
    CHECK_THROWS_AS(coefficients_at(spec, 6, {19}), TargetOutOfSupport);
    CHECK_THROWS_AS(coefficients_at(spec, 6, {-1}), TargetOutOfSupport);
    CHECK_THROWS_AS(coefficients_at(spec, 13, {0}), PreconditionFailed);  // v >= p
    CHECK_THROWS_AS(coefficients_at(parse_curve("a=2 m=[1,1,0,1] p=4"), 2, {0}),
                    PreconditionFailed);
    CHECK_THROWS_AS(coefficients_at(parse_curve("a=2 m=[13,1,0,1] p=13"), 6, {0}),
                    PreconditionFailed);
}

TEST_CASE("coefficient chain agrees with direct powering") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        CurveSpec spec;
        spec.a = 2;
        spec.p = Integer(5 + static_cast<unsigned long>(gen() % 995));
        mpz_nextprime(spec.p.get_mpz_t(), spec.p.get_mpz_t());
        long c = 1 + static_cast<long>(gen() % 4);
        spec.m.push_back(Integer(1 + gen() % (to_u64(spec.p) - 1)));
        for (long l = 1; l <= c; ++l)
            spec.m.push_back(Integer(static_cast<unsigned long>(gen()) % to_u64(spec.p)));
        Integer v(gen() % std::min<unsigned long>(to_u64(spec.p) - 1, 41));
        Integer support = Integer(c) * v;
        std::vector<Natural> targets;
        for (int pick = 0; pick < 4; ++pick)
            targets.push_back(Integer(gen() % (to_u64(support) + 1)));
        if (support > spec.p) targets.push_back(spec.p + 1);  // straddle the boundary
        auto got = coefficients_at(spec, v, targets);
        for (auto& [t, value] : got)
            REQUIRE(value == oracle::power_coefficient(spec.m, v, t, spec.p));
    }
}

TEST_CASE("matrix via the recurrence, frozen") {
    auto A = hw_matrix_bgs(parse_curve("a=2 m=[1,1,0,1] p=13"));
    REQUIRE(A.genus() == 1);
    CHECK(A.basis.points == std::vector<LatticePoint>{{1, 1}});
    CHECK(A.entries == IntMatrix{{9}});
}

TEST_CASE("recurrence fill equals the direct fill across random curves") {
    std::mt19937_64 gen(11);
    int checked = 0;
    while (checked < 60) {
        CurveSpec spec;
        spec.a = 2 + static_cast<long>(gen() % 5);
        spec.b = static_cast<long>(gen() % 7);
        long c = 2 + static_cast<long>(gen() % 4);
        spec.p = Integer(static_cast<unsigned long>(spec.a + spec.b + c) +
                         static_cast<unsigned long>(gen() % 800));
        mpz_nextprime(spec.p.get_mpz_t(), spec.p.get_mpz_t());
        for (long l = 0; l <= c; ++l)
            spec.m.push_back(Integer(static_cast<unsigned long>(gen()) % to_u64(spec.p)));
        if (!validate(spec).empty()) continue;
        auto direct = hw_matrix_direct(spec);
        auto bgs = hw_matrix_bgs(spec);
        REQUIRE(bgs.basis.points == direct.basis.points);
        REQUIRE(bgs.entries == direct.entries);
        ++checked;
    }
}

TEST_CASE("recurrence fill beyond the direct comfort zone") {
    // p ~ 1e5 would make the direct powering crawl; check the count mod p
    // against the brute-force oracle instead
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1] p=104729");
    auto A = hw_matrix_bgs(spec);
    REQUIRE(A.genus() == 1);
    CHECK(count_mod_p(A) == reduce(oracle::smooth_count(spec), spec.p));
}

}  // TEST_SUITE
