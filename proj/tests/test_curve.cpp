#include "supercount/curve.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace supercount;

namespace {

// independent interior test: strictly inside the triangle (0,a),(b,0),(b+c,0)
std::vector<LatticePoint> brute_interior(long a, long b, long c) {
    std::vector<LatticePoint> pts;
    for (long i = 1; i < b + c; ++i)
        for (long j = 1; j < a; ++j) {
            bool below_slant = a * i + (b + c) * j < a * (b + c);
            bool right_of_left = b == 0 ? i > 0 : a * i + b * j > a * b;
            if (below_slant && right_of_left) pts.push_back({i, j});
        }
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool has_issue(const std::vector<ValidationIssue>& issues, const std::string& code) {
    for (auto& issue : issues)
        if (issue.code == code) return true;
    return false;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("parse round trip") {
    CurveSpec spec = parse_curve("a=4 b=8 c=3 m=[1,0,0,1] p=13");
    CHECK(spec.a == 4);
    CHECK(spec.b == 8);
    CHECK(spec.c() == 3);
    CHECK(spec.m == std::vector<Integer>{1, 0, 0, 1});
    CHECK(spec.p == 13);
    CHECK(format_curve(spec) == "a=4 b=8 c=3 m=[1,0,0,1] p=13");

    CurveSpec again = parse_curve(format_curve(spec));
    CHECK(again.a == spec.a);
    CHECK(again.b == spec.b);
    CHECK(again.m == spec.m);
    CHECK(again.p == spec.p);
}

TEST_CASE("parse defaults") {
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1]");
    CHECK(spec.b == 0);
    CHECK(spec.c() == 3);
    CHECK(spec.p == 0);  // to be supplied separately
    CHECK(format_curve(spec) == "a=2 b=0 c=3 m=[1,1,0,1]");
}

TEST_CASE("parse rejects") {
    CHECK_THROWS_AS(parse_curve("m=[1,1,1]"), ParseError);            // missing a
    CHECK_THROWS_AS(parse_curve("a=2"), ParseError);                  // missing m
    CHECK_THROWS_AS(parse_curve("a=2 a=3 m=[1,1,1]"), ParseError);    // duplicate
    CHECK_THROWS_AS(parse_curve("a=2 c=5 m=[1,1,1]"), ParseError);    // c mismatch
    CHECK_THROWS_AS(parse_curve("a=2 m=[1,1,1,]"), ParseError);       // trailing comma
    CHECK_THROWS_AS(parse_curve("a=2 m=1,1,1"), ParseError);          // no brackets
    CHECK_THROWS_AS(parse_curve("a=2 m=[]"), ParseError);             // empty m
    CHECK_THROWS_AS(parse_curve("a=2 m=[1,1,1] q=5"), ParseError);    // unknown key
    CHECK_THROWS_AS(parse_curve("a= m=[1,1,1]"), ParseError);         // empty value
    CHECK_THROWS_AS(parse_curve("a=2 bogus m=[1,1,1]"), ParseError);  // not key=value
}

TEST_CASE("validate accepts y^2 = x^3 + x + 1 over F_13") {
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1] p=13");
    CHECK(validate(spec).empty());
    CurveSpec reduced = require_valid(spec);
    CHECK(reduced.m == spec.m);
}

TEST_CASE("require_valid reduces coefficients") {
    CurveSpec spec = parse_curve("a=2 m=[14,1,0,1] p=13");
    CHECK(require_valid(spec).m == std::vector<Integer>{1, 1, 0, 1});
}

TEST_CASE("validate rejects") {
    // vanishing constant coefficient
    auto issues = validate(parse_curve("a=2 m=[13,1,0,1] p=13"));
    CHECK(has_issue(issues, "CoefficientZero"));

    // p below b + c
    issues = validate(parse_curve("a=4 b=8 m=[1,0,0,1] p=7"));
    CHECK(has_issue(issues, "PrimeTooSmall"));

    // p not prime, and p <= 3
    CHECK(has_issue(validate(parse_curve("a=2 m=[1,1,0,1] p=15")), "NotPrime"));
    CHECK(has_issue(validate(parse_curve("a=2 m=[1,1,0,1] p=3")), "NotPrime"));
    CHECK(has_issue(validate(parse_curve("a=2 m=[1,1,0,1]")), "NotPrime"));

    // shape: a < 2, deg f < 2
    CHECK(has_issue(validate(parse_curve("a=1 m=[1,1,0,1] p=13")), "BadShape"));
    CHECK(has_issue(validate(parse_curve("a=2 m=[1,1] p=13")), "BadShape"));

    // f = (x+1)^2 (x+2) has a repeated root; the bottom hull edge carries -f
    issues = validate(parse_curve("a=2 m=[2,5,4,1] p=13"));
    CHECK(has_issue(issues, "NotSquareFree"));
    CHECK(has_issue(issues, "SidePolynomialNotSquareFree"));

    // y^2 = (x^2+1)^2 splits; every multiplicity is even and mc is a square
    issues = validate(parse_curve("a=2 m=[1,0,2,0,1] p=13"));
    CHECK(has_issue(issues, "Reducible"));
    CHECK(has_issue(issues, "NotSquareFree"));

    // same f shifted by x: odd b blocks the even-power factorization
    issues = validate(parse_curve("a=2 b=1 m=[1,0,2,0,1] p=13"));
    CHECK(has_issue(issues, "NotSquareFree"));
    CHECK(!has_issue(issues, "Reducible"));

    CHECK_THROWS_AS(require_valid(parse_curve("a=2 m=[13,1,0,1] p=13")),
                    PreconditionFailed);
}

TEST_CASE("interior lattice points, frozen") {
    auto basis = interior_lattice_points(2, 0, 3);
    CHECK(basis.points == std::vector<LatticePoint>{{1, 1}});
    CHECK(basis.genus() == 1);

    basis = interior_lattice_points(2, 0, 5);
    CHECK(basis.points == std::vector<LatticePoint>{{1, 1}, {2, 1}});

    basis = interior_lattice_points(4, 8, 3);
    CHECK(basis.points == std::vector<LatticePoint>{{5, 2}, {7, 1}, {8, 1}});
    CHECK(basis.contains({7, 1}));
    CHECK(!basis.contains({6, 1}));
    CHECK(basis.index_of({5, 2}) == 0);
    CHECK(basis.index_of({8, 1}) == 2);
    CHECK(basis.index_of({1, 1}) == -1);

    CurveSpec spec = parse_curve("a=4 b=8 m=[1,0,0,1] p=101");
    CHECK(genus(spec) == 3);
}

TEST_CASE("interior lattice points against brute scan and pick's theorem") {
    std::mt19937_64 gen(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        long a = 2 + static_cast<long>(gen() % 11);
        long b = static_cast<long>(gen() % 13);
        long c = 2 + static_cast<long>(gen() % 9);
        auto basis = interior_lattice_points(a, b, c);
        auto brute = brute_interior(a, b, c);
        REQUIRE(basis.points == brute);

        // pick: 2*interior = 2*area - boundary + 2 for the hull triangle
        long boundary = b > 0 ? std::gcd(a, b) + c + std::gcd(a, b + c)
                              : a + c + std::gcd(a, c);
        CHECK(2 * static_cast<long>(basis.genus()) == a * c - boundary + 2);
    }
}

TEST_CASE("exponent pairs, frozen") {
    ExponentPair ep = exponent_pair(1, 2, 13);
    CHECK(ep.u == 1);
    CHECK(ep.v == 6);

    ep = exponent_pair(2, 4, 13);
    CHECK(ep.u == 2);
    CHECK(ep.v == 6);

    // j = a always lands on (u, v) = (a, 0)
    ep = exponent_pair(2, 2, 13);
    CHECK(ep.u == 2);
    CHECK(ep.v == 0);
    ep = exponent_pair(5, 5, 13);
    CHECK(ep.u == 5);
    CHECK(ep.v == 0);

    CHECK_THROWS_AS(exponent_pair(0, 2, 13), PreconditionFailed);
    CHECK_THROWS_AS(exponent_pair(3, 2, 13), PreconditionFailed);
    CHECK_THROWS_AS(exponent_pair(1, 13, 13), PreconditionFailed);
}

TEST_CASE("exponent pair identity and distinctness") {
    std::mt19937_64 gen(7);
    Integer p = 1;
    for (int trial = 0; trial < 100; ++trial) {
        long a = 2 + static_cast<long>(gen() % 19);
        p = next_prime_above(Integer(static_cast<unsigned long>(gen() % 100000 + a)));
        long j = 1 + static_cast<long>(gen() % a);
        ExponentPair ep = exponent_pair(j, a, p);
        CHECK(Integer(ep.u - 1) * p + Integer(a) * ep.v ==
              Integer(j - 1) + (p - 1) * (a - 1));
        CHECK(ep.u >= 1);
        CHECK(ep.u <= a);
        CHECK(ep.v >= 0);
        CHECK(ep.v < p);
    }

    // j -> u_j is a permutation of 1..a
    for (long a = 2; a <= 12; ++a)
        for (Integer q = 5; q < 1000; q = next_prime_above(q)) {
            if (std::gcd(a, to_long(q)) != 1) continue;
            std::set<long> seen;
            for (long j = 1; j <= a; ++j) seen.insert(exponent_pair(j, a, q).u);
            REQUIRE(seen.size() == static_cast<size_t>(a));
        }

    // when a | p - 1 the pair is (j, (p-1)(a-j)/a)
    for (long j = 1; j <= 4; ++j) {
        ExponentPair ep = exponent_pair(j, 4, 13);
        CHECK(ep.u == j);
        CHECK(ep.v == Integer(12 * (4 - j) / 4));
    }
}

TEST_CASE("s_index") {
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1] p=13");

    // v_1 = 6; k = (2,0,0,4) weights to 12, plus i = 1 gives 13
    CHECK(s_index(1, 1, {2, 0, 0, 4}, spec) == 1);

    // j = a has v = 0, so only the empty monomial; i must then be p*s itself
    CHECK(s_index(13, 2, {0, 0, 0, 0}, spec) == 1);

    // k = (2,2,1,1) weights to 7, plus i = 1 gives 8, not a multiple of 13
    CHECK_THROWS_AS(s_index(1, 1, {2, 2, 1, 1}, spec), NotDivisible);

    // k must sum to v_j
    CHECK_THROWS_AS(s_index(1, 1, {1, 0, 0, 4}, spec), PreconditionFailed);
}

TEST_CASE("side polynomials") {
    // b = 0: vertical edge 1 - m0 z^a, bottom edge -f, slant edge 1 - mc z
    CurveSpec spec = parse_curve("a=2 m=[1,1,0,1] p=13");
    auto sides = side_polynomials(spec);
    REQUIRE(sides.size() == 3);
    CHECK(sides[0] == zpoly::Poly{1, 0, 12});
    CHECK(sides[1] == zpoly::Poly{12, 12, 0, 12});
    CHECK(sides[2] == zpoly::Poly{1, 12});

    // b = 8: left edge 1 - m0 z^gcd(4,8), slant 1 - mc z^gcd(4,11)
    spec = parse_curve("a=4 b=8 m=[1,0,0,1] p=13");
    sides = side_polynomials(spec);
    REQUIRE(sides.size() == 3);
    CHECK(sides[0] == zpoly::Poly{1, 0, 0, 0, 12});
    CHECK(sides[1] == zpoly::Poly{12, 0, 0, 12});
    CHECK(sides[2] == zpoly::Poly{1, 12});
}

TEST_CASE("zpoly helpers") {
    Integer p = 13;
    using zpoly::Poly;

    Poly f = {8, 2, 12, 12, 8, 1};  // (x+1)^2 (x+2)^3 mod 13
    auto parts = zpoly::squarefree_decomposition(f, p);
    REQUIRE(parts.size() >= 4);
    CHECK(zpoly::degree(parts[1]) <= 0);
    CHECK(parts[2] == Poly{1, 1});
    CHECK(parts[3] == Poly{2, 1});

    CHECK(zpoly::gcd({12, 0, 1}, {1, 1}, p) == Poly{1, 1});  // x^2-1 vs x+1
    CHECK(zpoly::gcd({1, 1}, {}, p) == Poly{1, 1});
    CHECK(zpoly::degree(zpoly::gcd({1, 1}, {2, 2}, p)) == 1);

    CHECK(zpoly::divexact({12, 0, 1}, {1, 1}, p) == Poly{12, 1});
    CHECK_THROWS_AS(zpoly::divexact({1, 0, 1}, {1, 1}, p), PreconditionFailed);

    CHECK(zpoly::derivative({5, 3, 7}, p) == Poly{3, 1});
    CHECK(zpoly::normalized({14, 26, 0}, p) == Poly{1});
    CHECK(zpoly::degree({}) == -1);
}

}  // TEST_SUITE
