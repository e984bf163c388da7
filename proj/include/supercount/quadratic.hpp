#pragma once

#include "supercount/bigmod.hpp"

#include <optional>

namespace supercount {

// nonresidue search policy for tonelli-shanks
struct SqrtStrategy {
    enum class Kind { sequential_search, probabilistic, external };
    Kind kind = Kind::sequential_search;
    std::uint64_t seed = 0;
    Integer external_value = 0;

    static SqrtStrategy sequential() { return {}; }
    static SqrtStrategy probabilistic(std::uint64_t seed) {
        SqrtStrategy s;
        s.kind = Kind::probabilistic;
        s.seed = seed;
        return s;
    }
    static SqrtStrategy external(Integer nonresidue) {
        SqrtStrategy s;
        s.kind = Kind::external;
        s.external_value = std::move(nonresidue);
        return s;
    }
};

// euler criterion: +1 residue, -1 nonresidue, 0 when p | a
int legendre(const Integer& a, const Integer& p);

// a nonresidue mod p; sequential scans 2,3,5,7,...; probabilistic is seeded;
// external verifies the supplied value
Integer find_nonresidue(const Integer& p, const SqrtStrategy& strategy = SqrtStrategy::sequential());

// canonical square root r with r <= p - r; throws NonResidue
Integer sqrt_mod(const Integer& a, const Integer& p,
                 const SqrtStrategy& strategy = SqrtStrategy::sequential());

struct CornacchiaSolution {
    Natural x;
    Natural y;
};

// primitive solution of x^2 + d*y^2 = m from a root of -d mod m; nullopt when
// the descent check fails; throws PreconditionFailed when root^2 != -d mod m
std::optional<CornacchiaSolution> cornacchia(const Integer& d, const Natural& m,
                                             const Integer& root);

struct PrimeDecomposition {
    int e = 0;           // 3, 4, 6 or 8
    int d = 0;           // 1 for e=4, 3 for e=3,6, 2 for e=8
    Integer a;           // signed, normalized: a ≡ 1 mod 3 (d=3) or mod 4 (d=1,2)
    Natural b;           // nonnegative companion; both signs are valid
    Natural p;
};

// p = a^2 + d*b^2 with the sign of a normalized; throws PreconditionFailed
// unless p ≡ 1 (mod e)
PrimeDecomposition decompose_prime(const Natural& p, int e,
                                   const SqrtStrategy& strategy = SqrtStrategy::sequential());

}  // namespace supercount
