#include "supercount/quadratic.hpp"

#include <random>

namespace supercount {

int legendre(const Integer& a, const Integer& p) {
    Integer r = reduce(a, p);
    if (r == 0) return 0;
    Integer e = powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

Integer find_nonresidue(const Integer& p, const SqrtStrategy& strategy) {
    switch (strategy.kind) {
        case SqrtStrategy::Kind::external: {
            if (legendre(strategy.external_value, p) != -1)
                throw PreconditionFailed("external value is not a nonresidue mod " +
                                         to_decimal(p));
            return reduce(strategy.external_value, p);
        }
        case SqrtStrategy::Kind::probabilistic: {
            std::mt19937_64 gen(strategy.seed);
            // p may exceed 64 bits; stitch draws into a uniform residue
            size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
            for (;;) {
                Integer cand = 0;
                for (size_t got = 0; got < bits + 64; got += 64) {
                    cand <<= 64;
                    cand += Integer(static_cast<unsigned long>(gen()));
                }
                cand = reduce(cand, p);
                if (legendre(cand, p) == -1) return cand;
            }
        }
        case SqrtStrategy::Kind::sequential_search:
        default: {
            for (Integer n = 2;; n = n + 1) {
                if (n >= p) throw PreconditionFailed("no nonresidue below p; p not an odd prime?");
                if (legendre(n, p) == -1) return n;
            }
        }
    }
}

Integer sqrt_mod(const Integer& a, const Integer& p, const SqrtStrategy& strategy) {
    Integer r = reduce(a, p);
    if (r == 0) return 0;
    int chi = legendre(r, p);
    if (chi != 1) throw NonResidue(to_decimal(r) + " mod " + to_decimal(p));
    Integer root;
    if (reduce(p, 4) == 3) {
        root = powm(r, (p + 1) / 4, p);
    } else {
        // tonelli-shanks
        Integer q = p - 1;
        unsigned long s = 0;
        while (reduce(q, 2) == 0) {
            q /= 2;
            ++s;
        }
        Integer z = find_nonresidue(p, strategy);
        Integer m = s;
        Integer c = powm(z, q, p);
        Integer t = powm(r, q, p);
        root = powm(r, (q + 1) / 2, p);
        while (t != 1) {
            Integer tt = t;
            Integer i = 0;
            while (tt != 1) {
                tt = mulm(tt, tt, p);
                i = i + 1;
                if (i == m) throw PreconditionFailed("tonelli-shanks loop: p not prime?");
            }
            Integer b = c;
            for (Integer k = 0; k < m - i - 1; k = k + 1) b = mulm(b, b, p);
            m = i;
            c = mulm(b, b, p);
            t = mulm(t, c, p);
            root = mulm(root, b, p);
        }
    }
    Integer other = p - root;
    return root <= other ? root : other;
}

std::optional<CornacchiaSolution> cornacchia(const Integer& d, const Natural& m,
                                             const Integer& root) {
    if (d <= 0 || d >= m) throw PreconditionFailed("need 0 < d < m");
    Integer r = reduce(root, m);
    if (reduce(r * r + d, m) != 0)
        throw PreconditionFailed("root^2 != -d mod m");
    Integer other = m - r;
    Integer r1 = r <= other ? r : other;
    Integer r0 = m;
    while (r1 * r1 >= m) {
        Integer rem = reduce(r0, r1);
        r0 = r1;
        r1 = rem;
    }
    // first remainder below sqrt(m)
    Integer x = r1;
    if (x == 0) return std::nullopt;
    Integer rem = m - x * x;
    if (rem % d != 0) return std::nullopt;
    Integer y2 = rem / d;
    auto [y, exact] = isqrt(y2);
    if (!exact || y == 0) return std::nullopt;
    return CornacchiaSolution{x, y};
}

PrimeDecomposition decompose_prime(const Natural& p, int e, const SqrtStrategy& strategy) {
    if (e != 3 && e != 4 && e != 6 && e != 8)
        throw PreconditionFailed("e must be one of 3, 4, 6, 8");
    if (reduce(p - 1, e) != 0)
        throw PreconditionFailed("p != 1 mod " + std::to_string(e));
    int d = (e == 4) ? 1 : (e == 8) ? 2 : 3;
    Integer root = sqrt_mod(reduce(Integer(-d), p), p, strategy);
    auto sol = cornacchia(d, p, root);
    if (!sol)
        throw PreconditionFailed("no representation p = x^2 + " + std::to_string(d) +
                                 "y^2; p not prime?");
    Integer x = sol->x;
    Integer y = sol->y;
    PrimeDecomposition out;
    out.e = e;
    out.d = d;
    out.p = p;
    if (d == 3) {
        // 3 does not divide x since x^2 ≡ p ≡ 1 (mod 3)
        out.a = (reduce(x, 3) == 1) ? x : -x;
        out.b = y;
    } else if (d == 1) {
        // exactly one of x, y is odd; that one is the normalized part
        if (reduce(x, 2) == 0) std::swap(x, y);
        out.a = (reduce(x, 4) == 1) ? x : -x;
        out.b = y;
    } else {
        // d = 2: x is odd automatically
        out.a = (reduce(x, 4) == 1) ? x : -x;
        out.b = y;
    }
    return out;
}

}  // namespace supercount
