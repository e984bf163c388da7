#include "supercount/lift.hpp"

namespace supercount {

Integer lift_trace(const Integer& trace_mod_p, const Integer& p, long g) {
    if (g < 1) throw PreconditionFailed("lift needs genus >= 1");
    Integer bound = Integer(4) * g * g * p;  // t^2 <= 4 g^2 p
    Integer r = reduce(trace_mod_p, p);
    bool low_fits = r * r <= bound;
    Integer shifted = r - p;
    bool high_fits = shifted * shifted <= bound;
    if (low_fits && high_fits)
        throw AmbiguousLift("both " + to_decimal(r) + " and " + to_decimal(shifted) +
                            " satisfy the weil bound (p <= 16 g^2)");
    if (!low_fits && !high_fits)
        throw NoCandidate("no lift of " + to_decimal(r) + " satisfies the weil bound");
    return low_fits ? r : shifted;
}

Integer count_from_trace(const Integer& t, const Integer& p) {
    return p + 1 - t;
}

JacobianCandidatesG2 jacobian_candidates_g2(const Integer& a1, const Integer& a2_mod_p,
                                            const Integer& p) {
    JacobianCandidatesG2 out;
    out.a1 = a1;
    // 2|a1| sqrt(p) - 2p <= a2 <= a1^2/4 + 2p
    Integer four_a1sq_p = 4 * a1 * a1 * p;
    IsqrtResult root = isqrt(four_a1sq_p);
    out.a2_lo = root.root + (root.exact ? 0 : 1) - 2 * p;  // ceil(2|a1| sqrt p) - 2p
    out.a2_hi = (a1 * a1 + 8 * p) / 4;                     // floor
    Integer a2 = out.a2_lo + reduce(a2_mod_p - out.a2_lo, p);
    for (; a2 <= out.a2_hi; a2 += p) {
        out.a2_values.push_back(a2);
        out.orders.push_back(1 - a1 * (1 + p) + a2 + p * p);
    }
    return out;
}

JacobianCandidatesG3 jacobian_candidates_g3(const Integer& order_mod_p, const Integer& p,
                                            const Natural& materialize_cap) {
    JacobianCandidatesG3 out;
    // (sqrt p -+ 1)^6 = A -+ B sqrt p with A = p^3 + 15 p^2 + 15 p + 1 and
    // B = 6 p^2 + 20 p + 6; sqrt p is irrational, so the rounded endpoints are
    // A -+ floor(B sqrt p) shifted to the integer side
    Integer A = ((p + 15) * p + 15) * p + 1;
    Integer B = (6 * p + 20) * p + 6;
    Integer floor_bsqrt = isqrt(B * B * p).root;
    out.lo = A - floor_bsqrt;  // ceil(A - B sqrt p)
    out.hi = A + floor_bsqrt;  // floor(A + B sqrt p)
    Integer first = out.lo + reduce(order_mod_p - out.lo, p);
    if (first > out.hi) {
        out.total = 0;
        return out;
    }
    out.first = first;
    out.total = (out.hi - first) / p + 1;
    if (out.total <= materialize_cap)
        for (Integer n = first; n <= out.hi; n += p) out.orders.push_back(n);
    return out;
}

}  // namespace supercount
