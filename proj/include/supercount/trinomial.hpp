#pragma once

#include "supercount/curve.hpp"
#include "supercount/lift.hpp"
#include "supercount/quadratic.hpp"

#include <string>

namespace supercount {

// closed-form binomial data for y^a = x^b (m0 + mc x^c) when
// e = gcd(a c, p - 1) lies in {3, 4, 6, 8} and gcd(d, f) = 1 for
// d = a c / e, f = (p - 1) / e
struct TrinomialContext {
    CurveSpec spec;  // validated, coefficients reduced
    long e = 0;
    long d = 0;
    Integer f;
    Integer m0, mc;
    std::vector<Integer> col1;  // col1[t] = binom(t f, f) mod p; index 0 unused
};

// quick shape test; fills reason on failure when given
bool trinomial_applicable(const CurveSpec& spec, std::string* reason = nullptr);

// throws NotTrinomial / BadGcd on shape failures, PreconditionFailed on an
// invalid curve
TrinomialContext make_trinomial_context(const CurveSpec& spec,
                                        const SqrtStrategy& strategy = SqrtStrategy::sequential());

// binom(t f, f) mod p for t = 1..e-1 from quadratic partitions of p alone;
// index 0 unused, size e
std::vector<Integer> rep_table(const Natural& p, long e,
                               const SqrtStrategy& strategy = SqrtStrategy::sequential());

// binom(r f, s f) mod p for 0 <= s <= r <= e - 1, telescoping through col1
Integer binom_ff(long r, long s, const std::vector<Integer>& col1, const Integer& p);
Integer binom_ff(long r, long s, const TrinomialContext& ctx);

// trace of the p-power operator mod p from the diagonal closed form
Integer trace_mod_p_fast(const TrinomialContext& ctx);

// every matrix entry via the closed form; NotDiagonal when a nonzero entry
// falls off the diagonal
std::vector<Integer> diagonal_fast(const TrinomialContext& ctx);
// jacobian order mod p: prod (1 - d_l) over the diagonal
Integer jacobian_order_mod_p_fast(const TrinomialContext& ctx);

// exact #C(F_p); AmbiguousLift when p <= 16 g^2 leaves two trace lifts
CountResult count_points_fast(const CurveSpec& spec,
                              const SqrtStrategy& strategy = SqrtStrategy::sequential());

}  // namespace supercount
