#pragma once

#include "supercount/bigmod.hpp"

#include <vector>

namespace supercount {

// the frobenius trace t satisfies |t| <= 2 g sqrt(p); its residue mod p pins it
// down uniquely once p > 16 g^2. throws AmbiguousLift when both lifts fit the
// bound and NoCandidate when neither does
Integer lift_trace(const Integer& trace_mod_p, const Integer& p, long g);

// #C(F_p) = p + 1 - t
Integer count_from_trace(const Integer& t, const Integer& p);

struct CountResult {
    Integer trace;  // lifted integer trace
    Integer count;  // exact #C(F_p)
    long genus = 0;
};

// genus 2: candidates for the jacobian order from the lifted a1 and the
// residue of a2 = e_2(frobenius eigenvalues) mod p; the a2 window alone keeps
// the list at <= 5 entries and inside the weil interval
struct JacobianCandidatesG2 {
    Integer a1;
    Integer a2_lo, a2_hi;            // inclusive window for a2
    std::vector<Integer> a2_values;  // candidates, ascending
    std::vector<Integer> orders;     // matching jacobian orders
};
JacobianCandidatesG2 jacobian_candidates_g2(const Integer& a1, const Integer& a2_mod_p,
                                            const Integer& p);

// genus 3: arithmetic progression (residue mod p) clipped to the weil interval
// [(sqrt p - 1)^6, (sqrt p + 1)^6]; orders materialized only when few enough
struct JacobianCandidatesG3 {
    Integer lo, hi;       // weil interval, inclusive
    Integer first;        // smallest candidate, when total > 0
    Integer total;        // number of candidates (spacing p)
    std::vector<Integer> orders;  // filled iff total <= materialize_cap
};
JacobianCandidatesG3 jacobian_candidates_g3(const Integer& order_mod_p, const Integer& p,
                                            const Natural& materialize_cap = 10000);

}  // namespace supercount
