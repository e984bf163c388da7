#pragma once

#include "supercount/curve.hpp"
#include "supercount/hw_direct.hpp"

#include <map>
#include <vector>

namespace supercount {

// degree-<=1 polynomial in the step index k
struct LinearPoly {
    Integer c0;  // constant term
    Integer c1;  // coefficient of k
};

// symbolic step matrix B(k) of the coefficient recurrence for f(x)^v:
// with V_k = m0^k k! U_k and U_k the window [f_{k-c+1,v}, ..., f_{k,v}],
// V_k = B(k) V_{k-1}. top block is m0*k times the shifted identity; bottom row
// entry for lag l (from the right, l = 1..c) is m_l (l v - (k - l))
struct RecurrenceMatrix {
    long c = 0;  // window length = deg f
    Integer v;
    std::vector<std::vector<LinearPoly>> entries;  // c x c
};

// the recurrence follows from f * (f^v)' = v f' * f^v; needs m0 nonzero mod p
RecurrenceMatrix build_recurrence(const CurveSpec& spec, const Integer& v);

using IntMatrix = std::vector<std::vector<Integer>>;

// B(k_hi) B(k_hi - 1) ... B(k_lo) mod modulus by sequential multiplication;
// empty range (k_lo > k_hi) gives the identity. the correctness baseline
IntMatrix matrix_factorial_naive(const RecurrenceMatrix& B, const Integer& k_lo,
                                 const Integer& k_hi, const Integer& modulus);

// same product in O(sqrt(L)) ring products: baby-step product tree for
// M(x) = B(x+s)...B(x+1), giant-step subproduct-tree multipoint evaluation,
// naive tail. equals matrix_factorial_naive on every range
IntMatrix matrix_factorial_bsgs(const RecurrenceMatrix& B, const Integer& k_lo,
                                const Integer& k_hi, const Integer& modulus);

// coefficients of f(x)^v mod p at the requested indices, via the segmented
// recurrence over Z/p^m with m = 1 + floor(k_max/p): segments run between
// multiples of p, each boundary B(tp) is applied explicitly, and each
// checkpoint k divides V_k by p^{floor(k/p)} and the unit part of m0^k k!
// (the unit's skip product reuses the same engine on the 1x1 recurrence).
// requires 0 <= v < p and c*v < p^2; targets outside [0, c*v] throw
std::map<Natural, Integer> coefficients_at(const CurveSpec& spec, const Integer& v,
                                           const std::vector<Natural>& targets);

// same output contract as hw_matrix_direct (including the landing check),
// built from coefficients_at instead of a full polynomial power
HasseWittMatrix hw_matrix_bgs(const CurveSpec& spec);

}  // namespace supercount
