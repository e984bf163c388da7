#pragma once

#include "supercount/curve.hpp"

namespace supercount::oracle {

// brute-force reference counts; independent of the matrix machinery on purpose.
// every routine walks the field (or its quadratic extension) element by element
// and is guarded by caps().oracle.

// number of affine points of y^a = x^b f(x) over F_p
Integer affine_count(const CurveSpec& spec);

// affine count plus the single point at infinity of the smooth model; needs
// b = 0, gcd(a, c) = 1 and a valid curve, else Unsupported
Integer smooth_count(const CurveSpec& spec);

// the same two counts over F_{p^2}
Integer affine_count_ext(const CurveSpec& spec);
Integer smooth_count_ext(const CurveSpec& spec);

// order of the genus-2 jacobian from the counts over F_p and F_{p^2}
Integer jacobian_order_g2(const CurveSpec& spec);

// binomial coefficient mod a prime: product formula below p, lucas digits above
Integer binomial_mod(const Natural& n, const Natural& k, const Integer& p);

// v! / (k_0! ... k_c!) mod p as a telescoping product of binomials
Integer multinomial_mod(const Natural& v, const std::vector<Natural>& k, const Integer& p);

// coefficient of x^t in f(x)^v mod p by direct powering; guarded by caps().direct
Integer power_coefficient(const std::vector<Integer>& f, const Natural& v,
                          const Natural& t, const Integer& p);

}  // namespace supercount::oracle
