#pragma once

#include "supercount/bigmod.hpp"

#include <compare>
#include <string>
#include <vector>

namespace supercount {

// y^a = x^b * f(x), f = m[c] x^c + ... + m[0], over F_p
struct CurveSpec {
    Integer p = 0;  // 0 means "not set yet" (text form may omit it)
    long a = 0;
    long b = 0;
    std::vector<Integer> m;  // ascending, m[0] first

    long c() const { return static_cast<long>(m.size()) - 1; }
};

// text form: `a=4 b=8 c=3 m=[1,0,0,1] p=13`; b, c, p optional (b defaults to 0,
// c is inferred from m, p may be supplied separately); m is ascending, m0 first
CurveSpec parse_curve(const std::string& text);
std::string format_curve(const CurveSpec& spec);

struct ValidationIssue {
    std::string code;
    std::string detail;
};

// empty result means valid; every violated condition is reported separately
std::vector<ValidationIssue> validate(const CurveSpec& spec);
// throws PreconditionFailed listing the issue codes when invalid;
// returns a copy with coefficients reduced mod p
CurveSpec require_valid(const CurveSpec& spec);

struct LatticePoint {
    long i = 0;
    long j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

struct LatticeBasis {
    std::vector<LatticePoint> points;  // lexicographic (i, then j)
    size_t genus() const { return points.size(); }
    bool contains(const LatticePoint& q) const;
    // index in basis order; -1 when absent
    long index_of(const LatticePoint& q) const;
};

// interior lattice points of the Newton polygon with vertices (0,a), (b,0), (b+c,0)
LatticeBasis interior_lattice_points(long a, long b, long c);
LatticeBasis interior_lattice_points(const CurveSpec& spec);
long genus(const CurveSpec& spec);

struct ExponentPair {
    long j = 0;
    long u = 0;   // in [1, a]
    Integer v;    // in [0, p-1]
};

// unique (u, v) with j - 1 + (a-1)(p-1) = p(u-1) + a*v
ExponentPair exponent_pair(long j, long a, const Integer& p);

// (b*v_j + sum l*k_l + i) / p; throws NotDivisible when p does not divide it
Natural s_index(long i, long j, const std::vector<Natural>& k, const CurveSpec& spec);

// dense polynomials over F_p with big coefficients, ascending; shared by
// validation and small-degree utility work (not a performance path)
namespace zpoly {
using Poly = std::vector<Integer>;
Poly normalized(Poly f, const Integer& p);   // reduce coeffs, strip leading zeros
Poly derivative(const Poly& f, const Integer& p);
Poly gcd(Poly f, Poly g, const Integer& p);  // monic gcd, {} for gcd(0,0)
Poly divexact(const Poly& f, const Poly& g, const Integer& p);
long degree(const Poly& f);                  // -1 for zero polynomial
// f = lc * prod parts[i]^i with parts[i] monic squarefree (Yun); parts[0] unused
std::vector<Poly> squarefree_decomposition(const Poly& f, const Integer& p);
}  // namespace zpoly

// edge polynomials of the Newton polygon of y^a - x^b f(x), one per hull edge
std::vector<zpoly::Poly> side_polynomials(const CurveSpec& spec);

}  // namespace supercount
