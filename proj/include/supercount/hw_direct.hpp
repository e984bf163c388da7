#pragma once

#include "supercount/curve.hpp"

namespace supercount {

// matrix of the p-power operator on the interior-monomial basis, mod p.
// entries[row][col]: column indexed by the source point (i, j), row by the
// image point; column (i, j) can only hit rows whose second coordinate is u_j
struct HasseWittMatrix {
    Integer p;
    LatticeBasis basis;
    std::vector<std::vector<Integer>> entries;
    size_t genus() const { return basis.genus(); }
};

// fill by powering f directly (u64 engine); guarded by caps().direct. every
// nonzero coefficient must land on an interior point, else PreconditionFailed
HasseWittMatrix hw_matrix_direct(const CurveSpec& spec);

Integer trace(const HasseWittMatrix& A);
// #C(F_p) mod p = 1 - trace, reduced into [0, p)
Integer count_mod_p(const HasseWittMatrix& A);

// det(tI - A) mod p, ascending, monic, length g + 1; hessenberg reduction
std::vector<Integer> charpoly_mod(const HasseWittMatrix& A);
// frobenius characteristic polynomial mod p: t^g * det(tI - A), length 2g + 1
std::vector<Integer> frobenius_charpoly_mod(const HasseWittMatrix& A);
// jacobian order mod p: the frobenius charpoly at t = 1, i.e. det(I - A)
Integer jacobian_order_mod_p(const HasseWittMatrix& A);

}  // namespace supercount
