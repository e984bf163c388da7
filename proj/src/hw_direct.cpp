#include "supercount/hw_direct.hpp"

#include "supercount/caps.hpp"
#include "supercount/polymod.hpp"

#include <map>

namespace supercount {

HasseWittMatrix hw_matrix_direct(const CurveSpec& spec) {
    CurveSpec valid = require_valid(spec);
    if (valid.p > caps().direct)
        throw CapExceeded("direct matrix fill above the direct cap");
    const Integer& p = valid.p;
    const long a = valid.a, b = valid.b, c = valid.c();
    const polymod::u64 pp = to_u64(p);

    HasseWittMatrix out;
    out.p = p;
    out.basis = interior_lattice_points(valid);
    size_t g = out.basis.genus();
    out.entries.assign(g, std::vector<Integer>(g, Integer(0)));

    std::map<long, std::vector<polymod::u64>> powers;  // j -> f^{v_j}
    auto fp = polymod::from_big(valid.m, pp);
    for (size_t col = 0; col < g; ++col) {
        const auto& q = out.basis.points[col];
        ExponentPair ep = exponent_pair(q.j, a, p);
        auto [it, fresh] = powers.try_emplace(q.j);
        if (fresh) it->second = polymod::pow(fp, to_u64(ep.v), pp);
        const auto& fv = it->second;

        // rows s with 0 <= p s - i - b v <= c v; s stays below b + c + 1
        Integer bv = Integer(b) * ep.v;
        for (Integer s = 1; s * p <= Integer(c) * ep.v + q.i + bv; ++s) {
            Integer t = s * p - q.i - bv;
            if (t < 0) continue;
            polymod::u64 coef = polymod::coeff(fv, to_u64(t));
            if (coef == 0) continue;
            long row = out.basis.index_of({to_long(s), ep.u});
            if (row < 0)
                throw PreconditionFailed("nonzero coefficient lands outside the basis at (" +
                                         to_decimal(s) + ", " + std::to_string(ep.u) + ")");
            out.entries[row][col] = coef;
        }
    }
    return out;
}

Integer trace(const HasseWittMatrix& A) {
    Integer t = 0;
    for (size_t l = 0; l < A.genus(); ++l) t = addm(t, A.entries[l][l], A.p);
    return t;
}

Integer count_mod_p(const HasseWittMatrix& A) {
    return subm(1, trace(A), A.p);
}

std::vector<Integer> charpoly_mod(const HasseWittMatrix& A) {
    const Integer& p = A.p;
    const size_t n = A.genus();
    auto H = A.entries;

    // similarity reduction to upper hessenberg form
    for (size_t m = 1; m + 1 < n; ++m) {
        size_t pivot = m;
        while (pivot < n && H[pivot][m - 1] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != m) {
            std::swap(H[pivot], H[m]);
            for (size_t r = 0; r < n; ++r) std::swap(H[r][pivot], H[r][m]);
        }
        Integer inv = invm(H[m][m - 1], p);
        for (size_t r = m + 1; r < n; ++r) {
            if (H[r][m - 1] == 0) continue;
            Integer factor = mulm(H[r][m - 1], inv, p);
            for (size_t col = 0; col < n; ++col)
                H[r][col] = subm(H[r][col], mulm(factor, H[m][col], p), p);
            for (size_t row = 0; row < n; ++row)
                H[row][m] = addm(H[row][m], mulm(factor, H[row][r], p), p);
        }
    }

    // charpoly of a hessenberg matrix by the leading-minor recurrence
    std::vector<std::vector<Integer>> minor(n + 1);
    minor[0] = {1};
    for (size_t m = 1; m <= n; ++m) {
        auto& out = minor[m];
        out.assign(m + 1, Integer(0));
        // (t - H[m-1][m-1]) * minor[m-1]
        const auto& prev = minor[m - 1];
        for (size_t l = 0; l < prev.size(); ++l) {
            out[l + 1] = addm(out[l + 1], prev[l], p);
            out[l] = subm(out[l], mulm(H[m - 1][m - 1], prev[l], p), p);
        }
        Integer subdiag = 1;
        for (size_t i = m - 1; i >= 1; --i) {
            subdiag = mulm(subdiag, H[i][i - 1], p);
            Integer factor = mulm(subdiag, H[i - 1][m - 1], p);
            if (factor == 0) continue;
            const auto& low = minor[i - 1];
            for (size_t l = 0; l < low.size(); ++l)
                out[l] = subm(out[l], mulm(factor, low[l], p), p);
        }
    }
    return minor[n];
}

std::vector<Integer> frobenius_charpoly_mod(const HasseWittMatrix& A) {
    auto chi = charpoly_mod(A);
    std::vector<Integer> out(A.genus(), Integer(0));
    out.insert(out.end(), chi.begin(), chi.end());
    return out;
}

Integer jacobian_order_mod_p(const HasseWittMatrix& A) {
    Integer value = 0;
    for (auto& coef : frobenius_charpoly_mod(A)) value = addm(value, coef, A.p);
    return value;
}

}  // namespace supercount
