#include "supercount/polymod.hpp"

#include <algorithm>

namespace supercount::polymod {

using u128 = unsigned __int128;

std::vector<u64> from_big(const std::vector<Integer>& f, u64 p) {
    if (p > kMaxModulus) throw CapExceeded("polymod modulus above 2^31");
    std::vector<u64> out(f.size());
    Integer pp = static_cast<unsigned long>(p);
    for (size_t l = 0; l < f.size(); ++l) out[l] = to_u64(reduce(f[l], pp));
    return out;
}

u64 coeff(const std::vector<u64>& f, std::uint64_t t) {
    return t < f.size() ? f[t] : 0;
}

static void trim(std::vector<u64>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

static void mul_school(const u64* a, size_t na, const u64* b, size_t nb, u64* out, u64 p) {
    // out has na + nb - 1 slots, already zeroed; p < 2^31 lets u128 accumulate
    // 2^66 terms without overflow
    for (size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        u128 ai = a[i];
        for (size_t j = 0; j < nb; ++j) {
            u128 acc = static_cast<u128>(out[i + j]) + ai * b[j];
            out[i + j] = static_cast<u64>(acc % p);
        }
    }
}

static constexpr size_t kKaratsubaThreshold = 48;

static void mul_rec(const u64* a, size_t na, const u64* b, size_t nb, u64* out, u64 p) {
    // out: na + nb - 1 slots zeroed
    if (na == 0 || nb == 0) return;
    if (na < kKaratsubaThreshold || nb < kKaratsubaThreshold) {
        mul_school(a, na, b, nb, out, p);
        return;
    }
    size_t h = (std::max(na, nb) + 1) / 2;
    if (h >= na || h >= nb) {
        // too unbalanced to split both, halve the longer one
        if (na >= nb) {
            mul_rec(a, h, b, nb, out, p);
            std::vector<u64> hi(na - h + nb - 1, 0);
            mul_rec(a + h, na - h, b, nb, hi.data(), p);
            for (size_t t = 0; t < hi.size(); ++t)
                out[h + t] = (out[h + t] + hi[t]) % p;
        } else {
            mul_rec(b, nb, a, na, out, p);
        }
        return;
    }
    // karatsuba: a = a0 + x^h a1, b = b0 + x^h b1
    const u64 *a0 = a, *a1 = a + h, *b0 = b, *b1 = b + h;
    size_t na1 = na - h, nb1 = nb - h;
    std::vector<u64> z0(h + h - 1, 0), z2(na1 + nb1 - 1, 0);
    mul_rec(a0, h, b0, h, z0.data(), p);
    mul_rec(a1, na1, b1, nb1, z2.data(), p);
    size_t ns = std::max(h, na1), ms = std::max(h, nb1);
    std::vector<u64> sa(ns, 0), sb(ms, 0);
    for (size_t t = 0; t < h; ++t) sa[t] = a0[t];
    for (size_t t = 0; t < na1; ++t) sa[t] = (sa[t] + a1[t]) % p;
    for (size_t t = 0; t < h; ++t) sb[t] = b0[t];
    for (size_t t = 0; t < nb1; ++t) sb[t] = (sb[t] + b1[t]) % p;
    std::vector<u64> z1(ns + ms - 1, 0);
    mul_rec(sa.data(), ns, sb.data(), ms, z1.data(), p);
    for (size_t t = 0; t < z0.size(); ++t) z1[t] = (z1[t] + p - z0[t]) % p;
    for (size_t t = 0; t < z2.size(); ++t) z1[t] = (z1[t] + p - z2[t]) % p;
    for (size_t t = 0; t < z0.size(); ++t) out[t] = (out[t] + z0[t]) % p;
    for (size_t t = 0; t < z1.size(); ++t) out[h + t] = (out[h + t] + z1[t]) % p;
    for (size_t t = 0; t < z2.size(); ++t) out[2 * h + t] = (out[2 * h + t] + z2[t]) % p;
}

std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (p > kMaxModulus) throw CapExceeded("polymod modulus above 2^31");
    if (a.empty() || b.empty()) return {};
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    mul_rec(a.data(), a.size(), b.data(), b.size(), out.data(), p);
    trim(out);
    return out;
}

std::vector<u64> pow(const std::vector<u64>& base, u64 e, u64 p) {
    std::vector<u64> result{1 % p};
    std::vector<u64> sq = base;
    trim(sq);
    while (e) {
        if (e & 1) result = mul(result, sq, p);
        e >>= 1;
        if (e) sq = mul(sq, sq, p);
    }
    return result;
}

}  // namespace supercount::polymod
