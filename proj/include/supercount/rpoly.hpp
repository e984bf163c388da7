#pragma once

#include "supercount/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

// dense polynomial kit over a fixed-modulus ring, ascending coefficients.
// sized for the bsgs engine: degrees around sqrt(p), so karatsuba products,
// newton-inverse division and subproduct-tree evaluation are what matter

namespace supercount::rpoly {

template <class Ring>
using Poly = std::vector<typename Ring::Elem>;

template <class Ring>
void trim(const Ring& ring, Poly<Ring>& f) {
    while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
}

template <class Ring>
Poly<Ring> add(const Ring& ring, const Poly<Ring>& a, const Poly<Ring>& b) {
    Poly<Ring> out(std::max(a.size(), b.size()), ring.zero());
    for (size_t l = 0; l < a.size(); ++l) out[l] = a[l];
    for (size_t l = 0; l < b.size(); ++l) out[l] = ring.add(out[l], b[l]);
    trim(ring, out);
    return out;
}

template <class Ring>
Poly<Ring> sub(const Ring& ring, const Poly<Ring>& a, const Poly<Ring>& b) {
    Poly<Ring> out(std::max(a.size(), b.size()), ring.zero());
    for (size_t l = 0; l < a.size(); ++l) out[l] = a[l];
    for (size_t l = 0; l < b.size(); ++l) out[l] = ring.sub(out[l], b[l]);
    trim(ring, out);
    return out;
}

template <class Ring>
Poly<Ring> mul_school(const Ring& ring, const Poly<Ring>& a, const Poly<Ring>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<Ring> out(a.size() + b.size() - 1, ring.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
    return out;
}

inline constexpr size_t karatsuba_cutoff = 32;

template <class Ring>
Poly<Ring> mul(const Ring& ring, const Poly<Ring>& a, const Poly<Ring>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= karatsuba_cutoff) {
        auto out = mul_school(ring, a, b);
        trim(ring, out);
        return out;
    }
    size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    auto split = [&](const Poly<Ring>& f) {
        Poly<Ring> lo(f.begin(), f.begin() + std::min(h, f.size()));
        Poly<Ring> hi(f.begin() + std::min(h, f.size()), f.end());
        return std::pair{std::move(lo), std::move(hi)};
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    Poly<Ring> z0 = mul(ring, a0, b0);
    Poly<Ring> z2 = mul(ring, a1, b1);
    Poly<Ring> z1 = mul(ring, add(ring, a0, a1), add(ring, b0, b1));
    z1 = sub(ring, sub(ring, z1, z0), z2);
    Poly<Ring> out(a.size() + b.size() - 1, ring.zero());
    for (size_t l = 0; l < z0.size(); ++l) out[l] = ring.add(out[l], z0[l]);
    for (size_t l = 0; l < z1.size(); ++l) out[l + h] = ring.add(out[l + h], z1[l]);
    for (size_t l = 0; l < z2.size(); ++l) out[l + 2 * h] = ring.add(out[l + 2 * h], z2[l]);
    trim(ring, out);
    return out;
}

template <class Ring>
Poly<Ring> mul_trunc(const Ring& ring, const Poly<Ring>& a, const Poly<Ring>& b, size_t n) {
    auto out = mul(ring, a, b);
    if (out.size() > n) out.resize(n);
    trim(ring, out);
    return out;
}

// power-series inverse of f mod x^n by newton iteration; wants f[0] = 1
// (always true here: divisors are monic and get reversed)
template <class Ring>
Poly<Ring> series_inv(const Ring& ring, const Poly<Ring>& f, size_t n) {
    if (f.empty() || !ring.is_zero(ring.sub(f[0], ring.one())))
        throw PreconditionFailed("series inverse wants constant term 1");
    Poly<Ring> inv = {ring.one()};
    for (size_t prec = 1; prec < n;) {
        prec = std::min(2 * prec, n);
        Poly<Ring> head(f.begin(), f.begin() + std::min(prec, f.size()));
        Poly<Ring> e = mul_trunc(ring, head, inv, prec);
        if (e.empty()) e = {ring.zero()};
        e[0] = ring.sub(e[0], ring.one());           // f*inv - 1
        Poly<Ring> corr = mul_trunc(ring, inv, e, prec);
        inv = sub(ring, inv, corr);
        inv.resize(prec, ring.zero());
        trim(ring, inv);
    }
    return inv;
}

// remainder of a by monic b via the reversal trick; no ring divisions at all
template <class Ring>
Poly<Ring> rem_monic(const Ring& ring, const Poly<Ring>& a, const Poly<Ring>& b) {
    if (b.empty() || !ring.is_zero(ring.sub(b.back(), ring.one())))
        throw PreconditionFailed("remainder wants a monic divisor");
    if (b.size() == 1) return {};  // division by 1
    if (a.size() < b.size()) return a;
    size_t n = a.size() - b.size();  // quotient degree
    Poly<Ring> ra(a.rbegin(), a.rend());
    Poly<Ring> rb(b.rbegin(), b.rend());
    Poly<Ring> q = mul_trunc(ring, ra, series_inv(ring, rb, n + 1), n + 1);
    q.resize(n + 1, ring.zero());
    std::reverse(q.begin(), q.end());
    trim(ring, q);
    Poly<Ring> r = sub(ring, a, mul(ring, q, b));
    if (r.size() >= b.size())
        throw PreconditionFailed("division failed to reduce the degree");
    return r;
}

template <class Ring>
typename Ring::Elem eval(const Ring& ring, const Poly<Ring>& f, const typename Ring::Elem& x) {
    typename Ring::Elem acc = ring.zero();
    for (size_t l = f.size(); l-- > 0;) acc = ring.add(ring.mul(acc, x), f[l]);
    return acc;
}

// subproduct tree over evaluation points; levels[0] holds the linear leaves
template <class Ring>
struct SubproductTree {
    std::vector<std::vector<Poly<Ring>>> levels;
    size_t count = 0;  // number of points
};

template <class Ring>
SubproductTree<Ring> build_tree(const Ring& ring, const std::vector<typename Ring::Elem>& points) {
    SubproductTree<Ring> tree;
    tree.count = points.size();
    if (points.empty()) return tree;
    auto& leaves = tree.levels.emplace_back();
    leaves.reserve(points.size());
    for (auto& x : points) leaves.push_back({ring.sub(ring.zero(), x), ring.one()});
    while (tree.levels.back().size() > 1) {
        const auto& prev = tree.levels.back();
        std::vector<Poly<Ring>> next;
        next.reserve((prev.size() + 1) / 2);
        for (size_t l = 0; l + 1 < prev.size(); l += 2) next.push_back(mul(ring, prev[l], prev[l + 1]));
        if (prev.size() % 2 == 1) next.push_back(prev.back());
        tree.levels.push_back(std::move(next));
    }
    return tree;
}

// evaluate f at every tree point by remainder cascade
template <class Ring>
std::vector<typename Ring::Elem> multi_eval(const Ring& ring, const Poly<Ring>& f,
                                            const SubproductTree<Ring>& tree) {
    std::vector<typename Ring::Elem> out(tree.count, ring.zero());
    if (tree.count == 0) return out;
    // walk down: rems[l][node] = f mod levels[l][node], computed lazily per level
    std::vector<Poly<Ring>> cur = {rem_monic(ring, f, tree.levels.back()[0])};
    for (size_t level = tree.levels.size() - 1; level-- > 0;) {
        const auto& polys = tree.levels[level];
        std::vector<Poly<Ring>> next(polys.size());
        // odd leftover nodes reuse the parent remainder as is: the degree is
        // already below the node polynomial, so rem_monic returns it unchanged
        for (size_t node = 0; node < polys.size(); ++node)
            next[node] = rem_monic(ring, cur[node / 2], polys[node]);
        cur = std::move(next);
    }
    for (size_t l = 0; l < tree.count; ++l)
        out[l] = cur[l].empty() ? ring.zero() : cur[l][0];
    return out;
}

}  // namespace supercount::rpoly
