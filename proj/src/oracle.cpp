#include "supercount/oracle.hpp"

#include "supercount/caps.hpp"
#include "supercount/polymod.hpp"

#include <numeric>

namespace supercount::oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        e >>= 1;
        if (e) base = mulmod(base, base, p);
    }
    return r;
}

struct Checked {
    CurveSpec spec;
    u64 p;
    std::vector<u64> m;
};

Checked check_for_scan(const CurveSpec& spec, bool extension) {
    CurveSpec valid = require_valid(spec);
    Integer budget = extension ? valid.p * valid.p : valid.p;
    if (budget > caps().oracle)
        throw CapExceeded("brute-force scan over " + to_decimal(budget) +
                          " elements exceeds the oracle cap");
    if (!fits_u64(valid.p) || valid.p >= Integer(1) << 31)
        throw CapExceeded("brute-force scan needs p < 2^31");
    Checked out;
    out.p = to_u64(valid.p);
    for (auto& coef : valid.m) out.m.push_back(to_u64(coef));
    out.spec = std::move(valid);
    return out;
}

void require_smooth_model(const CurveSpec& spec) {
    if (spec.b != 0 || std::gcd(spec.a, spec.c()) != 1)
        throw Unsupported("one-point-at-infinity count needs b = 0 and gcd(a, c) = 1");
}

// F_{p^2} as pairs x0 + x1*theta with theta^2 a fixed nonresidue
struct F2 {
    u64 x0, x1;
    bool operator==(const F2&) const = default;
};

F2 f2_mul(const F2& a, const F2& b, u64 nr, u64 p) {
    return {static_cast<u64>((u128(a.x0) * b.x0 + u128(nr) * mulmod(a.x1, b.x1, p)) % p),
            static_cast<u64>((u128(a.x0) * b.x1 + u128(a.x1) * b.x0) % p)};
}

F2 f2_pow(F2 base, u64 e, u64 nr, u64 p) {
    F2 r{1 % p, 0};
    while (e) {
        if (e & 1) r = f2_mul(r, base, nr, p);
        e >>= 1;
        if (e) base = f2_mul(base, base, nr, p);
    }
    return r;
}

}  // namespace

Integer affine_count(const CurveSpec& spec) {
    Checked ck = check_for_scan(spec, false);
    const u64 p = ck.p;
    const u64 g = std::gcd(static_cast<u64>(ck.spec.a), p - 1);
    const u64 cofactor = (p - 1) / g;
    Integer n = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 t = 0;
        for (size_t l = ck.m.size(); l-- > 0;) t = (mulmod(t, x, p) + ck.m[l]) % p;
        if (ck.spec.b) t = mulmod(t, powmod(x, ck.spec.b, p), p);
        if (t == 0)
            n += 1;
        else if (powmod(t, cofactor, p) == 1)
            n += static_cast<unsigned long>(g);
    }
    return n;
}

Integer smooth_count(const CurveSpec& spec) {
    require_smooth_model(spec);
    return affine_count(spec) + 1;
}

Integer affine_count_ext(const CurveSpec& spec) {
    Checked ck = check_for_scan(spec, true);
    const u64 p = ck.p;
    u64 nr = 2;
    while (powmod(nr, (p - 1) / 2, p) != p - 1) ++nr;
    const u64 order = p * p - 1;
    const u64 g = std::gcd(static_cast<u64>(ck.spec.a), order);
    const u64 cofactor = order / g;
    Integer n = 0;
    for (u64 x0 = 0; x0 < p; ++x0)
        for (u64 x1 = 0; x1 < p; ++x1) {
            F2 x{x0, x1};
            F2 t{0, 0};
            for (size_t l = ck.m.size(); l-- > 0;) {
                t = f2_mul(t, x, nr, p);
                t.x0 = (t.x0 + ck.m[l]) % p;
            }
            if (ck.spec.b) t = f2_mul(t, f2_pow(x, ck.spec.b, nr, p), nr, p);
            if (t == F2{0, 0})
                n += 1;
            else if (f2_pow(t, cofactor, nr, p) == F2{1, 0})
                n += static_cast<unsigned long>(g);
        }
    return n;
}

Integer smooth_count_ext(const CurveSpec& spec) {
    require_smooth_model(spec);
    return affine_count_ext(spec) + 1;
}

Integer jacobian_order_g2(const CurveSpec& spec) {
    if (genus(spec) != 2) throw Unsupported("jacobian order scan is genus-2 only");
    const Integer& p = spec.p;
    Integer n1 = smooth_count(spec);
    Integer n2 = smooth_count_ext(spec);
    Integer c1 = n1 - p - 1;
    Integer two_c2 = n2 - p * p - 1 + c1 * c1;
    if (two_c2 % 2 != 0) throw PreconditionFailed("counts give an odd 2*c2");
    Integer c2 = two_c2 / 2;
    return 1 + c1 + c2 + p * c1 + p * p;
}

Integer binomial_mod(const Natural& n, const Natural& k, const Integer& p) {
    if (n < 0 || k < 0) throw PreconditionFailed("binomial wants n, k >= 0");
    if (k > n) return 0;
    if (n >= p) {  // lucas: digits base p
        return mulm(binomial_mod(n % p, k % p, p), binomial_mod(n / p, k / p, p), p);
    }
    Natural kk = std::min(Natural(k), Natural(n - k));
    if (kk > caps().oracle) throw CapExceeded("binomial product loop above the oracle cap");
    Integer num = 1, den = 1;
    for (Natural i = 1; i <= kk; ++i) {
        num = mulm(num, n - kk + i, p);
        den = mulm(den, i, p);
    }
    return mulm(num, invm(den, p), p);
}

Integer multinomial_mod(const Natural& v, const std::vector<Natural>& k, const Integer& p) {
    Natural total = 0;
    for (auto& kl : k) {
        if (kl < 0) throw PreconditionFailed("multinomial wants k_l >= 0");
        total += kl;
    }
    if (total != v) throw PreconditionFailed("multinomial parts must sum to v");
    Integer out = 1;
    Natural prefix = 0;
    for (auto& kl : k) {
        prefix += kl;
        out = mulm(out, binomial_mod(prefix, kl, p), p);
    }
    return out;
}

Integer power_coefficient(const std::vector<Integer>& f, const Natural& v,
                          const Natural& t, const Integer& p) {
    if (v > caps().direct || !fits_u64(v))
        throw CapExceeded("direct powering exponent above the direct cap");
    if (!fits_u64(p) || to_u64(p) > polymod::kMaxModulus)
        throw CapExceeded("direct powering needs p < 2^31");
    if (f.empty()) return 0;
    Natural degree_bound = Natural(f.size() - 1) * v;
    if (t > degree_bound) return 0;
    auto fv = polymod::pow(polymod::from_big(f, to_u64(p)), to_u64(v), to_u64(p));
    return polymod::coeff(fv, to_u64(t));
}

}  // namespace supercount::oracle
