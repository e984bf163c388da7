#include "supercount/recurrence.hpp"

#include "supercount/ring.hpp"
#include "supercount/rpoly.hpp"

#include <algorithm>
#include <set>

namespace supercount {

RecurrenceMatrix build_recurrence(const CurveSpec& spec, const Integer& v) {
    const long c = spec.c();
    if (c < 1) throw PreconditionFailed("recurrence wants deg f >= 1");
    if (spec.p < 2 || reduce(spec.m[0], spec.p) == 0)
        throw PreconditionFailed("recurrence wants m0 invertible mod p");
    if (v < 0) throw PreconditionFailed("negative exponent");
    RecurrenceMatrix out;
    out.c = c;
    out.v = v;
    Integer m0 = reduce(spec.m[0], spec.p);
    out.entries.assign(c, std::vector<LinearPoly>(c, LinearPoly{0, 0}));
    // top block: new window entries 0..c-2 are m0*k times old entries 1..c-1
    for (long row = 0; row + 1 < c; ++row) out.entries[row][row + 1] = {0, m0};
    // bottom row: m0*k*f_k = sum_l m_l (l v - (k - l)) f_{k-l}; old window
    // index c - l holds f_{k-l}
    for (long l = 1; l <= c; ++l) {
        Integer ml = reduce(spec.m[l], spec.p);
        out.entries[c - 1][c - l] = {ml * l * (v + 1), -ml};
    }
    return out;
}

namespace {

template <class Ring>
using Mat = std::vector<std::vector<typename Ring::Elem>>;

template <class Ring>
Mat<Ring> identity(const Ring& ring, long c) {
    Mat<Ring> out(c, std::vector<typename Ring::Elem>(c, ring.zero()));
    for (long l = 0; l < c; ++l) out[l][l] = ring.one();
    return out;
}

template <class Ring>
Mat<Ring> matmul(const Ring& ring, const Mat<Ring>& A, const Mat<Ring>& B) {
    size_t n = A.size();
    Mat<Ring> out(n, std::vector<typename Ring::Elem>(n, ring.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (ring.is_zero(A[i][k])) continue;
            for (size_t j = 0; j < n; ++j)
                out[i][j] = ring.add(out[i][j], ring.mul(A[i][k], B[k][j]));
        }
    return out;
}

template <class Ring>
std::vector<typename Ring::Elem> matvec(const Ring& ring, const Mat<Ring>& A,
                                        const std::vector<typename Ring::Elem>& x) {
    size_t n = A.size();
    std::vector<typename Ring::Elem> out(n, ring.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] = ring.add(out[i], ring.mul(A[i][j], x[j]));
    return out;
}

// B with both linear coefficients premapped into the ring
template <class Ring>
struct RingRecurrence {
    long c = 0;
    Mat<Ring> c0, c1;
};

template <class Ring>
RingRecurrence<Ring> into_ring(const Ring& ring, const RecurrenceMatrix& B) {
    RingRecurrence<Ring> out;
    out.c = B.c;
    out.c0.assign(B.c, std::vector<typename Ring::Elem>(B.c, ring.zero()));
    out.c1 = out.c0;
    for (long i = 0; i < B.c; ++i)
        for (long j = 0; j < B.c; ++j) {
            out.c0[i][j] = ring.from_integer(B.entries[i][j].c0);
            out.c1[i][j] = ring.from_integer(B.entries[i][j].c1);
        }
    return out;
}

template <class Ring>
Mat<Ring> eval_step(const Ring& ring, const RingRecurrence<Ring>& B,
                    const typename Ring::Elem& k) {
    Mat<Ring> out = B.c0;
    for (long i = 0; i < B.c; ++i)
        for (long j = 0; j < B.c; ++j)
            if (!ring.is_zero(B.c1[i][j])) out[i][j] = ring.add(out[i][j], ring.mul(B.c1[i][j], k));
    return out;
}

template <class Ring>
Mat<Ring> product_naive(const Ring& ring, const RingRecurrence<Ring>& B, const Integer& k_lo,
                        const Integer& k_hi) {
    Mat<Ring> P = identity(ring, B.c);
    if (k_lo > k_hi) return P;
    typename Ring::Elem k = ring.from_integer(k_lo);
    for (Integer step = k_lo; step <= k_hi; ++step) {
        P = matmul(ring, eval_step(ring, B, k), P);
        k = ring.add(k, ring.one());
    }
    return P;
}

template <class Ring>
Mat<Ring> product_bsgs(const Ring& ring, const RingRecurrence<Ring>& B, const Integer& k_lo,
                       const Integer& k_hi) {
    Integer len = k_hi - k_lo + 1;
    if (len <= 128) return product_naive(ring, B, k_lo, k_hi);
    if (len > (Integer(1) << 62)) throw CapExceeded("segment too long for bsgs");
    unsigned long L = to_u64(len);
    unsigned long s = to_u64(isqrt(Integer(L)).root);
    if (s * s < L) ++s;
    unsigned long G = L / s;

    const long c = B.c;
    // baby step: product tree over the linear matrices B(x+s), ..., B(x+1);
    // entries become polynomials in x of degree <= s
    using PMat = std::vector<std::vector<rpoly::Poly<Ring>>>;
    std::vector<PMat> nodes;
    nodes.reserve(s);
    typename Ring::Elem shift = ring.one();
    for (unsigned long t = 1; t <= s; ++t) {
        PMat leaf(c, std::vector<rpoly::Poly<Ring>>(c));
        for (long i = 0; i < c; ++i)
            for (long j = 0; j < c; ++j) {
                rpoly::Poly<Ring> e = {ring.add(B.c0[i][j], ring.mul(B.c1[i][j], shift)),
                                       B.c1[i][j]};
                rpoly::trim(ring, e);
                leaf[i][j] = std::move(e);
            }
        nodes.push_back(std::move(leaf));
        shift = ring.add(shift, ring.one());
    }
    while (nodes.size() > 1) {
        std::vector<PMat> next;
        next.reserve((nodes.size() + 1) / 2);
        // pair neighbors keeping descending-k on the left: node t holds
        // B(x+t..), so the product of pair (t, t+1) is nodes[t+1] * nodes[t]
        for (size_t l = 0; l + 1 < nodes.size(); l += 2) {
            const PMat& right = nodes[l];
            const PMat& left = nodes[l + 1];
            PMat prod(c, std::vector<rpoly::Poly<Ring>>(c));
            for (long i = 0; i < c; ++i)
                for (long j = 0; j < c; ++j) {
                    rpoly::Poly<Ring> acc;
                    for (long k = 0; k < c; ++k)
                        acc = rpoly::add(ring, acc, rpoly::mul(ring, left[i][k], right[k][j]));
                    prod[i][j] = std::move(acc);
                }
            next.push_back(std::move(prod));
        }
        if (nodes.size() % 2 == 1) next.push_back(std::move(nodes.back()));
        nodes = std::move(next);
    }
    PMat M = std::move(nodes.front());

    // giant step: evaluate M at x_g = k_lo - 1 + g s for g = 0..G-1
    std::vector<typename Ring::Elem> points;
    points.reserve(G);
    typename Ring::Elem x = ring.from_integer(k_lo - 1);
    typename Ring::Elem stride = ring.from_integer(Integer(static_cast<unsigned long>(s)));
    for (unsigned long g = 0; g < G; ++g) {
        points.push_back(x);
        x = ring.add(x, stride);
    }
    auto tree = rpoly::build_tree(ring, points);
    std::vector<Mat<Ring>> blocks(G, Mat<Ring>(c, std::vector<typename Ring::Elem>(c)));
    for (long i = 0; i < c; ++i)
        for (long j = 0; j < c; ++j) {
            auto values = rpoly::multi_eval(ring, M[i][j], tree);
            for (unsigned long g = 0; g < G; ++g) blocks[g][i][j] = values[g];
        }

    Mat<Ring> P = identity(ring, c);
    for (unsigned long g = 0; g < G; ++g) P = matmul(ring, blocks[g], P);
    // naive tail for the leftover k in [k_lo + G s, k_hi]
    Mat<Ring> tail =
        product_naive(ring, B, k_lo + Integer(static_cast<unsigned long>(G * s)), k_hi);
    return matmul(ring, tail, P);
}

template <class Ring>
IntMatrix export_matrix(const Ring& ring, const Mat<Ring>& A) {
    IntMatrix out(A.size());
    for (size_t i = 0; i < A.size(); ++i)
        for (auto& e : A[i]) out[i].push_back(ring.to_integer(e));
    return out;
}

template <class Ring>
IntMatrix run_factorial(const RecurrenceMatrix& B, const Integer& k_lo, const Integer& k_hi,
                        const Integer& modulus, bool bsgs) {
    Ring ring(modulus);
    auto rr = into_ring(ring, B);
    auto P = bsgs ? product_bsgs(ring, rr, k_lo, k_hi) : product_naive(ring, rr, k_lo, k_hi);
    return export_matrix(ring, P);
}

// the coefficient chain: advances V_k and the k! skip product together,
// splitting at multiples of p and recovering U_k at checkpoints
template <class Ring>
class CoefficientChain {
  public:
    CoefficientChain(const Ring& ring, const CurveSpec& spec, const Integer& v, long m)
        : ring_(ring),
          p_(spec.p),
          v_(v),
          m_(m),
          rec_(into_ring(ring, build_recurrence(spec, v))),
          skip_rec_(into_ring(ring, one_dim_rec(spec.p))) {
        const long c = spec.c();
        window_.assign(c, ring_.zero());
        window_.back() = ring_.from_integer(powm(reduce(spec.m[0], ring_.modulus()), v,
                                                 ring_.modulus()));
        skip_ = ring_.one();
        at_ = 0;
        m0_ = reduce(spec.m[0], ring_.modulus());
    }

    // coefficient f_{k,v} mod p; k must be reached in ascending order
    Integer coefficient(const Natural& k) {
        advance(k);
        long alpha = static_cast<long>(to_u64(k / p_));
        Integer x = ring_.to_integer(window_.back());
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(alpha));
        if (x % scale != 0)
            throw PreconditionFailed("internal: V_k lost its p-divisibility");
        Integer pw;  // p^{m - alpha}, still >= p
        mpz_pow_ui(pw.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(m_ - alpha));
        Integer q = reduce(x / scale, pw);
        // unit part of k!: skip product times alpha!
        Integer unit = reduce(ring_.to_integer(skip_), pw);
        for (long l = 2; l <= alpha; ++l) unit = mulm(unit, Integer(l), pw);
        Integer den = mulm(unit, powm(reduce(m0_, pw), k, pw), pw);
        return reduce(mulm(q, invm(den, pw), pw), p_);
    }

  private:
    static RecurrenceMatrix one_dim_rec(const Integer& p) {
        RecurrenceMatrix out;
        out.c = 1;
        out.v = 0;
        out.entries = {{LinearPoly{0, 1}}};  // B(k) = k
        return out;
    }

    void apply_segment(const Integer& lo, const Integer& hi) {
        if (lo > hi) return;
        window_ = matvec(ring_, product_bsgs(ring_, rec_, lo, hi), window_);
        auto sp = product_bsgs(ring_, skip_rec_, lo, hi);
        skip_ = ring_.mul(skip_, sp[0][0]);
    }

    void advance(const Natural& k) {
        if (k < at_) throw PreconditionFailed("internal: checkpoints must ascend");
        while (true) {
            Integer boundary = (at_ / p_ + 1) * p_;
            if (boundary <= k) {
                apply_segment(at_ + 1, boundary - 1);
                // the boundary step k = tp is a plain matrix application; the
                // skip product leaves it out by construction
                auto Bk = eval_step(ring_, rec_, ring_.from_integer(boundary));
                window_ = matvec(ring_, Bk, window_);
                at_ = boundary;
            } else {
                apply_segment(at_ + 1, k);
                at_ = k;
                return;
            }
        }
    }

    const Ring& ring_;
    Integer p_;
    Integer v_;
    long m_;
    RingRecurrence<Ring> rec_, skip_rec_;
    std::vector<typename Ring::Elem> window_;
    typename Ring::Elem skip_;
    Integer at_;
    Integer m0_;
};

template <class Ring>
std::map<Natural, Integer> coefficients_with(const CurveSpec& spec, const Integer& v,
                                             const std::vector<Natural>& targets, long m,
                                             const Integer& modulus) {
    Ring ring(modulus);
    CoefficientChain<Ring> chain(ring, spec, v, m);
    std::set<Natural> ordered(targets.begin(), targets.end());
    std::map<Natural, Integer> out;
    for (const Natural& k : ordered) out[k] = chain.coefficient(k);
    return out;
}

}  // namespace

IntMatrix matrix_factorial_naive(const RecurrenceMatrix& B, const Integer& k_lo,
                                 const Integer& k_hi, const Integer& modulus) {
    if (RingMont::eligible(modulus)) return run_factorial<RingMont>(B, k_lo, k_hi, modulus, false);
    return run_factorial<RingMpz>(B, k_lo, k_hi, modulus, false);
}

IntMatrix matrix_factorial_bsgs(const RecurrenceMatrix& B, const Integer& k_lo,
                                const Integer& k_hi, const Integer& modulus) {
    if (RingMont::eligible(modulus)) return run_factorial<RingMont>(B, k_lo, k_hi, modulus, true);
    return run_factorial<RingMpz>(B, k_lo, k_hi, modulus, true);
}

std::map<Natural, Integer> coefficients_at(const CurveSpec& spec, const Integer& v,
                                           const std::vector<Natural>& targets) {
    const long c = spec.c();
    if (c < 1) throw PreconditionFailed("coefficients_at wants deg f >= 1");
    if (spec.p <= 3 || !is_probable_prime(spec.p))
        throw PreconditionFailed("coefficients_at wants a prime p > 3");
    if (reduce(spec.m[0], spec.p) == 0)
        throw PreconditionFailed("coefficients_at wants m0 invertible mod p");
    if (v < 0 || v >= spec.p) throw PreconditionFailed("need 0 <= v < p");
    Integer support = Integer(c) * v;
    if (support >= spec.p * spec.p)
        throw PreconditionFailed("need c v < p^2 for exact p-adic bookkeeping");
    Natural k_max = 0;
    for (const Natural& t : targets) {
        if (t < 0 || t > support)
            throw TargetOutOfSupport("coefficient index " + to_decimal(t) +
                                     " outside [0, " + to_decimal(support) + "]");
        k_max = std::max(k_max, t);
    }
    long m = 1 + static_cast<long>(to_u64(k_max / spec.p));
    Integer modulus;
    mpz_pow_ui(modulus.get_mpz_t(), spec.p.get_mpz_t(), static_cast<unsigned long>(m));
    if (RingMont::eligible(modulus))
        return coefficients_with<RingMont>(spec, v, targets, m, modulus);
    return coefficients_with<RingMpz>(spec, v, targets, m, modulus);
}

HasseWittMatrix hw_matrix_bgs(const CurveSpec& spec) {
    CurveSpec valid = require_valid(spec);
    const Integer& p = valid.p;
    const long a = valid.a, b = valid.b, c = valid.c();

    HasseWittMatrix out;
    out.p = p;
    out.basis = interior_lattice_points(valid);
    size_t g = out.basis.genus();
    out.entries.assign(g, std::vector<Integer>(g, Integer(0)));

    // group columns by j: one coefficient chain per distinct exponent v_j
    std::map<long, std::vector<size_t>> by_j;
    for (size_t col = 0; col < g; ++col) by_j[out.basis.points[col].j].push_back(col);

    for (auto& [j, cols] : by_j) {
        ExponentPair ep = exponent_pair(j, a, p);
        Integer bv = Integer(b) * ep.v;
        Integer support = Integer(c) * ep.v;
        // all row scans for these columns, including rows outside the basis
        // (their coefficients must vanish; checked below like hw_matrix_direct)
        std::vector<Natural> targets;
        struct Probe {
            size_t col;
            long s;
            Natural t;
        };
        std::vector<Probe> probes;
        for (size_t col : cols) {
            const auto& q = out.basis.points[col];
            for (Integer s = 1; s * p <= support + q.i + bv; ++s) {
                Integer t = s * p - q.i - bv;
                if (t < 0) continue;
                targets.push_back(t);
                probes.push_back({col, to_long(s), t});
            }
        }
        auto coeffs = coefficients_at(valid, ep.v, targets);
        for (auto& probe : probes) {
            const Integer& coef = coeffs.at(probe.t);
            if (coef == 0) continue;
            long row = out.basis.index_of({probe.s, ep.u});
            if (row < 0)
                throw PreconditionFailed("nonzero coefficient lands outside the basis at (" +
                                         std::to_string(probe.s) + ", " + std::to_string(ep.u) +
                                         ")");
            out.entries[row][probe.col] = coef;
        }
    }
    return out;
}

}  // namespace supercount
