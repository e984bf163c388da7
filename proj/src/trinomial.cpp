#include "supercount/trinomial.hpp"

#include <numeric>

namespace supercount {

std::vector<Integer> rep_table(const Natural& p, long e, const SqrtStrategy& strategy) {
    if (e != 3 && e != 4 && e != 6 && e != 8)
        throw PreconditionFailed("rep table exists for e in {3, 4, 6, 8} only");
    Integer f = (p - 1) / e;
    if (f * e != p - 1) throw PreconditionFailed("need e | p - 1");
    bool f_odd = (f % 2 != 0);
    long sgnf = f_odd ? -1 : 1;

    // signed representatives first, reduce at the end
    std::vector<Integer> col(e, Integer(0));
    col[1] = 1;
    auto d3_branch = [](const PrimeDecomposition& dec, bool swap_pair) -> Integer {
        // value of binom(2f, f) for e = 3, or its e = 6 counterpart (the
        // nonzero-residue branches trade places there)
        Integer a3 = dec.a, b3 = dec.b;
        long rem = to_long(b3 % 3);
        if (rem == 0) return 2 * a3;
        bool plus = swap_pair ? (rem == 1) : (rem == 2);
        return plus ? Integer(-a3 + 3 * b3) : Integer(-a3 - 3 * b3);
    };
    switch (e) {
        case 3: {
            if (f_odd) throw PreconditionFailed("f is even whenever e = 3");
            col[2] = d3_branch(decompose_prime(p, 3, strategy), false);
            break;
        }
        case 4: {
            PrimeDecomposition dec = decompose_prime(p, 4, strategy);
            col[2] = 2 * dec.a;
            col[3] = sgnf * col[2];
            break;
        }
        case 6: {
            PrimeDecomposition dec = decompose_prime(p, 6, strategy);
            col[2] = sgnf * d3_branch(dec, true);
            col[3] = 2 * dec.a;
            col[4] = sgnf * col[3];
            col[5] = sgnf * col[2];
            break;
        }
        case 8: {
            PrimeDecomposition dec8 = decompose_prime(p, 8, strategy);
            PrimeDecomposition dec4 = decompose_prime(p, 4, strategy);
            if (dec4.b % 4 != 0)
                throw PreconditionFailed("p = 1 mod 8 forces 4 | b in p = a^2 + b^2");
            long sgnb = (dec4.b / 4) % 2 != 0 ? -1 : 1;
            col[2] = sgnb * 2 * dec8.a;
            col[3] = sgnf * sgnb * 2 * dec4.a;
            col[4] = sgnf * 2 * dec8.a;
            col[5] = sgnf * col[4];
            col[6] = sgnf * col[3];
            col[7] = sgnf * col[2];
            break;
        }
    }
    for (auto& value : col) value = reduce(value, p);
    return col;
}

Integer binom_ff(long r, long s, const std::vector<Integer>& col1, const Integer& p) {
    long e = static_cast<long>(col1.size());
    if (s < 0 || s > r || r > e - 1)
        throw PreconditionFailed("binom table wants 0 <= s <= r <= e - 1");
    Integer out = 1;
    for (long t = 1; t <= s; ++t) {
        out = mulm(out, col1[r - s + t], p);
        out = mulm(out, invm(col1[t], p), p);
    }
    return out;
}

Integer binom_ff(long r, long s, const TrinomialContext& ctx) {
    return binom_ff(r, s, ctx.col1, ctx.spec.p);
}

namespace {

// shared shape analysis; returns empty on success, an error-code-prefixed
// reason otherwise, and leaves e / d / f filled when the gcd structure is sound
std::string shape_reason(const CurveSpec& valid, long& e, long& d, Integer& f) {
    const long c = valid.c();
    for (long l = 1; l < c; ++l)
        if (valid.m[l] != 0)
            return "NotTrinomial: middle coefficient m" + std::to_string(l) + " is nonzero";
    Integer ac = Integer(valid.a) * c;
    Integer eg;
    mpz_gcd(eg.get_mpz_t(), ac.get_mpz_t(), Integer(valid.p - 1).get_mpz_t());
    if (eg != 3 && eg != 4 && eg != 6 && eg != 8)
        return "BadGcd: e = gcd(a c, p - 1) = " + to_decimal(eg) + " is not one of 3, 4, 6, 8";
    e = to_long(eg);
    d = to_long(ac / eg);
    f = (valid.p - 1) / eg;
    Integer dg;
    mpz_gcd(dg.get_mpz_t(), Integer(d).get_mpz_t(), f.get_mpz_t());
    if (dg != 1) return "BadGcd: gcd(d, f) = " + to_decimal(dg) + " is not 1";
    return {};
}

}  // namespace

bool trinomial_applicable(const CurveSpec& spec, std::string* reason) {
    auto issues = validate(spec);
    if (!issues.empty()) {
        if (reason) *reason = "PreconditionFailed: invalid curve (" + issues.front().code + ")";
        return false;
    }
    CurveSpec valid = require_valid(spec);
    long e = 0, d = 0;
    Integer f;
    std::string why = shape_reason(valid, e, d, f);
    if (why.empty()) {
        long g = genus(valid);
        if (valid.p <= 16 * g * g)
            why = "PrimeTooSmall: p <= 16 g^2 = " + std::to_string(16 * g * g) +
                  " leaves the trace lift ambiguous";
    }
    if (!why.empty() && reason) *reason = why;
    return why.empty();
}

TrinomialContext make_trinomial_context(const CurveSpec& spec, const SqrtStrategy& strategy) {
    TrinomialContext ctx;
    ctx.spec = require_valid(spec);
    std::string why = shape_reason(ctx.spec, ctx.e, ctx.d, ctx.f);
    if (!why.empty()) {
        std::string detail = why.substr(why.find(": ") + 2);
        if (why.front() == 'N') throw NotTrinomial(detail);
        throw BadGcd(detail);
    }
    ctx.m0 = ctx.spec.m[0];
    ctx.mc = ctx.spec.m[ctx.spec.c()];
    ctx.col1 = rep_table(ctx.spec.p, ctx.e, strategy);
    return ctx;
}

namespace {

// diagonal term at interior point (i, j), or nullopt when the column misses
// the diagonal; r and s index the closed-form binomial
struct DiagonalTerm {
    long r = 0, s = 0;
    Integer value;
};

std::optional<DiagonalTerm> diagonal_term(long i, long j, const TrinomialContext& ctx) {
    const CurveSpec& spec = ctx.spec;
    const Integer& p = spec.p;
    const long a = spec.a, b = spec.b, c = spec.c();
    if ((p - 1) * (a - j) % a != 0) return std::nullopt;  // u_j != j
    if (Integer(c) * (a - j) % ctx.d != 0)
        throw PreconditionFailed("internal: gcd(d, f) = 1 should force d | c (a - j)");
    long r = c * (a - j) / ctx.d;
    long big_s = a * i + b * j - a * b;
    if (big_s % ctx.d != 0) return std::nullopt;  // coefficient lands between exponents
    long s = big_s / ctx.d;
    if (!(1 <= s && s < r && r <= ctx.e - 1))
        throw PreconditionFailed("internal: interior point escaped 1 <= s < r <= e - 1");
    if (Integer(r) * ctx.f != (p - 1) * (a - j) / a)
        throw PreconditionFailed("internal: r f != v_j");
    DiagonalTerm term;
    term.r = r;
    term.s = s;
    term.value = mulm(binom_ff(r, s, ctx),
                      mulm(powm(ctx.m0, Integer(r - s) * ctx.f, p),
                           powm(ctx.mc, Integer(s) * ctx.f, p), p),
                      p);
    return term;
}

}  // namespace

Integer trace_mod_p_fast(const TrinomialContext& ctx) {
    Integer acc = 0;
    for (auto& q : interior_lattice_points(ctx.spec).points)
        if (auto term = diagonal_term(q.i, q.j, ctx)) acc = addm(acc, term->value, ctx.spec.p);
    return acc;
}

std::vector<Integer> diagonal_fast(const TrinomialContext& ctx) {
    const CurveSpec& spec = ctx.spec;
    const Integer& p = spec.p;
    const long a = spec.a, b = spec.b, c = spec.c();
    LatticeBasis basis = interior_lattice_points(spec);
    std::vector<Integer> diag(basis.genus(), Integer(0));
    for (size_t col = 0; col < basis.genus(); ++col) {
        const auto& q = basis.points[col];
        ExponentPair ep = exponent_pair(q.j, a, p);
        Integer bv = Integer(b) * ep.v;
        for (auto& row : basis.points) {
            if (row.j != ep.u) continue;
            Integer t = p * row.i - q.i - bv;
            if (t < 0 || t > Integer(c) * ep.v || t % c != 0) continue;
            // a landing with v < p has a unit binomial, hence a nonzero entry
            if (row.i != q.i || ep.u != q.j)
                throw NotDiagonal("entry at row (" + std::to_string(row.i) + ", " +
                                  std::to_string(row.j) + ") from column (" +
                                  std::to_string(q.i) + ", " + std::to_string(q.j) + ")");
            auto term = diagonal_term(q.i, q.j, ctx);
            if (!term)
                throw PreconditionFailed("internal: diagonal landing without a table term");
            diag[col] = term->value;
        }
    }
    return diag;
}

Integer jacobian_order_mod_p_fast(const TrinomialContext& ctx) {
    Integer out = 1;
    for (auto& d_l : diagonal_fast(ctx)) out = mulm(out, subm(1, d_l, ctx.spec.p), ctx.spec.p);
    return out;
}

CountResult count_points_fast(const CurveSpec& spec, const SqrtStrategy& strategy) {
    TrinomialContext ctx = make_trinomial_context(spec, strategy);
    long g = genus(ctx.spec);
    CountResult out;
    out.genus = g;
    if (g == 0) {  // smooth rational curve: p + 1 points
        out.trace = 0;
        out.count = ctx.spec.p + 1;
        return out;
    }
    out.trace = lift_trace(trace_mod_p_fast(ctx), ctx.spec.p, g);
    out.count = count_from_trace(out.trace, ctx.spec.p);
    return out;
}

}  // namespace supercount
