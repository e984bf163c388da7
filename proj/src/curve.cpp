#include "supercount/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace supercount {

namespace zpoly {

Poly normalized(Poly f, const Integer& p) {
    for (auto& c : f) c = reduce(c, p);
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

long degree(const Poly& f) {
    return static_cast<long>(f.size()) - 1;
}

Poly derivative(const Poly& f, const Integer& p) {
    Poly d;
    for (size_t l = 1; l < f.size(); ++l) d.push_back(mulm(f[l], Integer(l), p));
    return normalized(std::move(d), p);
}

static Poly make_monic(Poly f, const Integer& p) {
    if (f.empty()) return f;
    Integer inv = invm(f.back(), p);
    for (auto& c : f) c = mulm(c, inv, p);
    return f;
}

// remainder of f by nonzero g
static Poly rem(Poly f, const Poly& g, const Integer& p) {
    Integer lead_inv = invm(g.back(), p);
    while (degree(f) >= degree(g)) {
        Integer q = mulm(f.back(), lead_inv, p);
        size_t shift = f.size() - g.size();
        for (size_t l = 0; l < g.size(); ++l)
            f[shift + l] = subm(f[shift + l], mulm(q, g[l], p), p);
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f;
}

Poly gcd(Poly f, Poly g, const Integer& p) {
    f = normalized(std::move(f), p);
    g = normalized(std::move(g), p);
    while (!g.empty()) {
        Poly r = rem(std::move(f), g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(std::move(f), p);
}

Poly divexact(const Poly& f, const Poly& g, const Integer& p) {
    Poly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, Integer(0));
    Poly r = normalized(f, p);
    Integer lead_inv = invm(g.back(), p);
    while (degree(r) >= degree(g)) {
        Integer coef = mulm(r.back(), lead_inv, p);
        size_t shift = r.size() - g.size();
        q[shift] = coef;
        for (size_t l = 0; l < g.size(); ++l)
            r[shift + l] = subm(r[shift + l], mulm(coef, g[l], p), p);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) throw PreconditionFailed("divexact: nonzero remainder");
    return normalized(std::move(q), p);
}

std::vector<Poly> squarefree_decomposition(const Poly& f_in, const Integer& p) {
    // yun's algorithm; valid here because deg f < p keeps multiplicities < p
    Poly f = make_monic(normalized(f_in, p), p);
    std::vector<Poly> parts;
    parts.push_back({});  // index 0 unused
    if (degree(f) < 1) return parts;
    Poly fp = derivative(f, p);
    if (fp.empty()) throw PreconditionFailed("squarefree decomposition: zero derivative");
    Poly g = gcd(f, fp, p);
    Poly c = divexact(f, g, p);
    Poly d = normalized([&] {
        Poly t = divexact(fp, g, p);
        Poly cp = derivative(c, p);
        t.resize(std::max(t.size(), cp.size()), Integer(0));
        for (size_t l = 0; l < cp.size(); ++l) t[l] = subm(t[l], cp[l], p);
        return t;
    }(), p);
    while (degree(c) > 0) {
        Poly a = gcd(c, d, p);
        parts.push_back(a);
        c = divexact(c, a, p);
        Poly t = a.empty() ? d : divexact(d, a, p);
        Poly cp = derivative(c, p);
        t.resize(std::max(t.size(), cp.size()), Integer(0));
        for (size_t l = 0; l < cp.size(); ++l) t[l] = subm(t[l], cp[l], p);
        d = normalized(std::move(t), p);
    }
    return parts;
}

}  // namespace zpoly

CurveSpec parse_curve(const std::string& text) {
    CurveSpec spec;
    bool saw_a = false, saw_b = false, saw_c = false, saw_m = false, saw_p = false;
    long c_given = -1;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (val.empty()) throw ParseError("empty value for '" + key + "'");
        auto parse_count = [&](bool& seen) {
            if (seen) throw ParseError("duplicate key '" + key + "'");
            seen = true;
        };
        if (key == "a") {
            parse_count(saw_a);
            spec.a = to_long(from_decimal(val));
        } else if (key == "b") {
            parse_count(saw_b);
            spec.b = to_long(from_decimal(val));
        } else if (key == "c") {
            parse_count(saw_c);
            c_given = to_long(from_decimal(val));
        } else if (key == "p") {
            parse_count(saw_p);
            spec.p = from_decimal(val);
        } else if (key == "m") {
            parse_count(saw_m);
            if (val.front() != '[' || val.back() != ']')
                throw ParseError("m must look like m=[1,0,2]");
            std::string body = val.substr(1, val.size() - 2);
            if (body.empty()) throw ParseError("m must have at least one coefficient");
            std::istringstream items(body);
            std::string item;
            while (std::getline(items, item, ','))
                spec.m.push_back(from_decimal(item));
            if (body.back() == ',') throw ParseError("trailing comma in m");
        } else {
            throw ParseError("unknown key '" + key + "'");
        }
    }
    if (!saw_a) throw ParseError("missing a=");
    if (!saw_m) throw ParseError("missing m=[...]");
    if (saw_c && c_given != spec.c())
        throw ParseError("c=" + std::to_string(c_given) + " disagrees with m length " +
                         std::to_string(spec.m.size()));
    return spec;
}

std::string format_curve(const CurveSpec& spec) {
    std::ostringstream out;
    out << "a=" << spec.a << " b=" << spec.b << " c=" << spec.c() << " m=[";
    for (size_t l = 0; l < spec.m.size(); ++l) {
        if (l) out << ",";
        out << to_decimal(spec.m[l]);
    }
    out << "]";
    if (spec.p != 0) out << " p=" << to_decimal(spec.p);
    return out.str();
}

std::vector<zpoly::Poly> side_polynomials(const CurveSpec& spec) {
    // hull vertices of y^a - x^b f(x): (0,a), (b,0), (b+c,0); for b = 0 the
    // left edge is the vertical segment (0,a)-(0,0)
    struct Pt {
        long x, y;
    };
    const long a = spec.a, b = spec.b, c = spec.c();
    auto coeff_at = [&](long x, long y) -> Integer {
        if (x == 0 && y == a) return 1;
        if (y == 0 && x >= b && x <= b + c) return reduce(-spec.m[x - b], spec.p);
        return 0;
    };
    std::vector<std::pair<Pt, Pt>> edges;
    edges.push_back({{0, a}, {b, 0}});
    edges.push_back({{b, 0}, {b + c, 0}});
    edges.push_back({{0, a}, {b + c, 0}});
    std::vector<zpoly::Poly> out;
    for (auto& [P, Q] : edges) {
        long dx = Q.x - P.x, dy = Q.y - P.y;
        long k = std::gcd(std::abs(dx), std::abs(dy));
        if (k == 0) continue;  // degenerate edge (b = 0 bottom start)
        zpoly::Poly e;
        for (long t = 0; t <= k; ++t)
            e.push_back(coeff_at(P.x + t * dx / k, P.y + t * dy / k));
        out.push_back(zpoly::normalized(std::move(e), spec.p));
    }
    return out;
}

std::vector<ValidationIssue> validate(const CurveSpec& spec) {
    std::vector<ValidationIssue> issues;
    auto add = [&](const char* code, const std::string& detail) {
        issues.push_back({code, detail});
    };
    const long a = spec.a, b = spec.b, c = spec.c();
    if (a < 2) add("BadShape", "a must be >= 2");
    if (b < 0) add("BadShape", "b must be >= 0");
    if (c < 2) add("BadShape", "c = deg f must be >= 2");
    if (spec.p <= 3 || !is_probable_prime(spec.p)) {
        add("NotPrime", "p must be a prime > 3, got " + to_decimal(spec.p));
        return issues;  // nothing below is meaningful without a prime field
    }
    if (spec.p <= a) add("PrimeTooSmall", "need p > a = " + std::to_string(a));
    if (spec.p <= b + c)
        add("PrimeTooSmall", "need p > b + c = " + std::to_string(b + c));
    if (!issues.empty()) return issues;  // shape or size problems first

    const Integer& p = spec.p;
    if (reduce(spec.m[0], p) == 0) add("CoefficientZero", "m0 vanishes mod p");
    if (reduce(spec.m[c], p) == 0) add("CoefficientZero", "mc vanishes mod p");
    if (!issues.empty()) return issues;

    zpoly::Poly f = zpoly::normalized(spec.m, p);
    zpoly::Poly fp = zpoly::derivative(f, p);
    zpoly::Poly g = zpoly::gcd(f, fp, p);
    bool f_squarefree = zpoly::degree(g) == 0;
    if (!f_squarefree) add("NotSquareFree", "gcd(f, f') has degree > 0");

    for (auto& e : side_polynomials(spec)) {
        zpoly::Poly ep = zpoly::derivative(e, p);
        zpoly::Poly eg = zpoly::gcd(e, ep, p);
        if (zpoly::degree(eg) != 0) {
            add("SidePolynomialNotSquareFree", "a hull edge polynomial has a repeated root");
            break;
        }
    }

    // irreducibility of y^a - x^b f: for each prime l | a, x^b f must not be an
    // l-th power; for 4 | a, x^b f must avoid -4*(fourth powers)
    auto parts = zpoly::squarefree_decomposition(f, p);
    Integer mc = reduce(spec.m[c], p);
    auto is_kth_power_residue = [&](const Integer& t, long k) {
        Integer g2;
        mpz_gcd(g2.get_mpz_t(), Integer(k).get_mpz_t(), Integer(p - 1).get_mpz_t());
        return powm(t, (p - 1) / g2, p) == 1;
    };
    std::vector<long> prime_factors;
    long rest = a;
    for (long l = 2; l * l <= rest; ++l)
        if (rest % l == 0) {
            prime_factors.push_back(l);
            while (rest % l == 0) rest /= l;
        }
    if (rest > 1) prime_factors.push_back(rest);
    for (long l : prime_factors) {
        bool mults_ok = (b % l == 0);
        for (size_t mult = 1; mult < parts.size() && mults_ok; ++mult)
            if (zpoly::degree(parts[mult]) > 0 && mult % l != 0) mults_ok = false;
        if (mults_ok && is_kth_power_residue(mc, l))
            add("Reducible", "x^b f is an l-th power for l = " + std::to_string(l));
    }
    if (a % 4 == 0) {
        bool mults_ok = (b % 4 == 0);
        for (size_t mult = 1; mult < parts.size() && mults_ok; ++mult)
            if (zpoly::degree(parts[mult]) > 0 && mult % 4 != 0) mults_ok = false;
        Integer target = mulm(mc, invm(reduce(Integer(-4), p), p), p);
        if (mults_ok && is_kth_power_residue(target, 4))
            add("Reducible", "x^b f lies in -4*(fourth powers)");
    }
    return issues;
}

CurveSpec require_valid(const CurveSpec& spec) {
    auto issues = validate(spec);
    if (!issues.empty()) {
        std::string codes;
        for (auto& issue : issues) {
            if (!codes.empty()) codes += ", ";
            codes += issue.code;
        }
        throw PreconditionFailed("invalid curve (" + codes + "): " + format_curve(spec));
    }
    CurveSpec out = spec;
    for (auto& coef : out.m) coef = reduce(coef, out.p);
    return out;
}

bool LatticeBasis::contains(const LatticePoint& q) const {
    return std::binary_search(points.begin(), points.end(), q);
}

long LatticeBasis::index_of(const LatticePoint& q) const {
    auto it = std::lower_bound(points.begin(), points.end(), q);
    if (it == points.end() || *it != q) return -1;
    return static_cast<long>(it - points.begin());
}

LatticeBasis interior_lattice_points(long a, long b, long c) {
    LatticeBasis basis;
    auto ceil_div = [](long num, long den) { return (num + den - 1) / den; };
    for (long i = 1; i <= b; ++i) {
        // floor(-(a/b) i + a) + 1 = a - ceil(a i / b) + 1
        long lo = a - ceil_div(a * i, b) + 1;
        long hi = a - (a * i) / (b + c) - 1;  // ceil(-(a/(b+c)) i + a) - 1
        for (long j = std::max(lo, 1L); j <= hi; ++j) basis.points.push_back({i, j});
    }
    for (long i = b + 1; i <= b + c - 1; ++i) {
        long hi = a - (a * i) / (b + c) - 1;
        for (long j = 1; j <= hi; ++j) basis.points.push_back({i, j});
    }
    std::sort(basis.points.begin(), basis.points.end());
    return basis;
}

LatticeBasis interior_lattice_points(const CurveSpec& spec) {
    return interior_lattice_points(spec.a, spec.b, spec.c());
}

long genus(const CurveSpec& spec) {
    return static_cast<long>(interior_lattice_points(spec).genus());
}

ExponentPair exponent_pair(long j, long a, const Integer& p) {
    if (j < 1 || j > a) throw PreconditionFailed("need 1 <= j <= a");
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(a).get_mpz_t(), p.get_mpz_t());
    if (g != 1) throw PreconditionFailed("need gcd(p, a) = 1");
    Integer lhs = Integer(j - 1) + (p - 1) * (a - 1);
    Integer v = mulm(invm(a, p), lhs, p);
    Integer u_big = (lhs - Integer(a) * v) / p + 1;
    if ((lhs - Integer(a) * v) % p != 0 || u_big < 1 || u_big > a)
        throw PreconditionFailed("exponent pair identity failed; p not prime?");
    ExponentPair out;
    out.j = j;
    out.u = to_long(u_big);
    out.v = v;
    return out;
}

Natural s_index(long i, long j, const std::vector<Natural>& k, const CurveSpec& spec) {
    ExponentPair ep = exponent_pair(j, spec.a, spec.p);
    Natural total = 0;
    for (auto& kl : k) total += kl;
    if (total != ep.v)
        throw PreconditionFailed("k entries must sum to v_j = " + to_decimal(ep.v));
    Natural numerator = Integer(spec.b) * ep.v + i;
    for (size_t l = 1; l < k.size(); ++l) numerator += Integer(l) * k[l];
    if (numerator % spec.p != 0)
        throw NotDivisible("p does not divide " + to_decimal(numerator));
    return numerator / spec.p;
}

}  // namespace supercount
