#include "supercount/bigmod.hpp"

#include <limits>

namespace supercount {

Residue::Residue(Integer v, Integer m) : value(std::move(v)), modulus(std::move(m)) {
    if (modulus < 2) throw PreconditionFailed("residue modulus must be >= 2");
    value = reduce(value, modulus);
}

Integer reduce(const Integer& x, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer addm(const Integer& x, const Integer& y, const Integer& m) {
    return reduce(x + y, m);
}

Integer subm(const Integer& x, const Integer& y, const Integer& m) {
    return reduce(x - y, m);
}

Integer mulm(const Integer& x, const Integer& y, const Integer& m) {
    return reduce(x * y, m);
}

Integer powm(const Integer& base, const Integer& exp, const Integer& m) {
    if (exp < 0) throw PreconditionFailed("powm exponent must be >= 0");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer invm(const Integer& x, const Integer& m) {
    Integer r;
    int ok = mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (!ok) throw NotInvertible(to_decimal(reduce(x, m)) + " mod " + to_decimal(m));
    return r;
}

static void check_same_modulus(const Residue& x, const Residue& y) {
    if (x.modulus != y.modulus)
        throw ModulusMismatch(to_decimal(x.modulus) + " vs " + to_decimal(y.modulus));
}

Residue addm(const Residue& x, const Residue& y) {
    check_same_modulus(x, y);
    return Residue(addm(x.value, y.value, x.modulus), x.modulus);
}

Residue subm(const Residue& x, const Residue& y) {
    check_same_modulus(x, y);
    return Residue(subm(x.value, y.value, x.modulus), x.modulus);
}

Residue mulm(const Residue& x, const Residue& y) {
    check_same_modulus(x, y);
    return Residue(mulm(x.value, y.value, x.modulus), x.modulus);
}

Residue powm(const Residue& base, const Natural& exp) {
    return Residue(powm(base.value, exp, base.modulus), base.modulus);
}

Residue invm(const Residue& x) {
    return Residue(invm(x.value, x.modulus), x.modulus);
}

IsqrtResult isqrt(const Natural& n) {
    if (n < 0) throw PreconditionFailed("isqrt of negative number");
    Natural root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return {root, root * root == n};
}

bool is_perfect_square(const Natural& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Integer next_prime_above(const Integer& n) {
    Integer r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer from_decimal(const std::string& s) {
    Integer r;
    if (s.empty() || mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("not a decimal integer: '" + s + "'");
    return r;
}

std::string to_decimal(const Integer& n) {
    return n.get_str(10);
}

bool fits_u64(const Integer& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& n) {
    if (!fits_u64(n)) throw PreconditionFailed("integer does not fit u64: " + to_decimal(n));
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    return lo;
}

bool fits_long(const Integer& n) {
    return n.fits_slong_p();
}

long to_long(const Integer& n) {
    if (!fits_long(n)) throw PreconditionFailed("integer does not fit long: " + to_decimal(n));
    return n.get_si();
}

}  // namespace supercount
