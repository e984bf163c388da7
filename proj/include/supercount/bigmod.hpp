#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supercount {

using Integer = mpz_class;
using Natural = mpz_class;

// error taxonomy shared by all modules; code() is stable and machine-readable
class error : public std::runtime_error {
  public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

#define SUPERCOUNT_ERROR(name)                                                 \
    class name : public error {                                               \
      public:                                                                  \
        explicit name(const std::string& what) : error(#name, what) {}         \
    }

SUPERCOUNT_ERROR(NotInvertible);
SUPERCOUNT_ERROR(NonResidue);
SUPERCOUNT_ERROR(PreconditionFailed);
SUPERCOUNT_ERROR(NotDivisible);
SUPERCOUNT_ERROR(CapExceeded);
SUPERCOUNT_ERROR(Unsupported);
SUPERCOUNT_ERROR(NotTrinomial);
SUPERCOUNT_ERROR(BadGcd);
SUPERCOUNT_ERROR(PrimeTooSmall);
SUPERCOUNT_ERROR(AmbiguousLift);
SUPERCOUNT_ERROR(NoCandidate);
SUPERCOUNT_ERROR(ModulusMismatch);
SUPERCOUNT_ERROR(NotDiagonal);
SUPERCOUNT_ERROR(TargetOutOfSupport);
SUPERCOUNT_ERROR(ParseError);

#undef SUPERCOUNT_ERROR

// value in [0, modulus), modulus >= 2; the checked pair used at api boundaries
struct Residue {
    Integer value;
    Integer modulus;

    Residue() : value(0), modulus(2) {}
    Residue(Integer v, Integer m);

    bool operator==(const Residue& o) const = default;
};

// canonical representative of x mod m, in [0, m)
Integer reduce(const Integer& x, const Integer& m);

Integer addm(const Integer& x, const Integer& y, const Integer& m);
Integer subm(const Integer& x, const Integer& y, const Integer& m);
Integer mulm(const Integer& x, const Integer& y, const Integer& m);
// base^exp mod m, exp >= 0; exp = 0 gives 1
Integer powm(const Integer& base, const Integer& exp, const Integer& m);
// throws NotInvertible when gcd(x, m) > 1; works for any modulus incl. p^m
Integer invm(const Integer& x, const Integer& m);

Residue addm(const Residue& x, const Residue& y);
Residue subm(const Residue& x, const Residue& y);
Residue mulm(const Residue& x, const Residue& y);
Residue powm(const Residue& base, const Natural& exp);
Residue invm(const Residue& x);

struct IsqrtResult {
    Natural root;
    bool exact;
};

// floor square root plus exactness flag; throws PreconditionFailed on negative input
IsqrtResult isqrt(const Natural& n);
bool is_perfect_square(const Natural& n);

bool is_probable_prime(const Integer& n);
Integer next_prime_above(const Integer& n);

Integer from_decimal(const std::string& s);
std::string to_decimal(const Integer& n);

bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);
bool fits_long(const Integer& n);
long to_long(const Integer& n);

}  // namespace supercount
