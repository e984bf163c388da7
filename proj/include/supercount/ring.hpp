#pragma once

#include "supercount/bigmod.hpp"

#include <cstdint>

namespace supercount {

// fixed-modulus rings behind the bsgs inner loops. both expose the same
// interface; RingMont is the fast path (odd modulus below 2^62), RingMpz
// covers everything else including even moduli

class RingMont {
  public:
    using Elem = std::uint64_t;  // montgomery form, in [0, n)

    explicit RingMont(const Integer& modulus) : big_n_(modulus) {
        if (!eligible(modulus))
            throw PreconditionFailed("montgomery ring wants an odd modulus in [3, 2^62)");
        n_ = to_u64(modulus);
        // newton lift of n^{-1} mod 2^3 (odd squares are 1 mod 8) up to 2^64
        std::uint64_t inv = n_;
        for (int it = 0; it < 5; ++it) inv *= 2 - n_ * inv;
        neg_inv_ = ~inv + 1;
        r2_ = to_u64(((Integer(1) << 64) % modulus * ((Integer(1) << 64) % modulus)) % modulus);
        one_ = redc(r2_);
    }

    static bool eligible(const Integer& modulus) {
        return modulus >= 3 && modulus % 2 == 1 && fits_u64(modulus) &&
               to_u64(modulus) < (std::uint64_t(1) << 62);
    }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        std::uint64_t s = a + b;  // n < 2^62 keeps this overflow-free
        return s >= n_ ? s - n_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (n_ - b); }
    Elem mul(Elem a, Elem b) const { return redc(static_cast<unsigned __int128>(a) * b); }
    Elem from_integer(const Integer& x) const {
        return mul(to_u64(reduce(x, big_n_)), r2_);
    }
    Integer to_integer(Elem a) const { return Integer(static_cast<unsigned long>(redc(a))); }
    const Integer& modulus() const { return big_n_; }

  private:
    Elem redc(unsigned __int128 T) const {
        std::uint64_t m = static_cast<std::uint64_t>(T) * neg_inv_;
        std::uint64_t t =
            static_cast<std::uint64_t>((T + static_cast<unsigned __int128>(m) * n_) >> 64);
        return t >= n_ ? t - n_ : t;
    }

    Integer big_n_;
    std::uint64_t n_ = 0, neg_inv_ = 0, r2_ = 0, one_ = 0;
};

class RingMpz {
  public:
    using Elem = Integer;

    explicit RingMpz(Integer modulus) : n_(std::move(modulus)) {
        if (n_ < 2) throw PreconditionFailed("modulus must be >= 2");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const {
        Integer s = a + b;
        if (s >= n_) s -= n_;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Integer s = a - b;
        if (s < 0) s += n_;
        return s;
    }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % n_; }
    Elem from_integer(const Integer& x) const { return reduce(x, n_); }
    Integer to_integer(const Elem& a) const { return a; }
    const Integer& modulus() const { return n_; }

  private:
    Integer n_;
};

}  // namespace supercount
