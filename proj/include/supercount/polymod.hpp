#pragma once

#include "supercount/bigmod.hpp"

#include <cstdint>
#include <vector>

namespace supercount::polymod {

using u64 = std::uint64_t;

// dense polynomials mod p, ascending coefficients, p < 2^31 (enough for the
// capped reference paths; the bgs module has its own ring layer)
constexpr u64 kMaxModulus = (1ULL << 31) - 1;

std::vector<u64> from_big(const std::vector<Integer>& f, u64 p);
u64 coeff(const std::vector<u64>& f, std::uint64_t t);  // 0 outside support

std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p);
std::vector<u64> pow(const std::vector<u64>& base, u64 e, u64 p);

}  // namespace supercount::polymod
