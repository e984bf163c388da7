#pragma once

#include "supercount/bigmod.hpp"

namespace supercount {

// runtime guards for the brute-force and direct-powering paths; override with
// SUPERCOUNT_CAPS="oracle=<n>,direct=<n>" in the environment
struct Caps {
    Natural oracle;  // largest p (and p^2 for extension scans) brute force accepts
    Natural direct;  // largest p the direct polynomial-powering path accepts
};

const Caps& caps();

// parses the override string; null or empty keeps the defaults. throws
// ParseError on malformed input
Caps parse_caps(const char* text);

}  // namespace supercount
