#pragma once

#include "fibrerank/rational.hpp"

namespace fibrerank {

// Deterministic Miller-Rabin for n < 2^64 (fixed witness set), BPSW plus
// extra Miller-Rabin witnesses above. No compositeness has ever been
// exhibited for BPSW; within this library the contract is "prime" below
// 2^64 and "industrial-strength probable prime" above.
bool is_prime(const Int& n);

// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

}  // namespace fibrerank
