#pragma once

#include <optional>

#include "fibrerank/rational.hpp"

namespace fibrerank {

// Kronecker symbol (a|n), n != 0. Agrees with the Legendre symbol for odd
// prime n.
int kronecker_symbol(const Int& a, const Int& n);

// Smallest nonnegative square root of a mod p (p odd prime, or 2), or
// nullopt when a is a quadratic non-residue. Tonelli-Shanks.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Legendre-style residue test without the symbol detour: is a a square
// mod the odd prime p (0 counts as a square).
bool is_square_mod_prime(const Int& a, const Int& p);

}  // namespace fibrerank
