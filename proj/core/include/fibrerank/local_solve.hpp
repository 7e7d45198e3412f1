#pragma once

#include <array>

#include "fibrerank/rational.hpp"

namespace fibrerank {

// Everywhere-local solvability building blocks for the descent torsors.
// Decisions over Q_p follow the effective refinement scheme: residue
// classes mod p^k are searched with Hensel-liftability certificates, and a
// class is discarded only when the certificate shows no refinement can
// succeed. The recursion depth is capped by the valuation of (16 times)
// the relevant discriminant data plus a fixed margin, so an exhausted
// search is a bug, not an answer.

// Binary quartic F(u,v) = c0 u⁴ + c1 u³v + c2 u²v² + c3 uv³ + c4 v⁴,
// coefficients integral.
using BinaryQuartic = std::array<Int, 5>;

Int binary_quartic_disc(const BinaryQuartic& f);

// Does w² = F(u,v) have a Q_p-point with (u,v) != (0,0)?
bool quartic_locally_solvable(const BinaryQuartic& f, const Int& p);

// Does w² = F(u,v) have a real point with (u,v) != (0,0)? Implemented for
// the biquadratic case (c1 = c3 = 0) by exact sign analysis.
bool biquadratic_really_solvable(const BinaryQuartic& f);

// Simultaneous square-class conditions: is there x in Q_p with
// x - e_i in d_i·(Q_p*)² ∪ {0} for all three i? This is exactly local
// solvability of the complete-2-descent torsor with D = (d1, d2, d1·d2).
bool class_conditions_locally_solvable(const std::array<Int, 3>& e, const std::array<Int, 3>& d,
                                       const Int& p);

bool class_conditions_really_solvable(const std::array<Int, 3>& e, const std::array<Int, 3>& d);

// x != 0 a square in Q_p.
bool is_padic_square(const Int& x, const Int& p);

}  // namespace fibrerank
