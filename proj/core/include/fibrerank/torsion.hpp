#pragma once

#include <vector>

#include "fibrerank/factorization.hpp"
#include "fibrerank/points.hpp"

namespace fibrerank {

// Torsion subgroup in one of the fifteen shapes allowed over Q:
// Z/n for n in 1..10, 12, or Z/2 x Z/2m for m in 1..4.
struct TorsionStructure {
  unsigned order = 1;
  unsigned cyclic_part = 1;    // order of the largest cyclic factor
  bool has_z2_factor = false;  // true for the Z/2 x Z/2m shapes
  std::vector<CurvePoint> generators;
  std::vector<CurvePoint> points;  // the whole subgroup, sorted (incl. O)

  std::string name() const;  // "trivial", "Z/6", "Z/2 x Z/4", ...
};

// Exact torsion subgroup: Lutz–Nagell candidates filtered by order
// computation (capped at 12), cross-checked against #E(F_l) for two good
// primes. Accepts any model; clears to an integral one internally.
TorsionStructure torsion_structure(const WeierstrassModel& w, const FactorBudget& budget = {});

// Integer roots of the monic cubic x³ + ax² + bx + c, ascending.
std::vector<Int> monic_cubic_integer_roots(const Int& a, const Int& b, const Int& c);

// #E(F_l) for an odd prime l of good reduction (brute-force character sum).
Int count_points_mod(const WeierstrassModel& w, const Int& ell);

}  // namespace fibrerank
