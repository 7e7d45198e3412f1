#pragma once

#include <vector>

#include "fibrerank/families.hpp"
#include "fibrerank/places.hpp"
#include "fibrerank/tate.hpp"

namespace fibrerank {

// Generic fibre of a family as a model over Q(t).
struct SurfaceModel {
  RatFunc a1, a2, a3, a4, a6;
};

SurfaceModel generic_fibre(SurfaceFamily f);

struct SurfaceFibreEntry {
  Place place = Place::at_infinity();
  Kodaira kodaira;
  long v_delta_min = 0;
};

struct SurfaceFibreReport {
  SurfaceFamily family = SurfaceFamily::legendre;
  std::vector<SurfaceFibreEntry> fibres;  // finite places ascending, infinity last
  long euler_sum = 0;                     // contributions weighted by place degree
  // The Legendre discriminant 16t²(t-1)² puts the finite singular fibres at
  // t = 0 and t = 1; the fibre at t = -1 is smooth. This flag records that
  // computation so downstream consumers can cross-check tabulated loci.
  bool t_plus_one_smooth = false;
  long generic_mordell_weil_rank = 0;
};

// Runs the Tate algorithm over Q[t] at every finite place dividing the
// family discriminant and at infinity (via t = 1/s). Asserts the Euler-sum
// bookkeeping (12 for these rational elliptic surfaces).
SurfaceFibreReport surface_fibre_types(SurfaceFamily family);

// The visible torsion sections of the family, checked symbolically against
// the generic equation. Legendre: (0,0), (-1,0), (-t,0); Neumann-Setzer:
// (0,0).
std::vector<std::pair<RatFunc, RatFunc>> torsion_sections(SurfaceFamily family);

}  // namespace fibrerank
