#pragma once

#include "fibrerank/weierstrass.hpp"

namespace fibrerank {

enum class SurfaceFamily { legendre, neumann_setzer };

std::string family_name(SurfaceFamily f);

// Fibre y² = x(x+1)(x+b) cleared to the integral model
// Y² = X(X + n²)(X + mn) for b = m/n in lowest terms; keeps the 2-torsion
// at the integer roots 0, -n², -mn.
struct LegendreFibre {
  Rat b;
  WeierstrassModel model;      // the integral cleared model
  Transform transform;         // raw fibre -> integral model
  WeierstrassModel raw() const;  // y² = x(x+1)(x+b)
};

// The fibres over b = 0 and b = 1 are singular (the discriminant of the
// family is 16t²(t-1)²); SingularFibreError for those.
LegendreFibre fibre_model_legendre(const Rat& b);

// y² = x³ + bx² - 16x; nonsingular for every integer b.
WeierstrassModel fibre_model_neumann_setzer(const Int& b);

// Naive height of m/n in lowest terms: max(|m|, n).
Int rational_height(const Rat& b);

}  // namespace fibrerank
