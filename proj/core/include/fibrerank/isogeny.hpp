#pragma once

#include "fibrerank/points.hpp"
#include "fibrerank/weierstrass.hpp"

namespace fibrerank {

// Curves y² = x³ + ax² + bx linked by the standard 2-isogeny with kernel
// <(0,0)>; (a', b') = (-2a, a² - 4b), and the composite of the two
// isogenies is multiplication by 2 (up to the u = 2 rescaling).
struct IsogenyPair {
  Rat a, b;        // E
  Rat ad, bd;      // E'
  WeierstrassModel curve() const { return WeierstrassModel::short_form(a, b, 0); }
  WeierstrassModel dual_curve() const { return WeierstrassModel::short_form(ad, bd, 0); }
};

// (a', b') = (-2a, a² - 4b); rejects singular inputs (b or a²-4b zero).
std::pair<Rat, Rat> isogenous_curve(const Rat& a, const Rat& b);

IsogenyPair make_isogeny_pair(const Rat& a, const Rat& b);

// The isogeny with kernel <(0,0)>: (x,y) -> (y²/x², y(x² - b)/x²).
CurvePoint isogeny_image(const IsogenyPair& pair, const CurvePoint& p);
// The dual map E' -> E (the same formula followed by the u = 2 scaling).
CurvePoint dual_isogeny_image(const IsogenyPair& pair, const CurvePoint& p);

}  // namespace fibrerank
