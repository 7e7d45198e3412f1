#include "fibrerank/isogeny.hpp"

namespace fibrerank {

std::pair<Rat, Rat> isogenous_curve(const Rat& a, const Rat& b) {
  if (b == 0 || a * a - 4 * b == 0) {
    throw SingularCurveError("degenerate isogeny data (b(a^2-4b) = 0)");
  }
  return {-2 * a, a * a - 4 * b};
}

IsogenyPair make_isogeny_pair(const Rat& a, const Rat& b) {
  auto [ad, bd] = isogenous_curve(a, b);
  return IsogenyPair{a, b, ad, bd};
}

CurvePoint isogeny_image(const IsogenyPair& pair, const CurvePoint& p) {
  if (p.at_infinity || p.x == 0) return CurvePoint::infinity();
  Rat x2 = p.x * p.x;
  CurvePoint q = CurvePoint::affine(p.y * p.y / x2, p.y * (x2 - pair.b) / x2);
  internal_check(on_curve(pair.dual_curve(), q), "isogeny image left the dual curve");
  return q;
}

CurvePoint dual_isogeny_image(const IsogenyPair& pair, const CurvePoint& p) {
  if (p.at_infinity || p.x == 0) return CurvePoint::infinity();
  Rat x2 = p.x * p.x;
  // Raw image lands on y² = x³ + 4a·x² + 16b·x; scale (x,y) -> (x/4, y/8).
  Rat xi = p.y * p.y / x2;
  Rat yi = p.y * (x2 - pair.bd) / x2;
  CurvePoint q = CurvePoint::affine(xi / 4, yi / 8);
  internal_check(on_curve(pair.curve(), q), "dual isogeny image left the curve");
  return q;
}

}  // namespace fibrerank
