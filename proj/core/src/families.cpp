#include "fibrerank/families.hpp"

namespace fibrerank {

std::string family_name(SurfaceFamily f) {
  return f == SurfaceFamily::legendre ? "legendre" : "neumann-setzer";
}

WeierstrassModel LegendreFibre::raw() const {
  // y² = x(x+1)(x+b)
  return WeierstrassModel::from_roots(0, -1, -b);
}

LegendreFibre fibre_model_legendre(const Rat& b) {
  if (b == 0 || b == 1) {
    throw SingularFibreError("legendre fibre over b = " + rat_to_string(b) + " is singular");
  }
  LegendreFibre f;
  f.b = b;
  Int m = num(b), n = den(b);
  // x = X/n², y = Y/n³.
  f.transform = Transform::scale(make_rat(1, n));
  f.model = apply_transform(f.raw(), f.transform);
  WeierstrassModel expected = WeierstrassModel::from_roots(0, -(n * n), -(m * n));
  internal_check(f.model == expected, "legendre clearing mismatch");
  compute_invariants(f.model);  // nonsingular by the b filter; double-check
  return f;
}

WeierstrassModel fibre_model_neumann_setzer(const Int& b) {
  return WeierstrassModel::short_form(Rat(b), -16, 0);
}

Int rational_height(const Rat& b) {
  return std::max(Int(abs(num(b))), Int(den(b)));
}

}  // namespace fibrerank
