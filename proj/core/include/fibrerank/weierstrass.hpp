#pragma once

#include <array>
#include <string>

#include "fibrerank/rational.hpp"

namespace fibrerank {

// Long Weierstrass equation y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6.
// The struct itself stores nothing derived; singularity is diagnosed by
// compute_invariants, so that degenerate equations can be constructed and
// then rejected with a proper error.
struct WeierstrassModel {
  Rat a1, a2, a3, a4, a6;

  bool operator==(const WeierstrassModel&) const = default;

  bool is_integral() const;
  // Comma-separated exact fractions "a1,a2,a3,a4,a6".
  std::string str() const;
  static WeierstrassModel from_string(const std::string& s);

  // y² = x³ + a·x² + b·x + c shorthand.
  static WeierstrassModel short_form(const Rat& a, const Rat& b, const Rat& c);
  // y² = (x - e1)(x - e2)(x - e3).
  static WeierstrassModel from_roots(const Rat& e1, const Rat& e2, const Rat& e3);
};

struct Invariants {
  Rat b2, b4, b6, b8, c4, c6, delta, j;
};

// Exact b/c/Δ/j invariants; throws SingularCurveError when Δ = 0.
Invariants compute_invariants(const WeierstrassModel& w);
// Same but tolerates Δ = 0 (j left at 0); used by singularity checks.
Invariants raw_invariants(const WeierstrassModel& w);

// Change of variables x = u²x' + r, y = u³y' + s·u²x' + t with u ≠ 0.
struct Transform {
  Rat u = 1, r = 0, s = 0, t = 0;

  bool operator==(const Transform&) const = default;
  static Transform identity() { return {}; }
  static Transform scale(const Rat& u) { return {u, 0, 0, 0}; }

  // Transform equal to applying *this first, then next.
  Transform then(const Transform& next) const;
  Transform inverse() const;
};

WeierstrassModel apply_transform(const WeierstrassModel& w, const Transform& t);

// Scales the model to integral coefficients (x,y) -> (x/d², y/d³); returns
// the transform actually used.
std::pair<WeierstrassModel, Transform> integral_model(const WeierstrassModel& w);

}  // namespace fibrerank
