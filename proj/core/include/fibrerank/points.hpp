#pragma once

#include <optional>
#include <vector>

#include "fibrerank/weierstrass.hpp"

namespace fibrerank {

// Point of E(Q): the marker at infinity or an affine pair satisfying the
// model equation exactly.
struct CurvePoint {
  bool at_infinity = true;
  Rat x = 0, y = 0;

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(const Rat& x, const Rat& y) { return {false, x, y}; }

  bool operator==(const CurvePoint&) const = default;
  // Deterministic ordering: infinity first, then lexicographic (x, y).
  bool operator<(const CurvePoint& o) const;
  std::string str() const;
};

bool on_curve(const WeierstrassModel& w, const CurvePoint& p);

CurvePoint point_negate(const WeierstrassModel& w, const CurvePoint& p);
// Chord-tangent sum; rejects off-curve inputs.
CurvePoint point_add(const WeierstrassModel& w, const CurvePoint& p, const CurvePoint& q);
CurvePoint point_mul(const WeierstrassModel& w, long n, const CurvePoint& p);

// Order of p if it divides max_order, otherwise nullopt (p has larger or
// infinite order).
std::optional<unsigned> point_order(const WeierstrassModel& w, const CurvePoint& p,
                                    unsigned max_order = 12);

// All affine points with x = m/e², |m| <= H, 1 <= e <= sqrt(H), gcd(m,e)=1,
// on an integral model. Sorted, deduplicated. The two y-roots over each x
// are both reported.
std::vector<CurvePoint> naive_point_search(const WeierstrassModel& w, const Int& height_bound,
                                           int jobs = 0);

}  // namespace fibrerank
