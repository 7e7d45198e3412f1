#include "fibrerank/points.hpp"

#include <algorithm>
#include <set>

#include "fibrerank/parallel.hpp"

namespace fibrerank {

bool CurvePoint::operator<(const CurvePoint& o) const {
  if (at_infinity != o.at_infinity) return at_infinity;
  if (x != o.x) return x < o.x;
  return y < o.y;
}

std::string CurvePoint::str() const {
  if (at_infinity) return "O";
  return "(" + rat_to_string(x) + ", " + rat_to_string(y) + ")";
}

bool on_curve(const WeierstrassModel& w, const CurvePoint& p) {
  if (p.at_infinity) return true;
  Rat lhs = p.y * p.y + w.a1 * p.x * p.y + w.a3 * p.y;
  Rat rhs = p.x * p.x * p.x + w.a2 * p.x * p.x + w.a4 * p.x + w.a6;
  return lhs == rhs;
}

static void require_on_curve(const WeierstrassModel& w, const CurvePoint& p) {
  if (!on_curve(w, p)) throw PreconditionError("point " + p.str() + " not on curve " + w.str());
}

CurvePoint point_negate(const WeierstrassModel& w, const CurvePoint& p) {
  if (p.at_infinity) return p;
  return CurvePoint::affine(p.x, -p.y - w.a1 * p.x - w.a3);
}

CurvePoint point_add(const WeierstrassModel& w, const CurvePoint& p, const CurvePoint& q) {
  require_on_curve(w, p);
  require_on_curve(w, q);
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;
  const Rat &x1 = p.x, &y1 = p.y, &x2 = q.x, &y2 = q.y;
  if (x1 == x2 && y2 == -y1 - w.a1 * x1 - w.a3) return CurvePoint::infinity();

  Rat lambda, nu;
  if (x1 != x2) {
    lambda = (y2 - y1) / (x2 - x1);
    nu = (y1 * x2 - y2 * x1) / (x2 - x1);
  } else {
    Rat denom = 2 * y1 + w.a1 * x1 + w.a3;
    lambda = (3 * x1 * x1 + 2 * w.a2 * x1 + w.a4 - w.a1 * y1) / denom;
    nu = (-x1 * x1 * x1 + w.a4 * x1 + 2 * w.a6 - w.a3 * y1) / denom;
  }
  Rat x3 = lambda * lambda + w.a1 * lambda - w.a2 - x1 - x2;
  Rat y3 = -(lambda + w.a1) * x3 - nu - w.a3;
  return CurvePoint::affine(x3, y3);
}

CurvePoint point_mul(const WeierstrassModel& w, long n, const CurvePoint& p) {
  if (n < 0) return point_mul(w, -n, point_negate(w, p));
  CurvePoint acc = CurvePoint::infinity();
  CurvePoint base = p;
  while (n > 0) {
    if (n & 1) acc = point_add(w, acc, base);
    n >>= 1;
    if (n) base = point_add(w, base, base);
  }
  return acc;
}

std::optional<unsigned> point_order(const WeierstrassModel& w, const CurvePoint& p,
                                    unsigned max_order) {
  CurvePoint acc = p;
  for (unsigned n = 1; n <= max_order; ++n) {
    if (acc.at_infinity) return n;
    acc = point_add(w, acc, p);
  }
  return std::nullopt;
}

std::vector<CurvePoint> naive_point_search(const WeierstrassModel& w, const Int& height_bound,
                                           int jobs) {
  if (!w.is_integral()) throw PreconditionError("naive_point_search needs an integral model");
  if (height_bound <= 0) return {};
  const Int H = height_bound;
  const Int a1 = num(w.a1), a2 = num(w.a2), a3 = num(w.a3), a4 = num(w.a4), a6 = num(w.a6);
  const long emax = isqrt(H).get_si();

  std::vector<std::vector<CurvePoint>> per_e(static_cast<size_t>(emax) + 1);
  parallel_for(emax, jobs, [&](long idx) {
    Int e = idx + 1;
    Int e2 = e * e, e3 = e2 * e, e4 = e2 * e2, e6 = e3 * e3;
    std::vector<CurvePoint>& out = per_e[static_cast<size_t>(idx) + 1];
    for (Int m = -H; m <= H; ++m) {
      if (gcd(m, e) != 1) continue;
      // Clear y² + (a1x + a3)y = f(x) at x = m/e² by e⁶; y = Y/e³ with
      // 2Y + (a1 m e + a3 e³) = ±sqrt(DD).
      Int f_cleared = m * m * m + a2 * m * m * e2 + a4 * m * e4 + a6 * e6;
      Int lin = a1 * m * e + a3 * e3;
      Int dd = lin * lin + 4 * f_cleared;
      if (dd < 0) continue;
      if (!is_square(dd)) continue;
      Int root = isqrt(dd);
      Rat x = make_rat(m, e2);
      for (int sign : {1, -1}) {
        Int ynum = -lin + sign * root;
        if (ynum % 2 != 0) continue;
        Rat y = make_rat(ynum / 2, e3);
        CurvePoint p = CurvePoint::affine(x, y);
        internal_check(on_curve(w, p), "search produced off-curve point");
        out.push_back(p);
        if (root == 0) break;
      }
    }
  });

  std::set<CurvePoint> dedup;
  for (const auto& chunk : per_e) dedup.insert(chunk.begin(), chunk.end());
  return {dedup.begin(), dedup.end()};
}

}  // namespace fibrerank
