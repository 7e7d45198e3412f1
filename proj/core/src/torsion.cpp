#include "fibrerank/torsion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fibrerank/primality.hpp"
#include "fibrerank/residues.hpp"

namespace fibrerank {

std::string TorsionStructure::name() const {
  if (order == 1) return "trivial";
  if (!has_z2_factor) return "Z/" + std::to_string(cyclic_part);
  return "Z/2 x Z/" + std::to_string(cyclic_part);
}

namespace {

Int eval_cubic(const Int& a, const Int& b, const Int& c, const Int& x) {
  return ((x + a) * x + b) * x + c;
}

// Binary search for a root of the monic cubic on [lo, hi], where the cubic
// is monotone. Returns nothing when the bracket has no sign change.
std::optional<Int> bracket_root(const Int& a, const Int& b, const Int& c, Int lo, Int hi) {
  Int flo = eval_cubic(a, b, c, lo), fhi = eval_cubic(a, b, c, hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) return std::nullopt;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    Int fm = eval_cubic(a, b, c, mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Int> monic_cubic_integer_roots(const Int& a, const Int& b, const Int& c) {
  // Cauchy bound: all real roots lie in [-M, M].
  Int m = 1 + std::max(abs(a), std::max(abs(b), abs(c)));
  std::set<Int> roots;

  // Critical points of the derivative 3x² + 2ax + b, integer-approximated;
  // the +-2 padding absorbs the rounding, so the outer brackets are
  // guaranteed monotone and the padded zones are scanned exhaustively.
  std::vector<Int> breakpoints = {-m - 1, m + 1};
  Int disc = 4 * a * a - 12 * b;
  std::vector<std::pair<Int, Int>> zones;
  if (disc >= 0) {
    Int sq = isqrt(disc);
    for (int sign : {-1, 1}) {
      Int approx = (-2 * a + sign * sq) / 6;
      zones.emplace_back(approx - 2, approx + 2);
      breakpoints.push_back(approx - 2);
      breakpoints.push_back(approx + 2);
    }
  }
  for (const auto& [lo, hi] : zones) {
    for (Int x = lo; x <= hi; ++x) {
      if (eval_cubic(a, b, c, x) == 0) roots.insert(x);
    }
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Int lo = breakpoints[i], hi = breakpoints[i + 1];
    if (lo >= hi) continue;
    bool inside_zone = false;
    for (const auto& [zlo, zhi] : zones) {
      if (lo >= zlo && hi <= zhi) inside_zone = true;
    }
    if (inside_zone) continue;
    if (auto r = bracket_root(a, b, c, lo, hi)) roots.insert(*r);
  }
  std::vector<Int> out(roots.begin(), roots.end());
  for (const Int& r : out) internal_check(eval_cubic(a, b, c, r) == 0, "cubic root check");
  return out;
}

Int count_points_mod(const WeierstrassModel& w, const Int& ell) {
  if (ell < 3 || !w.is_integral()) throw PreconditionError("count_points_mod needs odd l, integral model");
  // Complete the square mod odd l: y² = 4x³ + b2x² + 2b4x + b6 counts the
  // same points.
  Invariants inv = raw_invariants(w);
  Int b2 = num(inv.b2) % ell, b4 = num(inv.b4) % ell, b6 = num(inv.b6) % ell;
  Int count = 1;  // point at infinity
  for (Int x = 0; x < ell; ++x) {
    Int f = (((4 * x + b2) * x + 2 * b4) * x + b6) % ell;
    if (f < 0) f += ell;
    if (f == 0) {
      count += 1;
    } else {
      count += 1 + kronecker_symbol(f, ell);
    }
  }
  return count;
}

TorsionStructure torsion_structure(const WeierstrassModel& w, const FactorBudget& budget) {
  auto [wi, clear_tr] = integral_model(w);
  compute_invariants(wi);  // reject singular input

  // Pass to the integral model eta² = xi³ + b2·xi² + 8b4·xi + 16b6
  // (xi = 4x, eta = 4(2y + a1x + a3)); torsion is Lutz-Nagell-integral
  // there, and the map back is exact.
  Invariants inv = raw_invariants(wi);
  Int A = num(inv.b2), B = 8 * num(inv.b4), C = 16 * num(inv.b6);
  WeierstrassModel wb = WeierstrassModel::short_form(A, B, C);
  Int delta_b = num(compute_invariants(wb).delta);

  // eta = 0 candidates, then eta² | delta candidates.
  std::vector<std::pair<Int, Int>> candidates;  // (xi, eta)
  for (const Int& r : monic_cubic_integer_roots(A, B, C)) candidates.emplace_back(r, 0);
  Factorization f = factorize(delta_b, budget);
  std::vector<Int> eta_values{1};
  for (const auto& [p, e] : f.factors) {
    unsigned half = e / 2;
    size_t base = eta_values.size();
    Int pk = 1;
    for (unsigned k = 1; k <= half; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) eta_values.push_back(eta_values[i] * pk);
    }
  }
  for (const Int& eta : eta_values) {
    for (const Int& r : monic_cubic_integer_roots(A, B, C - eta * eta)) {
      candidates.emplace_back(r, eta);
      candidates.emplace_back(r, -eta);
    }
  }

  // Map candidates back to the working model (xi = 4x, eta = 8y + 4a1x +
  // 4a3) and keep the ones of finite order (Mazur caps orders at 12).
  std::set<CurvePoint> torsion_points;
  torsion_points.insert(CurvePoint::infinity());
  for (const auto& [xi, eta] : candidates) {
    Rat x = make_rat(xi, 4);
    Rat y = (make_rat(eta, 4) - wi.a1 * x - wi.a3) / 2;
    CurvePoint p = CurvePoint::affine(x, y);
    if (!on_curve(wi, p)) continue;
    if (point_order(wi, p, 12)) torsion_points.insert(p);
  }

  // Subgroup closure (candidate list can miss sums only if the list is not
  // closed; adding closure is cheap and makes the structure computation
  // self-contained).
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CurvePoint> pts(torsion_points.begin(), torsion_points.end());
    for (const auto& p : pts) {
      for (const auto& q : pts) {
        CurvePoint s = point_add(wi, p, q);
        if (torsion_points.insert(s).second) grew = true;
      }
    }
  }

  TorsionStructure t;
  t.order = static_cast<unsigned>(torsion_points.size());
  unsigned max_order = 1;
  CurvePoint max_gen = CurvePoint::infinity();
  unsigned two_torsion = 0;
  for (const auto& p : torsion_points) {
    auto ord = point_order(wi, p, 12);
    internal_check(ord.has_value(), "non-torsion point in closed torsion set");
    if (*ord == 2) ++two_torsion;
    if (*ord > max_order) {
      max_order = *ord;
      max_gen = p;
    }
  }
  t.cyclic_part = max_order;
  t.has_z2_factor = (max_order < t.order);
  if (t.has_z2_factor) {
    internal_check(t.order == 2 * max_order && two_torsion == 3, "unexpected torsion shape");
  }

  static const std::set<unsigned> cyclic_ok = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  if (t.has_z2_factor) {
    internal_check(max_order % 2 == 0 && max_order <= 8, "torsion outside allowed shapes");
  } else {
    internal_check(cyclic_ok.count(t.order) == 1, "torsion outside allowed shapes");
  }

  // Generators on the caller's model.
  Transform back_to_input = clear_tr.inverse();
  auto map_back = [&](const CurvePoint& p) {
    if (p.at_infinity) return p;
    // integral model -> original model coordinates
    const Transform& tr = back_to_input;
    Rat xo = tr.u * tr.u * p.x + tr.r;
    Rat yo = tr.u * tr.u * tr.u * p.y + tr.s * tr.u * tr.u * p.x + tr.t;
    CurvePoint q = CurvePoint::affine(xo, yo);
    internal_check(on_curve(w, q), "torsion map-back left the curve");
    return q;
  };
  if (max_order > 1) t.generators.push_back(map_back(max_gen));
  if (t.has_z2_factor) {
    CurvePoint half = point_mul(wi, static_cast<long>(max_order / 2), max_gen);
    for (const auto& p : torsion_points) {
      if (point_order(wi, p, 2) == std::optional<unsigned>(2) && !(p == half)) {
        t.generators.push_back(map_back(p));
        break;
      }
    }
  }
  for (const auto& p : torsion_points) t.points.push_back(map_back(p));
  std::sort(t.points.begin(), t.points.end());

  // Cross-check: the torsion order divides #E(F_l) at two good odd primes.
  Int delta = num(raw_invariants(wi).delta);
  int checked = 0;
  Int ell = 2;
  while (checked < 2) {
    ell = next_prime(ell);
    if (delta % ell == 0) continue;
    Int n = count_points_mod(wi, ell);
    internal_check(n % t.order == 0, "torsion order does not divide #E(F_l)");
    ++checked;
  }
  return t;
}

}  // namespace fibrerank
